#include "invnum/inversion.hpp"

#include "invnum/errors.hpp"

namespace invnum {

OrientedGraph invert(const OrientedGraph& d, const VertexSet& x) {
    if (x.universe() != d.order())
        throw InputError("inverted set is over " + std::to_string(x.universe()) +
                         " vertices, graph has " + std::to_string(d.order()));
    OrientedGraph result = d;
    // Collect first: reversing in place would make later rows see flipped arcs.
    std::vector<Arc> flip;
    x.for_each([&](Vertex u) {
        (d.out_neighbours(u) & x).for_each([&](Vertex v) { flip.push_back({u, v}); });
    });
    for (const Arc& a : flip) result.remove_arc(a.tail, a.head);
    for (const Arc& a : flip) result.add_arc(a.head, a.tail);
    return result;
}

OrientedGraph apply_family(const OrientedGraph& d, const DecyclingFamily& family) {
    OrientedGraph result = d;
    for (const VertexSet& x : family.sets) result = invert(result, x);
    return result;
}

std::size_t co_membership(const DecyclingFamily& family, Vertex u, Vertex v) {
    std::size_t c = 0;
    for (const VertexSet& x : family.sets)
        if (x.contains(u) && x.contains(v)) ++c;
    return c;
}

}  // namespace invnum
