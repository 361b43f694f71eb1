#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "invnum/vertex_set.hpp"

namespace invnum {

struct Arc {
    Vertex tail;
    Vertex head;
    auto operator<=>(const Arc&) const = default;
};

/// Loop-free digraph without 2-cycles on the dense vertex range 0..n-1.
///
/// Adjacency is kept as out- and in-neighbour bit rows. Vertices may carry
/// display labels (the names used in the literature, e.g. "v1" or "y3");
/// labels never take part in equality.
class OrientedGraph {
public:
    OrientedGraph() = default;
    explicit OrientedGraph(std::size_t n);

    /// Throws InputError on loops, 2-cycles or out-of-range endpoints.
    /// Repeated arcs are rejected as well.
    static OrientedGraph from_arcs(std::size_t n, const std::vector<Arc>& arcs);

    std::size_t order() const { return n_; }
    std::size_t arc_count() const;

    bool has_arc(Vertex u, Vertex v) const { return out_[u].contains(v); }
    bool adjacent(Vertex u, Vertex v) const { return has_arc(u, v) || has_arc(v, u); }

    /// Adds u->v. Adding an existing arc is a no-op; a loop or the reverse
    /// of an existing arc throws InputError.
    void add_arc(Vertex u, Vertex v);
    void remove_arc(Vertex u, Vertex v);
    /// Replaces u->v by v->u. Requires u->v to be present.
    void reverse_arc(Vertex u, Vertex v);

    const VertexSet& out_neighbours(Vertex v) const { return out_[v]; }
    const VertexSet& in_neighbours(Vertex v) const { return in_[v]; }
    std::size_t out_degree(Vertex v) const { return out_[v].size(); }
    std::size_t in_degree(Vertex v) const { return in_[v].size(); }

    /// Arcs sorted by (tail, head).
    std::vector<Arc> arcs() const;

    bool is_tournament() const;

    /// Sub-digraph induced by `keep`; vertex i of the result is the i-th
    /// smallest member of `keep`. Labels are carried over.
    OrientedGraph induced(const VertexSet& keep) const;
    OrientedGraph without_vertex(Vertex v) const;
    /// Same vertices with every arc reversed.
    OrientedGraph reversed() const;

    VertexSet empty_set() const { return VertexSet(n_); }
    VertexSet all_vertices() const { return VertexSet::full(n_); }

    /// Display name of v: its label if one was set, otherwise its index.
    std::string label(Vertex v) const;
    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels);
    void clear_labels() { labels_.clear(); }
    /// Index of the vertex carrying `name`; throws InputError if absent.
    Vertex vertex_named(const std::string& name) const;
    VertexSet set_named(const std::vector<std::string>& names) const;

    /// Structural equality: same order and same arcs.
    bool operator==(const OrientedGraph& o) const { return n_ == o.n_ && out_ == o.out_; }

private:
    void check_vertex(Vertex v) const;

    std::size_t n_ = 0;
    std::vector<VertexSet> out_;
    std::vector<VertexSet> in_;
    std::vector<std::string> labels_;
};

}  // namespace invnum
