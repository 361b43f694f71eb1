#include "invnum/oriented_graph.hpp"

#include "invnum/errors.hpp"

namespace invnum {

OrientedGraph::OrientedGraph(std::size_t n)
    : n_(n), out_(n, VertexSet(n)), in_(n, VertexSet(n)) {}

OrientedGraph OrientedGraph::from_arcs(std::size_t n, const std::vector<Arc>& arcs) {
    OrientedGraph g(n);
    for (const Arc& a : arcs) {
        g.check_vertex(a.tail);
        g.check_vertex(a.head);
        if (g.has_arc(a.tail, a.head))
            throw InputError("repeated arc " + std::to_string(a.tail) + "->" +
                             std::to_string(a.head));
        g.add_arc(a.tail, a.head);
    }
    return g;
}

void OrientedGraph::check_vertex(Vertex v) const {
    if (v >= n_)
        throw InputError("vertex " + std::to_string(v) + " out of range for order " +
                         std::to_string(n_));
}

std::size_t OrientedGraph::arc_count() const {
    std::size_t m = 0;
    for (const auto& row : out_) m += row.size();
    return m;
}

void OrientedGraph::add_arc(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InputError("loop at vertex " + std::to_string(u));
    if (has_arc(v, u))
        throw InputError("2-cycle between " + std::to_string(u) + " and " + std::to_string(v));
    out_[u].insert(v);
    in_[v].insert(u);
}

void OrientedGraph::remove_arc(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    out_[u].erase(v);
    in_[v].erase(u);
}

void OrientedGraph::reverse_arc(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (!has_arc(u, v))
        throw InputError("no arc " + std::to_string(u) + "->" + std::to_string(v) + " to reverse");
    remove_arc(u, v);
    add_arc(v, u);
}

std::vector<Arc> OrientedGraph::arcs() const {
    std::vector<Arc> out;
    for (Vertex u = 0; u < n_; ++u) out_[u].for_each([&](Vertex v) { out.push_back({u, v}); });
    return out;
}

bool OrientedGraph::is_tournament() const {
    for (Vertex v = 0; v < n_; ++v)
        if (out_[v].size() + in_[v].size() != n_ - 1) return false;
    return true;
}

OrientedGraph OrientedGraph::induced(const VertexSet& keep) const {
    if (keep.universe() != n_) throw InputError("vertex set does not match graph order");
    std::vector<Vertex> old_ids = keep.members();
    std::vector<Vertex> new_id(n_, 0);
    for (std::size_t i = 0; i < old_ids.size(); ++i) new_id[old_ids[i]] = static_cast<Vertex>(i);
    OrientedGraph g(old_ids.size());
    for (std::size_t i = 0; i < old_ids.size(); ++i) {
        (out_[old_ids[i]] & keep).for_each([&](Vertex w) {
            g.add_arc(static_cast<Vertex>(i), new_id[w]);
        });
    }
    if (has_labels()) {
        std::vector<std::string> labels;
        for (Vertex v : old_ids) labels.push_back(labels_[v]);
        g.labels_ = std::move(labels);
    }
    return g;
}

OrientedGraph OrientedGraph::without_vertex(Vertex v) const {
    check_vertex(v);
    VertexSet keep = all_vertices();
    keep.erase(v);
    return induced(keep);
}

OrientedGraph OrientedGraph::reversed() const {
    OrientedGraph g(n_);
    g.out_ = in_;
    g.in_ = out_;
    g.labels_ = labels_;
    return g;
}

std::string OrientedGraph::label(Vertex v) const {
    check_vertex(v);
    return has_labels() ? labels_[v] : std::to_string(v);
}

void OrientedGraph::set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != n_)
        throw InputError("expected " + std::to_string(n_) + " labels, got " +
                         std::to_string(labels.size()));
    labels_ = std::move(labels);
}

Vertex OrientedGraph::vertex_named(const std::string& name) const {
    for (Vertex v = 0; v < n_; ++v)
        if (label(v) == name) return v;
    throw InputError("no vertex labelled '" + name + "'");
}

VertexSet OrientedGraph::set_named(const std::vector<std::string>& names) const {
    VertexSet s(n_);
    for (const auto& name : names) s.insert(vertex_named(name));
    return s;
}

}  // namespace invnum
