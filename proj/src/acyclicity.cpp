#include "invnum/acyclicity.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <queue>

#include "invnum/errors.hpp"

namespace invnum {

OrderingOrCycle acyclic_ordering(const OrientedGraph& d) {
    const std::size_t n = d.order();
    std::vector<std::size_t> indeg(n);
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
    for (Vertex v = 0; v < n; ++v) {
        indeg[v] = d.in_degree(v);
        if (indeg[v] == 0) ready.push(v);
    }
    OrderingOrCycle result;
    while (!ready.empty()) {
        Vertex v = ready.top();
        ready.pop();
        result.ordering.push_back(v);
        d.out_neighbours(v).for_each([&](Vertex w) {
            if (--indeg[w] == 0) ready.push(w);
        });
    }
    if (result.ordering.size() == n) return result;

    // Every leftover vertex keeps an in-neighbour among the leftovers, so
    // walking backwards must revisit a vertex.
    VertexSet left = d.all_vertices();
    for (Vertex v : result.ordering) left.erase(v);
    std::vector<int> seen_at(n, -1);
    std::vector<Vertex> walk;
    Vertex cur = left.members().front();
    while (seen_at[cur] < 0) {
        seen_at[cur] = static_cast<int>(walk.size());
        walk.push_back(cur);
        cur = (d.in_neighbours(cur) & left).members().front();
    }
    std::vector<Vertex> cycle(walk.begin() + seen_at[cur], walk.end());
    std::reverse(cycle.begin(), cycle.end());
    // Rotate so the smallest vertex leads; keeps witnesses deterministic.
    std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
    result.cycle = std::move(cycle);
    return result;
}

bool is_acyclic(const OrientedGraph& d) {
    return acyclic_ordering(d).acyclic();
}

std::vector<Vertex> shortest_cycle(const OrientedGraph& d) {
    const std::size_t n = d.order();
    std::vector<Vertex> best;
    for (Vertex root = 0; root < n; ++root) {
        // BFS from root; the first in-neighbour of root reached closes a
        // shortest cycle through root.
        std::vector<int> parent(n, -1);
        std::vector<int> dist(n, -1);
        std::deque<Vertex> queue{root};
        dist[root] = 0;
        int closing = -1;
        while (!queue.empty() && closing < 0) {
            Vertex u = queue.front();
            queue.pop_front();
            if (!best.empty() && static_cast<std::size_t>(dist[u]) + 1 >= best.size()) break;
            if (d.has_arc(u, root)) {
                closing = static_cast<int>(u);
                break;
            }
            d.out_neighbours(u).for_each([&](Vertex w) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = static_cast<int>(u);
                    queue.push_back(w);
                }
            });
        }
        if (closing < 0) continue;
        std::vector<Vertex> cycle;
        for (int v = closing; v >= 0; v = parent[v]) cycle.push_back(static_cast<Vertex>(v));
        std::reverse(cycle.begin(), cycle.end());
        if (best.empty() || cycle.size() < best.size()) best = std::move(cycle);
    }
    return best;
}

namespace {

VertexSet reach(const OrientedGraph& d, Vertex from, bool forward) {
    VertexSet seen(d.order());
    seen.insert(from);
    std::vector<Vertex> stack{from};
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        const VertexSet& next = forward ? d.out_neighbours(u) : d.in_neighbours(u);
        (next - seen).for_each([&](Vertex w) {
            seen.insert(w);
            stack.push_back(w);
        });
    }
    return seen;
}

}  // namespace

std::vector<std::vector<Vertex>> strongly_connected_components(const OrientedGraph& d) {
    std::vector<std::vector<Vertex>> comps;
    VertexSet assigned(d.order());
    for (Vertex v = 0; v < d.order(); ++v) {
        if (assigned.contains(v)) continue;
        VertexSet comp = reach(d, v, true) & reach(d, v, false);
        assigned |= comp;
        comps.push_back(comp.members());
    }
    return comps;
}

bool is_strongly_connected(const OrientedGraph& d) {
    return d.order() == 0 || strongly_connected_components(d).size() == 1;
}

StrippedGraph strip_sources_sinks(const OrientedGraph& d) {
    StrippedGraph out;
    VertexSet alive = d.all_vertices();
    bool changed = true;
    while (changed) {
        changed = false;
        for (Vertex v = 0; v < d.order(); ++v) {
            if (!alive.contains(v)) continue;
            bool source = !d.in_neighbours(v).intersects(alive);
            bool sink = !d.out_neighbours(v).intersects(alive);
            if (source || sink) {
                alive.erase(v);
                out.removed.push_back({v, source});
                changed = true;
            }
        }
    }
    out.kept = alive.members();
    out.graph = d.induced(alive);
    return out;
}

bool is_transitive_with(const OrientedGraph& t, Vertex s, Vertex sink) {
    if (!t.is_tournament()) throw InputError("is_transitive_with expects a tournament");
    if (s >= t.order() || sink >= t.order()) throw InputError("vertex out of range");
    return t.in_degree(s) == 0 && t.out_degree(sink) == 0 && is_acyclic(t);
}

namespace {

struct IsoSearch {
    const OrientedGraph& a;
    const OrientedGraph& b;
    std::vector<int> map;      // a-vertex -> b-vertex
    std::vector<bool> used;    // b-vertex taken

    bool extend(Vertex u) {
        if (u == a.order()) return true;
        for (Vertex cand = 0; cand < b.order(); ++cand) {
            if (used[cand]) continue;
            if (a.in_degree(u) != b.in_degree(cand) || a.out_degree(u) != b.out_degree(cand))
                continue;
            bool ok = true;
            for (Vertex w = 0; w < u && ok; ++w) {
                auto bw = static_cast<Vertex>(map[w]);
                ok = a.has_arc(u, w) == b.has_arc(cand, bw) && a.has_arc(w, u) == b.has_arc(bw, cand);
            }
            if (!ok) continue;
            map[u] = static_cast<int>(cand);
            used[cand] = true;
            if (extend(u + 1)) return true;
            used[cand] = false;
        }
        return false;
    }
};

}  // namespace

bool are_isomorphic(const OrientedGraph& a, const OrientedGraph& b) {
    if (a.order() != b.order() || a.arc_count() != b.arc_count()) return false;
    IsoSearch search{a, b, std::vector<int>(a.order(), -1), std::vector<bool>(b.order(), false)};
    return search.extend(0);
}

}  // namespace invnum
