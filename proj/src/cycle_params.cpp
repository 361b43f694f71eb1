#include "invnum/cycle_params.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <map>

#include "invnum/errors.hpp"

namespace invnum {

namespace {

using Rows = std::vector<VertexSet>;

/// Shortest directed cycle inside `alive` (loops count as length 1).
std::vector<Vertex> shortest_cycle_in(const Rows& out, const VertexSet& alive) {
    const std::size_t n = out.size();
    std::vector<Vertex> best;
    alive.for_each([&](Vertex root) {
        if (best.size() == 1) return;
        if (out[root].contains(root)) {
            best = {root};
            return;
        }
        std::vector<int> parent(n, -1);
        std::vector<int> dist(n, -1);
        std::deque<Vertex> queue{root};
        dist[root] = 0;
        int closing = -1;
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            if (!best.empty() && static_cast<std::size_t>(dist[u]) + 1 >= best.size()) break;
            if (u != root && out[u].contains(root)) {
                closing = static_cast<int>(u);
                break;
            }
            (out[u] & alive).for_each([&](Vertex w) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = static_cast<int>(u);
                    queue.push_back(w);
                }
            });
        }
        if (closing < 0) return;
        std::vector<Vertex> cycle;
        for (int v = closing; v >= 0; v = parent[v]) cycle.push_back(static_cast<Vertex>(v));
        std::reverse(cycle.begin(), cycle.end());
        if (best.empty() || cycle.size() < best.size()) best = std::move(cycle);
    });
    return best;
}

VertexSet reach_in(const Rows& rows, const VertexSet& alive, Vertex from) {
    VertexSet seen(rows.size());
    seen.insert(from);
    std::vector<Vertex> stack{from};
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        ((rows[u] & alive) - seen).for_each([&](Vertex w) {
            seen.insert(w);
            stack.push_back(w);
        });
    }
    return seen;
}

/// Strong components of the sub-digraph on `alive` that contain a cycle.
std::vector<VertexSet> cyclic_components(const Rows& out, const Rows& in, const VertexSet& alive) {
    std::vector<VertexSet> comps;
    VertexSet assigned(out.size());
    alive.for_each([&](Vertex v) {
        if (assigned.contains(v)) return;
        VertexSet comp = reach_in(out, alive, v) & reach_in(in, alive, v);
        assigned |= comp;
        if (comp.size() > 1 || out[v].contains(v)) comps.push_back(std::move(comp));
    });
    return comps;
}

/// General digraph (loops and 2-cycles allowed) used by the reductions.
struct Digraph {
    Rows out, in;
    VertexSet alive;

    explicit Digraph(const OrientedGraph& d) : alive(d.all_vertices()) {
        for (Vertex v = 0; v < d.order(); ++v) {
            out.push_back(d.out_neighbours(v));
            in.push_back(d.in_neighbours(v));
        }
    }

    void add(Vertex u, Vertex v) {
        out[u].insert(v);
        in[v].insert(u);
    }

    void remove(Vertex v) {
        out[v].for_each([&](Vertex w) { in[w].erase(v); });
        in[v].for_each([&](Vertex w) { out[w].erase(v); });
        out[v] = VertexSet(out.size());
        in[v] = VertexSet(out.size());
        alive.erase(v);
    }

    void restrict_to(const VertexSet& keep) {
        (alive - keep).for_each([&](Vertex v) { remove(v); });
    }
};

// ---------------------------------------------------------------------------
// tau: branch on the vertices of a shortest cycle, with iterative deepening.

void reduce_for_fvs(Digraph& g, std::vector<Vertex>& forced) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (Vertex v : g.alive.members()) {
            if (!g.alive.contains(v)) continue;
            if (g.out[v].contains(v)) {
                forced.push_back(v);
                g.remove(v);
                changed = true;
            } else if (g.out[v].empty() || g.in[v].empty()) {
                g.remove(v);
                changed = true;
            } else if (g.in[v].size() == 1 && g.out[v].size() == 1) {
                // Any solution using v can use its in-neighbour instead.
                Vertex u = g.in[v].members().front();
                Vertex w = g.out[v].members().front();
                g.remove(v);
                g.add(u, w);
                changed = true;
            }
        }
    }
}

bool fvs_at_most(Digraph g, std::size_t budget, std::vector<Vertex>& chosen) {
    std::vector<Vertex> forced;
    reduce_for_fvs(g, forced);
    if (forced.size() > budget) return false;
    budget -= forced.size();
    std::vector<Vertex> cycle = shortest_cycle_in(g.out, g.alive);
    if (cycle.empty()) {
        chosen.insert(chosen.end(), forced.begin(), forced.end());
        return true;
    }
    if (budget == 0) return false;
    for (Vertex v : cycle) {
        Digraph branch = g;
        branch.remove(v);
        std::vector<Vertex> sub;
        if (fvs_at_most(std::move(branch), budget - 1, sub)) {
            chosen.insert(chosen.end(), forced.begin(), forced.end());
            chosen.push_back(v);
            chosen.insert(chosen.end(), sub.begin(), sub.end());
            return true;
        }
    }
    return false;
}

// ---------------------------------------------------------------------------
// tau': path contraction to a weighted digraph, then an ordering DP per
// strong component.

struct WeightedArc {
    std::uint64_t weight = 0;
    std::vector<Arc> cut;  // original arcs to delete to remove this arc
};

struct WeightedDigraph {
    Rows out, in;
    VertexSet alive;
    std::map<std::pair<Vertex, Vertex>, WeightedArc> arcs;

    explicit WeightedDigraph(const OrientedGraph& d) : alive(d.all_vertices()) {
        for (Vertex v = 0; v < d.order(); ++v) {
            out.push_back(d.out_neighbours(v));
            in.push_back(d.in_neighbours(v));
        }
        for (const Arc& a : d.arcs()) arcs[{a.tail, a.head}] = WeightedArc{1, {a}};
    }

    void remove(Vertex v) {
        out[v].for_each([&](Vertex w) {
            in[w].erase(v);
            arcs.erase({v, w});
        });
        in[v].for_each([&](Vertex w) {
            out[w].erase(v);
            arcs.erase({w, v});
        });
        out[v] = VertexSet(out.size());
        in[v] = VertexSet(out.size());
        alive.erase(v);
    }

    void merge(Vertex u, Vertex v, const WeightedArc& a) {
        out[u].insert(v);
        in[v].insert(u);
        WeightedArc& slot = arcs[{u, v}];
        slot.weight += a.weight;
        slot.cut.insert(slot.cut.end(), a.cut.begin(), a.cut.end());
    }
};

void reduce_for_fas(WeightedDigraph& g, std::uint64_t& forced_cost, std::vector<Arc>& forced) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (Vertex v : g.alive.members()) {
            if (!g.alive.contains(v)) continue;
            if (g.out[v].empty() || g.in[v].empty()) {
                g.remove(v);
                changed = true;
            } else if (g.in[v].size() == 1 && g.out[v].size() == 1) {
                Vertex u = g.in[v].members().front();
                Vertex w = g.out[v].members().front();
                WeightedArc first = g.arcs.at({u, v});
                WeightedArc second = g.arcs.at({v, w});
                const WeightedArc& cheaper = first.weight <= second.weight ? first : second;
                g.remove(v);
                if (u == w) {
                    forced_cost += cheaper.weight;
                    forced.insert(forced.end(), cheaper.cut.begin(), cheaper.cut.end());
                } else {
                    g.merge(u, w, cheaper);
                }
                changed = true;
            }
        }
    }
}

/// Minimum-weight backward arc set of one strong component by DP over the
/// set of vertices already placed at the front of the ordering.
void fas_component(const WeightedDigraph& g, const VertexSet& comp, std::uint64_t& cost,
                   std::vector<Arc>& cut) {
    const std::vector<Vertex> local = comp.members();
    const std::size_t m = local.size();
    std::vector<int> index(g.out.size(), -1);
    for (std::size_t i = 0; i < m; ++i) index[local[i]] = static_cast<int>(i);

    // planes[b][i]: local targets j whose arc weight i->j has bit b set.
    std::vector<std::vector<std::uint32_t>> planes;
    for (std::size_t i = 0; i < m; ++i) {
        (g.out[local[i]] & comp).for_each([&](Vertex w) {
            std::uint64_t weight = g.arcs.at({local[i], w}).weight;
            for (std::size_t b = 0; weight; ++b, weight >>= 1) {
                if (planes.size() <= b) planes.emplace_back(m, 0);
                if (weight & 1) planes[b][i] |= std::uint32_t{1} << index[w];
            }
        });
    }
    auto backward = [&](std::size_t v, std::uint32_t placed) {
        std::uint64_t c = 0;
        for (std::size_t b = 0; b < planes.size(); ++b)
            c += static_cast<std::uint64_t>(std::popcount(planes[b][v] & placed)) << b;
        return c;
    };

    const std::uint32_t full = m == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << m) - 1;
    std::vector<std::uint64_t> dp(std::size_t{1} << m, UINT64_MAX);
    dp[0] = 0;
    for (std::uint32_t s = 0; s < full; ++s) {
        if (dp[s] == UINT64_MAX) continue;
        for (std::size_t v = 0; v < m; ++v) {
            if (s & (1u << v)) continue;
            std::uint64_t c = dp[s] + backward(v, s);
            std::uint32_t t = s | (1u << v);
            if (c < dp[t]) dp[t] = c;
        }
    }
    cost += dp[full];

    // Peel off the last-placed vertex repeatedly (smallest index on ties).
    std::uint32_t s = full;
    while (s) {
        for (std::size_t v = 0; v < m; ++v) {
            if (!(s & (1u << v))) continue;
            std::uint32_t rest = s & ~(1u << v);
            if (dp[rest] != UINT64_MAX && dp[rest] + backward(v, rest) == dp[s]) {
                for (std::size_t u = 0; u < m; ++u) {
                    if (!(rest & (1u << u))) continue;
                    auto it = g.arcs.find({local[v], local[u]});
                    if (it != g.arcs.end())
                        cut.insert(cut.end(), it->second.cut.begin(), it->second.cut.end());
                }
                s = rest;
                break;
            }
        }
    }
}

// ---------------------------------------------------------------------------
// nu: for a vertex w on a shortest cycle, either w is unused, or some
// packing cycle through w can be shrunk to an induced cycle through w.

void induced_cycles_through(const OrientedGraph& d, const VertexSet& alive, Vertex w,
                            std::vector<Vertex>& path, VertexSet& on_path,
                            std::vector<std::vector<Vertex>>& found) {
    Vertex last = path.back();
    (d.out_neighbours(last) & alive).for_each([&](Vertex x) {
        if (on_path.contains(x)) return;
        if (path.size() >= 2 && d.has_arc(w, x)) return;  // chord from w
        for (std::size_t i = 1; i + 1 < path.size(); ++i)
            if (d.adjacent(x, path[i])) return;
        path.push_back(x);
        if (d.has_arc(x, w)) {
            found.push_back(path);
        } else {
            on_path.insert(x);
            induced_cycles_through(d, alive, w, path, on_path, found);
            on_path.erase(x);
        }
        path.pop_back();
    });
}

VertexSet trim(const OrientedGraph& d, VertexSet alive) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (Vertex v : alive.members()) {
            if (!d.out_neighbours(v).intersects(alive) || !d.in_neighbours(v).intersects(alive)) {
                alive.erase(v);
                changed = true;
            }
        }
    }
    return alive;
}

std::vector<std::vector<Vertex>> max_packing(const OrientedGraph& d, const Rows& out,
                                             const Rows& in, VertexSet alive) {
    alive = trim(d, alive);
    if (alive.empty()) return {};
    auto comps = cyclic_components(out, in, alive);
    if (comps.size() != 1 || comps.front() != alive) {
        std::vector<std::vector<Vertex>> all;
        for (const auto& comp : comps) {
            auto part = max_packing(d, out, in, comp);
            all.insert(all.end(), part.begin(), part.end());
        }
        return all;
    }

    const std::size_t upper = alive.size() / 3;
    const Vertex w = shortest_cycle_in(out, alive).front();
    VertexSet without_w = alive;
    without_w.erase(w);
    std::vector<std::vector<Vertex>> best = max_packing(d, out, in, without_w);

    std::vector<std::vector<Vertex>> cycles;
    std::vector<Vertex> path{w};
    VertexSet on_path(d.order());
    on_path.insert(w);
    induced_cycles_through(d, alive, w, path, on_path, cycles);
    std::sort(cycles.begin(), cycles.end(),
              [](const auto& a, const auto& b) { return a.size() < b.size() || (a.size() == b.size() && a < b); });
    for (const auto& cycle : cycles) {
        if (best.size() >= upper) break;
        VertexSet rest = alive;
        for (Vertex v : cycle) rest.erase(v);
        auto sub = max_packing(d, out, in, rest);
        if (sub.size() + 1 > best.size()) {
            best.clear();
            best.push_back(cycle);
            best.insert(best.end(), sub.begin(), sub.end());
        }
    }
    return best;
}

void check_order(const OrientedGraph& d, const ParamLimits& limits, const char* what) {
    if (d.order() > limits.max_vertices)
        throw GuardExceeded(std::string(what) + ": order " + std::to_string(d.order()) +
                            " exceeds the limit of " + std::to_string(limits.max_vertices) +
                            " vertices");
}

}  // namespace

FeedbackVertexResult tau(const OrientedGraph& d, const ParamLimits& limits) {
    check_order(d, limits, "tau");
    Digraph g(d);
    FeedbackVertexResult result;
    reduce_for_fvs(g, result.vertices);
    for (const VertexSet& comp : cyclic_components(g.out, g.in, g.alive)) {
        Digraph sub = g;
        sub.restrict_to(comp);
        for (std::size_t budget = 1;; ++budget) {
            std::vector<Vertex> chosen;
            if (fvs_at_most(sub, budget, chosen)) {
                result.vertices.insert(result.vertices.end(), chosen.begin(), chosen.end());
                break;
            }
        }
    }
    std::sort(result.vertices.begin(), result.vertices.end());
    result.value = result.vertices.size();
    return result;
}

FeedbackArcResult tau_arc(const OrientedGraph& d, const ParamLimits& limits) {
    WeightedDigraph g(d);
    std::uint64_t cost = 0;
    FeedbackArcResult result;
    reduce_for_fas(g, cost, result.arcs);
    for (const VertexSet& comp : cyclic_components(g.out, g.in, g.alive)) {
        if (comp.size() > limits.max_fas_component)
            throw GuardExceeded("tau_arc: strong component of " + std::to_string(comp.size()) +
                                " vertices exceeds the limit of " +
                                std::to_string(limits.max_fas_component));
        fas_component(g, comp, cost, result.arcs);
    }
    std::sort(result.arcs.begin(), result.arcs.end());
    result.value = static_cast<std::size_t>(cost);
    return result;
}

PackingResult nu(const OrientedGraph& d, const ParamLimits& limits) {
    check_order(d, limits, "nu");
    Rows out, in;
    for (Vertex v = 0; v < d.order(); ++v) {
        out.push_back(d.out_neighbours(v));
        in.push_back(d.in_neighbours(v));
    }
    PackingResult result;
    result.cycles = max_packing(d, out, in, d.all_vertices());
    result.value = result.cycles.size();
    return result;
}

}  // namespace invnum
