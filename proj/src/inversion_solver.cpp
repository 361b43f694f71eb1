#include "invnum/inversion_solver.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>

#include "invnum/acyclicity.hpp"
#include "invnum/errors.hpp"

namespace invnum {

LabelAssignment LabelAssignment::from_family(const DecyclingFamily& family, std::size_t order) {
    if (family.size() > 32) throw InputError("label assignments hold at most 32 sets");
    LabelAssignment a{family.size(), std::vector<std::uint32_t>(order, 0)};
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (family.sets[i].universe() != order) throw InputError("family set over wrong universe");
        family.sets[i].for_each([&](Vertex v) { a.labels[v] |= std::uint32_t{1} << i; });
    }
    return a;
}

DecyclingFamily LabelAssignment::to_family() const {
    DecyclingFamily f;
    for (std::size_t i = 0; i < k; ++i) {
        VertexSet s(labels.size());
        for (Vertex v = 0; v < labels.size(); ++v)
            if ((labels[v] >> i) & 1u) s.insert(v);
        f.sets.push_back(std::move(s));
    }
    return f;
}

bool LabelAssignment::reverses(Vertex u, Vertex v) const {
    return std::popcount(labels[u] & labels[v]) & 1;
}

bool verify_family(const OrientedGraph& d, const DecyclingFamily& family) {
    return is_acyclic(apply_family(d, family));
}

namespace {

template <std::size_t W>
struct Bits {
    std::array<std::uint64_t, W> w{};

    void set(std::size_t i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool any() const {
        for (auto x : w)
            if (x) return true;
        return false;
    }
    Bits operator&(const Bits& o) const {
        Bits r;
        for (std::size_t i = 0; i < W; ++i) r.w[i] = w[i] & o.w[i];
        return r;
    }
    Bits operator|(const Bits& o) const {
        Bits r;
        for (std::size_t i = 0; i < W; ++i) r.w[i] = w[i] | o.w[i];
        return r;
    }
    Bits& operator|=(const Bits& o) {
        for (std::size_t i = 0; i < W; ++i) w[i] |= o.w[i];
        return *this;
    }
    Bits& operator^=(const Bits& o) {
        for (std::size_t i = 0; i < W; ++i) w[i] ^= o.w[i];
        return *this;
    }
    Bits operator~() const {
        Bits r;
        for (std::size_t i = 0; i < W; ++i) r.w[i] = ~w[i];
        return r;
    }
    bool intersects(const Bits& o) const {
        for (std::size_t i = 0; i < W; ++i)
            if (w[i] & o.w[i]) return true;
        return false;
    }
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < W; ++i) {
            std::uint64_t bits = w[i];
            while (bits) {
                f(i * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }
};

enum class Abort { none, timeout, node_limit, superseded };

struct SharedState {
    bool deterministic = true;
    std::optional<std::chrono::steady_clock::time_point> deadline;
    std::uint64_t node_limit = 0;
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> stop{false};
    std::atomic<int> failure{0};  // 0 none, 1 timeout, 2 node limit
    std::atomic<std::size_t> best_task{std::numeric_limits<std::size_t>::max()};
};

/// Depth-first search over label assignments, one vertex per level. The
/// graph is pre-relabelled so that level d places vertex d; all arcs
/// among placed vertices are final, so a cycle among them prunes.
template <std::size_t W>
class LabelSearch {
public:
    LabelSearch(const OrientedGraph& g, std::size_t k, SharedState& shared)
        : n_(g.order()), k_(k), shared_(shared), out_(n_), in_(n_), prefix_(n_ + 1),
          coord_(k), reach_((n_ + 1) * std::max<std::size_t>(n_, 1)), label_(n_, 0) {
        for (Vertex v = 0; v < n_; ++v) {
            g.out_neighbours(v).for_each([&](Vertex w) { out_[v].set(w); });
            g.in_neighbours(v).for_each([&](Vertex w) { in_[v].set(w); });
        }
        for (std::size_t d = 1; d <= n_; ++d) {
            prefix_[d] = prefix_[d - 1];
            prefix_[d].set(d - 1);
        }
        // Coordinates are interchangeable: a label may only introduce new
        // coordinates as the contiguous run starting at the first unused one.
        candidates_.resize(k + 1);
        for (std::size_t used = 0; used <= k; ++used)
            for (std::uint32_t label = 0; label < (std::uint32_t{1} << k); ++label) {
                std::uint32_t fresh = label >> used;
                if ((fresh & (fresh + 1)) == 0) candidates_[used].push_back(label);
            }
    }

    /// Replays `prefix` then searches below it. True on success (the
    /// labeling is in solution()); false on refutation or abort.
    bool run(const std::vector<std::uint32_t>& prefix, std::size_t task) {
        task_ = task;
        std::size_t used = 0;
        for (std::size_t d = 0; d < prefix.size(); ++d) {
            if (!place(d, prefix[d])) throw std::logic_error("search prefix no longer valid");
            used = next_used(used, prefix[d]);
        }
        return dfs(prefix.size(), used);
    }

    void collect(std::size_t depth, std::vector<std::vector<std::uint32_t>>& out) {
        collect_from(0, 0, depth, out);
    }

    const std::vector<std::uint32_t>& solution() const { return label_; }
    bool aborted() const { return abort_ != Abort::none; }
    std::uint64_t local_nodes() const { return nodes_; }

private:
    static std::size_t next_used(std::size_t used, std::uint32_t label) {
        return std::max<std::size_t>(used, label ? 32 - std::countl_zero(label) : 0);
    }

    Bits<W>* reach(std::size_t level) { return &reach_[level * n_]; }

    bool place(std::size_t d, std::uint32_t label) {
        Bits<W> odd;
        for (std::uint32_t rest = label; rest; rest &= rest - 1) odd ^= coord_[std::countr_zero(rest)];
        const Bits<W>& mask = prefix_[d];
        Bits<W> succ = ((out_[d] & ~odd) | (in_[d] & odd)) & mask;
        Bits<W> pred = ((in_[d] & ~odd) | (out_[d] & odd)) & mask;
        Bits<W>* cur = reach(d);
        Bits<W> down;
        succ.for_each([&](std::size_t s) { down |= cur[s]; });
        if (down.intersects(pred)) return false;
        down.set(d);
        Bits<W>* next = reach(d + 1);
        for (std::size_t u = 0; u < d; ++u)
            next[u] = cur[u].intersects(pred) ? (cur[u] | down) : cur[u];
        next[d] = down;
        for (std::uint32_t rest = label; rest; rest &= rest - 1) coord_[std::countr_zero(rest)].set(d);
        label_[d] = label;
        return true;
    }

    void unplace(std::size_t d, std::uint32_t label) {
        for (std::uint32_t rest = label; rest; rest &= rest - 1) coord_[std::countr_zero(rest)].reset(d);
        label_[d] = 0;
    }

    bool check_budget() {
        std::uint64_t total = shared_.nodes.fetch_add(kCheckEvery) + kCheckEvery;
        if (shared_.stop.load(std::memory_order_relaxed)) {
            abort_ = Abort::superseded;
        } else if (shared_.deterministic &&
                   shared_.best_task.load(std::memory_order_relaxed) < task_) {
            abort_ = Abort::superseded;
        } else if (shared_.node_limit && total > shared_.node_limit) {
            abort_ = Abort::node_limit;
            shared_.failure = 2;
            shared_.stop = true;
        } else if (shared_.deadline && std::chrono::steady_clock::now() > *shared_.deadline) {
            abort_ = Abort::timeout;
            shared_.failure = 1;
            shared_.stop = true;
        }
        return abort_ == Abort::none;
    }

    bool dfs(std::size_t d, std::size_t used) {
        if (d == n_) return true;
        if ((++nodes_ % kCheckEvery) == 0 && !check_budget()) return false;
        for (std::uint32_t label : candidates_[used]) {
            if (!place(d, label)) continue;
            if (dfs(d + 1, next_used(used, label))) return true;
            unplace(d, label);
            if (abort_ != Abort::none) return false;
        }
        return false;
    }

    void collect_from(std::size_t d, std::size_t used, std::size_t depth,
                      std::vector<std::vector<std::uint32_t>>& out) {
        if (d == depth) {
            out.emplace_back(label_.begin(), label_.begin() + static_cast<std::ptrdiff_t>(d));
            return;
        }
        for (std::uint32_t label : candidates_[used]) {
            if (!place(d, label)) continue;
            collect_from(d + 1, next_used(used, label), depth, out);
            unplace(d, label);
        }
    }

    static constexpr std::uint64_t kCheckEvery = 1 << 12;

    std::size_t n_, k_;
    SharedState& shared_;
    std::vector<Bits<W>> out_, in_, prefix_, coord_, reach_;
    std::vector<std::uint32_t> label_;
    std::vector<std::vector<std::uint32_t>> candidates_;
    std::size_t task_ = 0;
    std::uint64_t nodes_ = 0;
    Abort abort_ = Abort::none;
};

template <std::size_t W>
std::optional<std::vector<std::uint32_t>> search_labels(const OrientedGraph& g, std::size_t k,
                                                        const SearchOptions& options,
                                                        SearchStats* stats) {
    SharedState shared;
    shared.deterministic = options.deterministic;
    shared.node_limit = options.node_limit;
    if (options.timeout) shared.deadline = std::chrono::steady_clock::now() + *options.timeout;

    unsigned workers = options.workers ? options.workers : std::thread::hardware_concurrency();
    workers = std::max(1u, workers);

    std::vector<std::vector<std::uint32_t>> tasks;
    if (workers == 1) {
        tasks.emplace_back();
    } else {
        // Split at the shallowest depth offering enough independent subtrees.
        LabelSearch<W> splitter(g, k, shared);
        for (std::size_t depth = 0; depth <= g.order(); ++depth) {
            tasks.clear();
            splitter.collect(depth, tasks);
            if (tasks.size() >= 8 * workers || tasks.empty()) break;
        }
    }

    std::optional<std::vector<std::uint32_t>> found;
    std::size_t found_task = std::numeric_limits<std::size_t>::max();
    std::mutex mu;
    std::atomic<std::size_t> next_task{0};

    auto worker = [&]() {
        for (;;) {
            std::size_t t = next_task.fetch_add(1);
            if (t >= tasks.size() || shared.stop) break;
            if (shared.deterministic && shared.best_task.load() < t) break;
            LabelSearch<W> local(g, k, shared);
            bool ok = local.run(tasks[t], t);
            if (ok) {
                std::lock_guard lock(mu);
                if (t < found_task) {
                    found_task = t;
                    found = local.solution();
                }
                std::size_t prev = shared.best_task.load();
                while (t < prev && !shared.best_task.compare_exchange_weak(prev, t)) {
                }
                if (!shared.deterministic) shared.stop = true;
            }
        }
    };

    if (workers == 1 || tasks.size() <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
    }

    if (stats) stats->nodes += shared.nodes.load();
    if (shared.failure == 1 && !found) throw Timeout("inversion search exceeded its time limit");
    if (shared.failure == 2 && !found)
        throw GuardExceeded("inversion search exceeded its node limit of " +
                            std::to_string(options.node_limit));
    return found;
}

std::size_t count_triangles(const OrientedGraph& d, Vertex v) {
    // Directed triangles v -> a -> b -> v.
    std::size_t c = 0;
    d.out_neighbours(v).for_each(
        [&](Vertex a) { c += (d.out_neighbours(a) & d.in_neighbours(v)).size(); });
    return c;
}

}  // namespace

std::vector<Vertex> search_order(const OrientedGraph& d) {
    const std::size_t n = d.order();
    std::vector<std::size_t> triangles(n), closed(n, 0), touching(n, 0);
    for (Vertex v = 0; v < n; ++v) triangles[v] = count_triangles(d, v);
    VertexSet placed(n);
    std::vector<Vertex> order;
    while (order.size() < n) {
        Vertex best = 0;
        bool have = false;
        for (Vertex v = 0; v < n; ++v) {
            if (placed.contains(v)) continue;
            auto key = std::tuple(closed[v], touching[v], triangles[v]);
            if (!have || key > std::tuple(closed[best], touching[best], triangles[best])) {
                best = v;
                have = true;
            }
        }
        // Triangles through an unplaced v closed by best and an earlier vertex.
        for (Vertex v = 0; v < n; ++v) {
            if (placed.contains(v) || v == best) continue;
            if (d.has_arc(v, best))
                closed[v] += (d.out_neighbours(best) & d.in_neighbours(v) & placed).size();
            else if (d.has_arc(best, v))
                closed[v] += (d.out_neighbours(v) & d.in_neighbours(best) & placed).size();
            if (d.adjacent(v, best)) ++touching[v];
        }
        placed.insert(best);
        order.push_back(best);
    }
    return order;
}

std::optional<DecyclingFamily> decide_inv_le_k(const OrientedGraph& d, std::size_t k,
                                               const SearchOptions& options, SearchStats* stats) {
    if (k > options.max_k || k > 31)
        throw GuardExceeded("family size " + std::to_string(k) + " exceeds the limit of " +
                            std::to_string(std::min<std::size_t>(options.max_k, 31)));
    if (d.order() > options.max_vertices || d.order() > 256)
        throw GuardExceeded("order " + std::to_string(d.order()) + " exceeds the limit of " +
                            std::to_string(std::min<std::size_t>(options.max_vertices, 256)) +
                            " vertices");
    if (is_acyclic(d)) return DecyclingFamily{};
    if (k == 0) return std::nullopt;

    StrippedGraph core = strip_sources_sinks(d);
    std::vector<Vertex> order = search_order(core.graph);
    std::vector<Vertex> position(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = static_cast<Vertex>(i);
    OrientedGraph relabelled(order.size());
    for (const Arc& a : core.graph.arcs()) relabelled.add_arc(position[a.tail], position[a.head]);

    std::optional<std::vector<std::uint32_t>> labels;
    if (relabelled.order() <= 64)
        labels = search_labels<1>(relabelled, k, options, stats);
    else if (relabelled.order() <= 128)
        labels = search_labels<2>(relabelled, k, options, stats);
    else
        labels = search_labels<4>(relabelled, k, options, stats);
    if (!labels) return std::nullopt;

    DecyclingFamily family;
    for (std::size_t i = 0; i < k; ++i) {
        VertexSet s(d.order());
        for (std::size_t p = 0; p < labels->size(); ++p)
            if (((*labels)[p] >> i) & 1u) s.insert(core.kept[order[p]]);
        if (!s.empty()) family.sets.push_back(std::move(s));
    }
    if (!verify_family(d, family)) throw std::logic_error("label search returned a non-decycling family");
    return family;
}

InvCertificate inversion_number(const OrientedGraph& d, std::size_t k_max,
                                const SearchOptions& options) {
    InvCertificate cert;
    cert.k_max = k_max;
    for (std::size_t k = 0; k <= k_max; ++k) {
        auto family = decide_inv_le_k(d, k, options);
        if (family) {
            cert.value = family->size();
            cert.family = std::move(*family);
            cert.exhausted_below = true;
            return cert;
        }
    }
    cert.exhausted_below = true;
    return cert;
}

DecyclingFamily family_from_fas(const OrientedGraph& d, const ParamLimits& limits) {
    DecyclingFamily family;
    for (const Arc& a : tau_arc(d, limits).arcs) family.sets.push_back(VertexSet(d.order(), {a.tail, a.head}));
    return family;
}

DecyclingFamily family_from_fvs(const OrientedGraph& d, const ParamLimits& limits) {
    DecyclingFamily family;
    OrientedGraph current = d;
    VertexSet handled(d.order());
    for (Vertex x : tau(d, limits).vertices) {
        // Earlier transversal vertices are sinks of `current`; leaving them
        // out keeps them sinks.
        VertexSet out = current.out_neighbours(x) - handled;
        handled.insert(x);
        if (out.empty()) continue;
        VertexSet closed = out;
        closed.insert(x);
        family.sets.push_back(closed);
        family.sets.push_back(out);
        current = invert(invert(current, closed), out);
    }
    return family;
}

OrientedGraph extend_to_tournament(const OrientedGraph& d, const DecyclingFamily& family) {
    for (const auto& s : family.sets)
        if (s.universe() != d.order()) throw InputError("family set over wrong universe");
    OrderingOrCycle ord = acyclic_ordering(apply_family(d, family));
    if (!ord.acyclic()) throw InputError("family does not decycle the graph");
    OrientedGraph t = d;
    const auto& v = ord.ordering;
    for (std::size_t k = 0; k < v.size(); ++k)
        for (std::size_t l = k + 1; l < v.size(); ++l) {
            if (d.adjacent(v[k], v[l])) continue;
            if (co_membership(family, v[k], v[l]) % 2 == 0)
                t.add_arc(v[k], v[l]);
            else
                t.add_arc(v[l], v[k]);
        }
    return t;
}

}  // namespace invnum
