#include "invnum/tournament_poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "invnum/acyclicity.hpp"
#include "invnum/errors.hpp"

namespace invnum {

namespace {

void require_tournament(const OrientedGraph& t) {
    if (!t.is_tournament()) throw InputError("expected a tournament");
}

VertexSet with(VertexSet s, std::initializer_list<Vertex> extra) {
    for (Vertex v : extra) s.insert(v);
    return s;
}

class Inv2Search {
public:
    explicit Inv2Search(const OrientedGraph& t) : t_(t), rev_(t.reversed()), n_(t.order()) {}

    std::optional<DecyclingFamily> run() {
        for (Vertex s = 0; s < n_; ++s)
            for (Vertex sink = 0; sink < n_; ++sink) {
                if (s == sink) continue;
                for (PoleCase c : kPoleCases)
                    if (auto f = run_case(s, sink, c)) return f;
            }
        return std::nullopt;
    }

    std::optional<DecyclingFamily> run_case(Vertex s, Vertex sink, PoleCase c) const {
        switch (c) {
            case PoleCase::both_in_first:
                return case_both_in_one(s, sink);
            case PoleCase::split:
                return case_split(s, sink);
            case PoleCase::source_in_both:
                return case_source_in_both(t_, s, sink);
            case PoleCase::sink_in_both:
                return case_source_in_both(rev_, sink, s);
            case PoleCase::both_in_both:
                return case_both_in_both(s, sink);
        }
        return std::nullopt;
    }

private:
    std::optional<DecyclingFamily> accept_if_transitive(VertexSet x1, VertexSet x2, Vertex s,
                                                        Vertex sink) const {
        DecyclingFamily f{{std::move(x1), std::move(x2)}};
        if (is_transitive_with(apply_family(t_, f), s, sink)) return f;
        return std::nullopt;
    }

    // s, t both in X1 only.
    std::optional<DecyclingFamily> case_both_in_one(Vertex s, Vertex sink) const {
        if (!t_.has_arc(sink, s)) return std::nullopt;
        PolarPartition p = polar_partition(t_, s, sink);
        if (!p.c.empty() || !p.d.empty()) return std::nullopt;
        VertexSet x1 = with(p.b, {s, sink});
        OrientedGraph inverted = invert(t_, x1);
        if (inverted.in_degree(s) != 0 || inverted.out_degree(sink) != 0)
            throw std::logic_error("forced inversion left s or t unresolved");
        VertexSet rest = t_.all_vertices();
        rest.erase(s);
        rest.erase(sink);
        auto x = inv1_tournament(inverted.induced(rest));
        if (!x) return std::nullopt;
        std::vector<Vertex> members = rest.members();
        VertexSet x2(n_);
        x->for_each([&](Vertex v) { x2.insert(members[v]); });
        return accept_if_transitive(std::move(x1), std::move(x2), s, sink);
    }

    // s in X1 only, t in X2 only.
    std::optional<DecyclingFamily> case_split(Vertex s, Vertex sink) const {
        if (!t_.has_arc(s, sink)) return std::nullopt;
        PolarPartition p = polar_partition(t_, s, sink);
        return accept_if_transitive(with(p.b | p.d, {s}), with(p.b | p.c, {sink}), s, sink);
    }

    // s in both, t in X1 only; run on the reversed tournament for the dual.
    std::optional<DecyclingFamily> case_source_in_both(const OrientedGraph& g, Vertex s,
                                                       Vertex sink) const {
        if (!g.has_arc(sink, s)) return std::nullopt;
        PolarPartition p = polar_partition(g, s, sink);
        DecyclingFamily f{{with(p.b | p.c, {s, sink}), with(p.c | p.d, {s})}};
        if (is_transitive_with(apply_family(g, f), s, sink)) return f;
        return std::nullopt;
    }

    // Partitions (X1', X2') of B whose two inversions make T<B> transitive,
    // each with the resulting ordering of B.
    std::vector<std::pair<VertexSet, std::vector<Vertex>>> b_partitions(const VertexSet& b) const {
        std::vector<std::pair<VertexSet, std::vector<Vertex>>> out;
        auto consider = [&](const VertexSet& x1) {
            OrientedGraph g = apply_family(t_, DecyclingFamily{{x1, b - x1}});
            if (auto order = transitive_order(g, b)) out.emplace_back(x1, std::move(*order));
        };
        std::vector<Vertex> members = b.members();
        if (members.size() <= 1) {
            consider(b);
            return out;
        }
        for (Vertex s : members)
            for (Vertex sink : members) {
                if (s == sink) continue;
                PolarPartition p = polar_partition_within(s, sink, b);
                if (t_.has_arc(sink, s)) {
                    if (p.c.empty() && p.d.empty()) consider(with(p.b, {s, sink}));
                } else if (p.a.empty() && p.b.empty()) {
                    consider(with(p.d, {s}));
                }
            }
        return out;
    }

    PolarPartition polar_partition_within(Vertex s, Vertex sink, const VertexSet& within) const {
        PolarPartition p = polar_partition(t_, s, sink);
        p.a &= within;
        p.b &= within;
        p.c &= within;
        p.d &= within;
        return p;
    }

    // s, t both in X1 and X2.
    std::optional<DecyclingFamily> case_both_in_both(Vertex s, Vertex sink) const {
        if (!t_.has_arc(s, sink)) return std::nullopt;
        PolarPartition p = polar_partition(t_, s, sink);
        if (!p.c.empty() || !p.d.empty()) return std::nullopt;
        auto pa = transitive_order(t_, p.a);
        if (!pa) return std::nullopt;
        for (auto& [x1b, pb] : b_partitions(p.b)) {
            auto plan = merge_orderings(t_, *pa, pb);
            if (!plan) continue;
            VertexSet common = with(VertexSet::from_range(n_, plan->z), {s, sink});
            if (auto f = accept_if_transitive(common | x1b, common | (p.b - x1b), s, sink)) return f;
        }
        return std::nullopt;
    }

    const OrientedGraph& t_;
    OrientedGraph rev_;
    std::size_t n_;
};

}  // namespace

PolarPartition polar_partition(const OrientedGraph& t, Vertex s, Vertex sink) {
    require_tournament(t);
    if (s == sink) throw InputError("polar partition needs two distinct vertices");
    if (s >= t.order() || sink >= t.order()) throw InputError("vertex out of range");
    PolarPartition p;
    p.s = s;
    p.t = sink;
    VertexSet others = t.all_vertices();
    others.erase(s);
    others.erase(sink);
    const VertexSet& os = t.out_neighbours(s);
    const VertexSet& ot = t.out_neighbours(sink);
    p.a = os & t.in_neighbours(sink) & others;
    p.b = t.in_neighbours(s) & ot & others;
    p.c = os & ot & others;
    p.d = t.in_neighbours(s) & t.in_neighbours(sink) & others;
    return p;
}

std::optional<std::vector<Vertex>> transitive_order(const OrientedGraph& t, const VertexSet& s) {
    // A tournament is transitive iff its score sequence is 0, 1, ..., m-1.
    std::vector<Vertex> members = s.members();
    std::vector<std::pair<std::size_t, Vertex>> score;
    for (Vertex v : members) score.emplace_back((t.out_neighbours(v) & s).size(), v);
    std::sort(score.rbegin(), score.rend());
    std::vector<Vertex> order;
    for (std::size_t i = 0; i < score.size(); ++i) {
        if (score[i].first != score.size() - 1 - i) return std::nullopt;
        order.push_back(score[i].second);
    }
    for (std::size_t i = 0; i + 1 < order.size(); ++i)
        if (!t.has_arc(order[i], order[i + 1])) return std::nullopt;
    return order;
}

std::optional<MergePlan> merge_orderings(const OrientedGraph& t, const std::vector<Vertex>& pa,
                                         const std::vector<Vertex>& pb) {
    VertexSet seen(t.order());
    for (const auto* list : {&pa, &pb})
        for (Vertex v : *list) {
            if (v >= t.order()) throw InputError("ordering vertex out of range");
            if (seen.contains(v)) throw InputError("orderings must list disjoint vertices once");
            seen.insert(v);
        }
    for (std::size_t i = 0; i < pa.size(); ++i)
        for (std::size_t j = i + 1; j < pa.size(); ++j)
            if (!t.has_arc(pa[i], pa[j])) throw InputError("A-ordering is not transitive in T");

    MergePlan plan;
    std::size_t floor = 0;
    const std::size_t q = pb.size();
    for (Vertex a : pa) {
        // leading run of B-vertices dominating a, then of B-vertices a dominates
        std::size_t in_run = 0;
        while (in_run < q && t.has_arc(pb[in_run], a)) ++in_run;
        bool in_then_out = true;
        for (std::size_t j = in_run; j < q; ++j) in_then_out &= t.has_arc(a, pb[j]);
        std::size_t out_run = 0;
        while (out_run < q && t.has_arc(a, pb[out_run])) ++out_run;
        bool out_then_in = true;
        for (std::size_t j = out_run; j < q; ++j) out_then_in &= t.has_arc(pb[j], a);

        std::optional<std::size_t> plain, flipped;
        if (in_then_out && in_run >= floor) plain = in_run;
        if (out_then_in && out_run >= floor) flipped = out_run;
        if (plain && (!flipped || *plain <= *flipped)) {
            floor = *plain;
        } else if (flipped) {
            floor = *flipped;
            plan.z.push_back(a);
        } else {
            return std::nullopt;
        }
        plan.breakpoints.push_back(floor);
    }
    return plan;
}

std::optional<VertexSet> inv1_tournament(const OrientedGraph& t) {
    require_tournament(t);
    // A vertex that becomes the source without being inverted was already a
    // source, so N-[v] is forced only once sources and sinks are gone.
    StrippedGraph core = strip_sources_sinks(t);
    const OrientedGraph& g = core.graph;
    if (g.order() == 0) return t.empty_set();
    for (Vertex v = 0; v < g.order(); ++v) {
        VertexSet x = with(g.in_neighbours(v), {v});
        OrientedGraph inverted = invert(g, x);
        if (inverted.in_degree(v) == 0 && transitive_order(inverted, inverted.all_vertices())) {
            VertexSet mapped(t.order());
            x.for_each([&](Vertex u) { mapped.insert(core.kept[u]); });
            return mapped;
        }
    }
    return std::nullopt;
}

std::optional<DecyclingFamily> two_inversions_with_poles(const OrientedGraph& t, Vertex s, Vertex sink,
                                                         PoleCase c) {
    require_tournament(t);
    if (s == sink || s >= t.order() || sink >= t.order()) throw InputError("need two distinct vertices");
    return Inv2Search(t).run_case(s, sink, c);
}

std::optional<DecyclingFamily> inv2_tournament(const OrientedGraph& t) {
    require_tournament(t);
    if (auto x = inv1_tournament(t)) return DecyclingFamily{{*x, t.empty_set()}};

    StrippedGraph core = strip_sources_sinks(t);
    auto found = Inv2Search(core.graph).run();
    if (!found) return std::nullopt;
    DecyclingFamily family;
    for (const VertexSet& s : found->sets) {
        VertexSet mapped(t.order());
        s.for_each([&](Vertex v) { mapped.insert(core.kept[v]); });
        family.sets.push_back(std::move(mapped));
    }
    if (!is_acyclic(apply_family(t, family)))
        throw std::logic_error("2-inversion certificate failed verification");
    return family;
}

}  // namespace invnum
