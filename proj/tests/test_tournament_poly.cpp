#include <gtest/gtest.h>

#include <random>

#include "invnum/acyclicity.hpp"
#include "invnum/constructions.hpp"
#include "invnum/errors.hpp"
#include "invnum/inversion_solver.hpp"
#include "invnum/tournament_poly.hpp"
#include "oracles.hpp"

using namespace invnum;

namespace {

bool placement_matches(PoleCase c, bool s1, bool s2, bool t1, bool t2) {
    switch (c) {
        case PoleCase::both_in_first: return s1 && t1 && !s2 && !t2;
        case PoleCase::split: return s1 && !s2 && t2 && !t1;
        case PoleCase::source_in_both: return s1 && s2 && (t1 != t2);
        case PoleCase::sink_in_both: return t1 && t2 && (s1 != s2);
        case PoleCase::both_in_both: return s1 && s2 && t1 && t2;
    }
    return false;
}

bool placed(PoleCase c, const VertexSet& x1, const VertexSet& x2, Vertex s, Vertex t) {
    return placement_matches(c, x1.contains(s), x2.contains(s), x1.contains(t), x2.contains(t)) ||
           placement_matches(c, x2.contains(s), x1.contains(s), x2.contains(t), x1.contains(t));
}

VertexSet from_mask(std::size_t n, std::uint32_t mask) {
    VertexSet x(n);
    for (Vertex v = 0; v < n; ++v)
        if ((mask >> v) & 1u) x.insert(v);
    return x;
}

bool brute_pole_case(const OrientedGraph& t, Vertex s, Vertex sink, PoleCase c) {
    const std::size_t n = t.order();
    for (std::uint32_t m1 = 0; m1 < (1u << n); ++m1)
        for (std::uint32_t m2 = 0; m2 < (1u << n); ++m2) {
            VertexSet x1 = from_mask(n, m1), x2 = from_mask(n, m2);
            if (!placed(c, x1, x2, s, sink)) continue;
            if (is_transitive_with(apply_family(t, {{x1, x2}}), s, sink)) return true;
        }
    return false;
}

OrientedGraph stripped_tournament(std::size_t n, std::mt19937_64& rng) {
    for (;;) {
        OrientedGraph t = random_tournament(n, rng);
        if (strip_sources_sinks(t).graph.order() == n) return t;
    }
}

}  // namespace

TEST(Inv1, Examples) {
    auto c3 = inv1_tournament(directed_cycle(3));
    ASSERT_TRUE(c3);
    EXPECT_TRUE(is_acyclic(invert(directed_cycle(3), *c3)));

    auto tt = inv1_tournament(transitive(5));
    ASSERT_TRUE(tt);
    EXPECT_TRUE(tt->empty());

    EXPECT_FALSE(inv1_tournament(catalog("V5")));
    EXPECT_FALSE(inv1_tournament(catalog("Q7")));
}

TEST(Inv1, SourcesAndSinksDoNotHideASolution) {
    // C3 with a source and a sink attached keeps inv = 1.
    OrientedGraph d = dijoin(dijoin(transitive(1), directed_cycle(3)), transitive(1));
    auto x = inv1_tournament(d);
    ASSERT_TRUE(x);
    EXPECT_TRUE(is_acyclic(invert(d, *x)));
}

TEST(Inv1, AgreesWithExactSolver) {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 300; ++i) {
        OrientedGraph t = random_tournament(3 + i % 7, rng);
        auto x = inv1_tournament(t);
        EXPECT_EQ(x.has_value(), decide_inv_le_k(t, 1).has_value());
        if (x) EXPECT_TRUE(is_acyclic(invert(t, *x)));
    }
}

TEST(Inv1, RejectsNonTournaments) {
    EXPECT_THROW(inv1_tournament(directed_cycle(4)), InputError);
}

TEST(PolarPartition, TransitiveExample) {
    auto p = polar_partition(transitive(4), 0, 3);
    EXPECT_EQ(p.a, VertexSet(4, {1, 2}));
    EXPECT_TRUE(p.b.empty());
    EXPECT_TRUE(p.c.empty());
    EXPECT_TRUE(p.d.empty());
}

TEST(PolarPartition, MatchesDefinitionOnV5) {
    OrientedGraph v5 = catalog("V5");
    for (Vertex s = 0; s < 5; ++s)
        for (Vertex t = 0; t < 5; ++t) {
            if (s == t) continue;
            auto p = polar_partition(v5, s, t);
            EXPECT_EQ(p.a.size() + p.b.size() + p.c.size() + p.d.size(), 3u);
            for (Vertex v = 0; v < 5; ++v) {
                if (v == s || v == t) continue;
                const bool from_s = v5.has_arc(s, v), to_t = v5.has_arc(v, t);
                EXPECT_EQ(p.a.contains(v), from_s && to_t);
                EXPECT_EQ(p.b.contains(v), !from_s && !to_t);
                EXPECT_EQ(p.c.contains(v), from_s && !to_t);
                EXPECT_EQ(p.d.contains(v), !from_s && to_t);
            }
        }
}

TEST(TransitiveOrder, Examples) {
    OrientedGraph tt = transitive(5);
    auto o = transitive_order(tt, VertexSet(5, {4, 1, 3}));
    ASSERT_TRUE(o);
    EXPECT_EQ(*o, (std::vector<Vertex>{1, 3, 4}));
    EXPECT_FALSE(transitive_order(directed_cycle(3), VertexSet::full(3)));
}

TEST(MergeOrderings, InterlacingFigure) {
    // a_1..a_11 then b_1..b_12, breakpoints 3,3,3,3,6,6,6,6,9,9,9 and
    // Z = {a_2, a_6, a_10}.
    const std::size_t p = 11, q = 12;
    const std::vector<std::size_t> js{3, 3, 3, 3, 6, 6, 6, 6, 9, 9, 9};
    const std::vector<bool> in_z{false, true, false, false, false, true, false, false, false, true, false};
    OrientedGraph t(p + q);
    for (Vertex i = 0; i < p; ++i)
        for (Vertex k = i + 1; k < p; ++k) t.add_arc(i, k);
    for (Vertex j = 0; j < q; ++j)
        for (Vertex k = j + 1; k < q; ++k) t.add_arc(static_cast<Vertex>(p + k), static_cast<Vertex>(p + j));
    for (Vertex i = 0; i < p; ++i)
        for (std::size_t j = 1; j <= q; ++j) {
            const auto b = static_cast<Vertex>(p + j - 1);
            const bool b_first = (j <= js[i]) != in_z[i];
            if (b_first)
                t.add_arc(b, i);
            else
                t.add_arc(i, b);
        }
    std::vector<Vertex> pa, pb;
    for (Vertex i = 0; i < p; ++i) pa.push_back(i);
    for (Vertex j = 0; j < q; ++j) pb.push_back(static_cast<Vertex>(p + j));
    auto plan = merge_orderings(t, pa, pb);
    ASSERT_TRUE(plan);
    EXPECT_EQ(plan->breakpoints, js);
    EXPECT_EQ(plan->z, (std::vector<Vertex>{1, 5, 9}));
}

TEST(MergeOrderings, EmptyAAndErrors) {
    OrientedGraph t = transitive(4);
    auto plan = merge_orderings(t, {}, {0, 1, 2});
    ASSERT_TRUE(plan);
    EXPECT_TRUE(plan->z.empty());
    EXPECT_TRUE(plan->breakpoints.empty());

    EXPECT_THROW(merge_orderings(t, {0, 1}, {1, 2}), InputError);
    EXPECT_THROW(merge_orderings(t, {1, 0}, {2}), InputError);
}

TEST(MergeOrderings, DecreasingBreakpointsAreInfeasible) {
    // a_1 forces j_1 = 2; a_2 allows only j_2 = 1 unflipped and nothing flipped.
    OrientedGraph t = OrientedGraph::from_arcs(
        5, {{0, 1}, {2, 0}, {3, 0}, {0, 4}, {2, 1}, {1, 3}, {1, 4}, {3, 2}, {4, 2}, {4, 3}});
    EXPECT_FALSE(merge_orderings(t, {0, 1}, {2, 3, 4}));
}

TEST(PoleCases, AgreeWithBruteForce) {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 14; ++i) {
        const std::size_t n = 4 + i % 3;
        OrientedGraph t = stripped_tournament(n, rng);
        for (Vertex s = 0; s < n; ++s)
            for (Vertex sink = 0; sink < n; ++sink) {
                if (s == sink) continue;
                for (PoleCase c : kPoleCases) {
                    auto fam = two_inversions_with_poles(t, s, sink, c);
                    EXPECT_EQ(fam.has_value(), brute_pole_case(t, s, sink, c))
                        << "n=" << n << " s=" << s << " t=" << sink << " case=" << static_cast<int>(c);
                    if (fam) {
                        ASSERT_EQ(fam->size(), 2u);
                        EXPECT_TRUE(placed(c, fam->sets[0], fam->sets[1], s, sink));
                        EXPECT_TRUE(is_transitive_with(apply_family(t, *fam), s, sink));
                    }
                }
            }
    }
}

TEST(Inv2, Examples) {
    for (const char* name : {"V5", "B6", "A6", "D5", "R5"}) {
        OrientedGraph t = catalog(name);
        auto fam = inv2_tournament(t);
        ASSERT_TRUE(fam) << name;
        EXPECT_EQ(fam->size(), 2u);
        EXPECT_TRUE(verify_family(t, *fam)) << name;
    }
    EXPECT_FALSE(inv2_tournament(catalog("Q7")));
}

TEST(Inv2, PadsOneSetAnswers) {
    auto fam = inv2_tournament(directed_cycle(3));
    ASSERT_TRUE(fam);
    EXPECT_EQ(fam->size(), 2u);
    EXPECT_TRUE(fam->sets[1].empty());
}

TEST(Inv2, AgreesWithExactSolver) {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 250; ++i) {
        OrientedGraph t = random_tournament(5 + i % 5, rng);
        auto fam = inv2_tournament(t);
        EXPECT_EQ(fam.has_value(), decide_inv_le_k(t, 2).has_value());
        if (fam) EXPECT_TRUE(verify_family(t, *fam));
    }
}
