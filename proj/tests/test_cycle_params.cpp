#include <gtest/gtest.h>

#include <random>

#include "invnum/acyclicity.hpp"
#include "invnum/constructions.hpp"
#include "invnum/cycle_params.hpp"
#include "invnum/errors.hpp"
#include "oracles.hpp"

using namespace invnum;

namespace {

void check_witnesses(const OrientedGraph& d) {
    auto t = tau(d);
    EXPECT_EQ(t.vertices.size(), t.value);
    VertexSet keep = d.all_vertices();
    for (Vertex v : t.vertices) keep.erase(v);
    EXPECT_TRUE(is_acyclic(d.induced(keep)));

    auto ta = tau_arc(d);
    EXPECT_EQ(ta.arcs.size(), ta.value);
    OrientedGraph removed = d, reversed = d;
    for (const Arc& a : ta.arcs) {
        ASSERT_TRUE(d.has_arc(a.tail, a.head));
        removed.remove_arc(a.tail, a.head);
        reversed.reverse_arc(a.tail, a.head);
    }
    EXPECT_TRUE(is_acyclic(removed));
    EXPECT_TRUE(is_acyclic(reversed));

    auto n = nu(d);
    EXPECT_EQ(n.cycles.size(), n.value);
    VertexSet used(d.order());
    for (const auto& c : n.cycles) {
        ASSERT_GE(c.size(), 3u);
        for (std::size_t i = 0; i < c.size(); ++i) {
            EXPECT_TRUE(d.has_arc(c[i], c[(i + 1) % c.size()]));
            EXPECT_FALSE(used.contains(c[i]));
            used.insert(c[i]);
        }
    }
}

}  // namespace

TEST(Tau, Examples) {
    EXPECT_EQ(tau(catalog("V5")).value, 1u);
    EXPECT_EQ(tau(transitive(7)).value, 0u);
    EXPECT_EQ(tau(dijoin(catalog("V5"), catalog("V5"))).value, 2u);
}

TEST(TauArc, Examples) {
    EXPECT_EQ(tau_arc(lex_product(transitive(2), directed_cycle(3))).value, 2u);
    EXPECT_EQ(tau_arc(lex_product(transitive(3), directed_cycle(3))).value, 3u);
    EXPECT_EQ(tau_arc(directed_cycle(3)).value, 1u);
    OrientedGraph q5 = catalog("Q5");
    EXPECT_EQ(tau_arc(q5).value, oracle::tau_arc(oracle::matrix_of(q5)));
}

TEST(Nu, Examples) {
    EXPECT_EQ(nu(abc_tournament(3)).value, 3u);
    EXPECT_EQ(nu(transitive(6)).value, 0u);
    EXPECT_EQ(nu(catalog("D7")).value, 1u);
}

TEST(Nu, ExcludingOneCycleVertexAtATimeIsNotEnough) {
    // Triangle 0 1 2 plus a cycle through 0 alone and one through {1, 2}:
    // two disjoint cycles exist although every cycle meets the triangle.
    OrientedGraph d = OrientedGraph::from_arcs(
        8, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}, {1, 5}, {5, 6}, {6, 7}, {7, 2}, {2, 5}});
    EXPECT_EQ(nu(d).value, oracle::nu(oracle::matrix_of(d)));
    EXPECT_EQ(nu(d).value, 2u);
}

TEST(CycleParams, MatchOraclesOnRandomGraphs) {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 250; ++i) {
        const std::size_t n = 1 + i % 7;
        OrientedGraph d = random_oriented_graph(n, 0.3 + 0.1 * (i % 6), rng);
        auto m = oracle::matrix_of(d);
        auto t = tau(d).value, ta = tau_arc(d).value, c = nu(d).value;
        EXPECT_EQ(t, oracle::tau(m));
        EXPECT_EQ(ta, oracle::tau_arc(m));
        EXPECT_EQ(c, oracle::nu(m));
        EXPECT_LE(c, t);
        EXPECT_LE(t, ta);
        check_witnesses(d);
    }
}

TEST(CycleParams, MatchOraclesOnRandomTournaments) {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 60; ++i) {
        OrientedGraph d = random_tournament(4 + i % 5, rng);
        auto m = oracle::matrix_of(d);
        EXPECT_EQ(tau(d).value, oracle::tau(m));
        EXPECT_EQ(tau_arc(d).value, oracle::tau_arc(m));
        EXPECT_EQ(nu(d).value, oracle::nu(m));
        check_witnesses(d);
    }
}

TEST(CycleParams, LargerSparseGraphsAgreeWithSubdivisionInvariance) {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 40; ++i) {
        OrientedGraph d = random_oriented_graph(3 + i % 4, 0.7, rng);
        OrientedGraph s = second_subdivision(d);
        EXPECT_EQ(tau(s).value, tau(d).value);
        EXPECT_EQ(tau_arc(s).value, tau_arc(d).value);
        EXPECT_EQ(nu(s).value, nu(d).value);
        check_witnesses(s);
    }
}

TEST(CycleParams, GuardsRefuseLargeInputs) {
    ParamLimits small{5, 24};
    EXPECT_THROW(tau(transitive(6), small), GuardExceeded);
    EXPECT_THROW(nu(transitive(6), small), GuardExceeded);
    ParamLimits narrow{64, 4};
    EXPECT_THROW(tau_arc(catalog("Q7"), narrow), GuardExceeded);
}
