#include <gtest/gtest.h>

#include <random>

#include "invnum/acyclicity.hpp"
#include "invnum/constructions.hpp"
#include "invnum/cycle_params.hpp"
#include "invnum/errors.hpp"
#include "invnum/inversion_solver.hpp"
#include "oracles.hpp"

using namespace invnum;

namespace {

std::size_t inv_of(const OrientedGraph& d, std::size_t k_max = 6) {
    auto cert = inversion_number(d, k_max);
    EXPECT_TRUE(cert.value.has_value());
    return cert.value.value_or(k_max + 1);
}

}  // namespace

TEST(Decide, SmallExamples) {
    auto c3 = decide_inv_le_k(directed_cycle(3), 1);
    ASSERT_TRUE(c3);
    EXPECT_EQ(c3->size(), 1u);
    EXPECT_TRUE(verify_family(directed_cycle(3), *c3));
    EXPECT_FALSE(decide_inv_le_k(directed_cycle(3), 0));

    OrientedGraph v5 = catalog("V5");
    EXPECT_FALSE(decide_inv_le_k(v5, 1));
    auto two = decide_inv_le_k(v5, 2);
    ASSERT_TRUE(two);
    EXPECT_LE(two->size(), 2u);
    EXPECT_TRUE(verify_family(v5, *two));

    EXPECT_FALSE(decide_inv_le_k(dijoin(v5, v5), 3));
}

TEST(Decide, AcyclicGraphsNeedNothing) {
    auto fam = decide_inv_le_k(transitive(9), 0);
    ASSERT_TRUE(fam);
    EXPECT_TRUE(fam->empty());
}

TEST(Decide, AgreesWithBruteForceOracle) {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 150; ++i) {
        const std::size_t n = 3 + i % 4;
        OrientedGraph d = (i % 2) ? random_tournament(n, rng) : random_oriented_graph(n, 0.8, rng);
        auto m = oracle::matrix_of(d);
        for (std::size_t k = 0; k <= 2; ++k) {
            auto fam = decide_inv_le_k(d, k);
            EXPECT_EQ(fam.has_value(), oracle::inv_at_most(m, k)) << "n=" << n << " k=" << k;
            if (fam) {
                EXPECT_LE(fam->size(), k);
                EXPECT_TRUE(verify_family(d, *fam));
            }
        }
    }
}

TEST(Decide, AgreesWithBruteForceOracleAtThree) {
    std::mt19937_64 rng(32);
    for (int i = 0; i < 12; ++i) {
        OrientedGraph d = random_tournament(5, rng);
        EXPECT_EQ(decide_inv_le_k(d, 3).has_value(), oracle::inv_at_most(oracle::matrix_of(d), 3));
    }
    OrientedGraph q5 = catalog("Q5");
    EXPECT_EQ(inv_of(q5), oracle::inv(oracle::matrix_of(q5)));
}

TEST(InversionNumber, CatalogValues) {
    EXPECT_EQ(inv_of(transitive(5)), 0u);
    EXPECT_EQ(inv_of(directed_cycle(5)), 1u);
    EXPECT_EQ(inv_of(catalog("V5")), 2u);
    EXPECT_EQ(inv_of(catalog("Q7")), 3u);
    EXPECT_EQ(inv_of(dijoin(catalog("V5"), catalog("V5"))), 4u);
}

TEST(InversionNumber, CertificateFields) {
    auto cert = inversion_number(catalog("V5"), 4);
    ASSERT_TRUE(cert.value);
    EXPECT_EQ(*cert.value, 2u);
    EXPECT_TRUE(cert.exhausted_below);
    EXPECT_EQ(cert.k_max, 4u);
    EXPECT_TRUE(verify_family(catalog("V5"), cert.family));

    auto none = inversion_number(catalog("Q7"), 2);
    EXPECT_FALSE(none.value);
    EXPECT_TRUE(none.family.empty());
}

TEST(InversionNumber, MonotoneUnderInducedSubgraphs) {
    std::mt19937_64 rng(33);
    for (int i = 0; i < 25; ++i) {
        OrientedGraph d = random_tournament(6 + i % 2, rng);
        const std::size_t whole = inv_of(d);
        for (Vertex v = 0; v < d.order(); ++v) EXPECT_LE(inv_of(d.without_vertex(v)), whole);
    }
}

TEST(InversionNumber, SubadditiveOverDijoins) {
    std::mt19937_64 rng(34);
    for (int i = 0; i < 15; ++i) {
        OrientedGraph l = random_tournament(3 + i % 3, rng);
        OrientedGraph r = random_oriented_graph(3 + i % 2, 0.8, rng);
        const std::size_t sum = inv_of(l) + inv_of(r);
        const std::size_t joint = inv_of(dijoin(l, r));
        EXPECT_LE(joint, sum);
        EXPECT_GE(joint, std::max(inv_of(l), inv_of(r)));
    }
}

TEST(InversionNumber, BoundedByCycleParameters) {
    std::mt19937_64 rng(35);
    for (int i = 0; i < 40; ++i) {
        OrientedGraph d = random_oriented_graph(4 + i % 4, 0.7, rng);
        const std::size_t v = inv_of(d);
        EXPECT_LE(v, tau_arc(d).value);
        EXPECT_LE(v, 2 * tau(d).value);
    }
}

TEST(FamilyFromFas, OnePairPerArc) {
    OrientedGraph d = lex_product(transitive(2), directed_cycle(3));
    auto fam = family_from_fas(d);
    EXPECT_EQ(fam.size(), tau_arc(d).value);
    for (const auto& x : fam.sets) EXPECT_EQ(x.size(), 2u);
    EXPECT_TRUE(verify_family(d, fam));
}

TEST(FamilyFromFvs, Examples) {
    OrientedGraph v5 = catalog("V5");
    auto fam = family_from_fvs(v5);
    EXPECT_LE(fam.size(), 2u);
    EXPECT_TRUE(verify_family(v5, fam));

    EXPECT_TRUE(family_from_fvs(transitive(6)).empty());

    OrientedGraph vv = dijoin(v5, v5);
    auto big = family_from_fvs(vv);
    EXPECT_LE(big.size(), 4u);
    EXPECT_TRUE(verify_family(vv, big));
}

TEST(FamilyFromFvs, AtMostTwiceTauAndDecycling) {
    std::mt19937_64 rng(36);
    for (int i = 0; i < 80; ++i) {
        OrientedGraph d = random_oriented_graph(3 + i % 6, 0.6, rng);
        auto fam = family_from_fvs(d);
        EXPECT_LE(fam.size(), 2 * tau(d).value);
        EXPECT_TRUE(verify_family(d, fam));
    }
}

TEST(ExtendToTournament, ContainsGraphAndKeepsFamily) {
    std::mt19937_64 rng(37);
    for (int i = 0; i < 60; ++i) {
        OrientedGraph d = random_oriented_graph(3 + i % 4, 0.5, rng);
        auto fam = family_from_fvs(d);
        OrientedGraph t = extend_to_tournament(d, fam);
        EXPECT_TRUE(t.is_tournament());
        for (const Arc& a : d.arcs()) EXPECT_TRUE(t.has_arc(a.tail, a.head));
        EXPECT_TRUE(verify_family(t, fam));
    }
}

TEST(ExtendToTournament, RejectsNonDecyclingFamily) {
    EXPECT_THROW(extend_to_tournament(directed_cycle(4), DecyclingFamily{}), InputError);
}

TEST(LabelAssignment, RoundTrip) {
    DecyclingFamily fam{{VertexSet(5, {0, 1, 2}), VertexSet(5, {2, 4})}};
    auto lab = LabelAssignment::from_family(fam, 5);
    EXPECT_EQ(lab.k, 2u);
    EXPECT_EQ(lab.labels[2], 3u);
    EXPECT_EQ(lab.labels[3], 0u);
    EXPECT_EQ(lab.to_family(), fam);
    EXPECT_TRUE(lab.reverses(0, 1));
    EXPECT_TRUE(lab.reverses(2, 4));
    EXPECT_FALSE(lab.reverses(0, 4));
    EXPECT_FALSE(lab.reverses(0, 3));
}

TEST(LabelAssignment, ReversalMatchesApplyFamily) {
    std::mt19937_64 rng(38);
    for (int i = 0; i < 30; ++i) {
        const std::size_t n = 6;
        DecyclingFamily fam;
        for (int s = 0; s < 3; ++s) {
            VertexSet x(n);
            for (Vertex v = 0; v < n; ++v)
                if (rng() & 1) x.insert(v);
            fam.sets.push_back(x);
        }
        OrientedGraph t = random_tournament(n, rng);
        OrientedGraph after = apply_family(t, fam);
        auto lab = LabelAssignment::from_family(fam, n);
        for (const Arc& a : t.arcs())
            EXPECT_EQ(after.has_arc(a.head, a.tail), lab.reverses(a.tail, a.head));
    }
}

TEST(SearchOrder, IsAPermutation) {
    OrientedGraph q7 = catalog("Q7");
    auto order = search_order(q7);
    ASSERT_EQ(order.size(), 7u);
    std::sort(order.begin(), order.end());
    for (Vertex v = 0; v < 7; ++v) EXPECT_EQ(order[v], v);
}

TEST(Workers, DeterministicResultIndependentOfWorkerCount) {
    std::mt19937_64 rng(39);
    for (int i = 0; i < 10; ++i) {
        OrientedGraph d = random_tournament(7, rng);
        SearchOptions one;
        SearchOptions many;
        many.workers = 4;
        auto a = inversion_number(d, 4, one);
        auto b = inversion_number(d, 4, many);
        EXPECT_EQ(a.value, b.value);
        EXPECT_EQ(a.family, b.family);
    }
}

TEST(Guards, NodeLimitAndSizes) {
    SearchOptions tight;
    tight.node_limit = 10;
    EXPECT_THROW(decide_inv_le_k(dijoin(catalog("V5"), catalog("V5")), 3, tight), GuardExceeded);

    SearchOptions few_k;
    few_k.max_k = 2;
    EXPECT_THROW(decide_inv_le_k(catalog("Q7"), 3, few_k), GuardExceeded);

    SearchOptions few_v;
    few_v.max_vertices = 5;
    EXPECT_THROW(decide_inv_le_k(catalog("Q7"), 2, few_v), GuardExceeded);
}

TEST(Guards, TimeoutIsReported) {
    SearchOptions quick;
    quick.timeout = std::chrono::milliseconds(0);
    OrientedGraph v5 = catalog("V5");
    OrientedGraph big = dijoin(dijoin(v5, v5), v5);
    EXPECT_THROW(decide_inv_le_k(big, 5, quick), Timeout);
}
