#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "invnum/acyclicity.hpp"
#include "invnum/errors.hpp"
#include "invnum/inversion_solver.hpp"
#include "invnum/sat_reduction.hpp"
#include "oracles.hpp"

using namespace invnum;

namespace {

MonotoneFormula formula(std::size_t n, std::vector<std::array<std::size_t, 3>> clauses) {
    return MonotoneFormula{n, std::move(clauses)};
}

MonotoneFormula random_formula(std::size_t n, std::size_t m, std::mt19937_64& rng) {
    MonotoneFormula f{n, {}};
    std::uniform_int_distribution<std::size_t> pick(1, n);
    while (f.clauses.size() < m) {
        std::array<std::size_t, 3> c{pick(rng), pick(rng), pick(rng)};
        if (c[0] != c[1] && c[1] != c[2] && c[0] != c[2]) f.clauses.push_back(c);
    }
    return f;
}

}  // namespace

TEST(Gadget, OnlyTwoDecyclingSets) {
    // a b c d e = 0..4
    OrientedGraph j = OrientedGraph::from_arcs(
        5, {{0, 1}, {1, 2}, {2, 4}, {4, 1}, {3, 0}, {1, 3}, {4, 3}, {2, 0}});
    auto m = oracle::matrix_of(j);
    std::vector<std::uint32_t> good;
    for (std::uint32_t x = 0; x < 32; ++x)
        if (oracle::acyclic(oracle::apply(m, {x}))) good.push_back(x);
    const std::uint32_t abe = 0b10011, bcd = 0b01110;
    EXPECT_EQ(good, (std::vector<std::uint32_t>{bcd, abe}));
}

TEST(Encode, SingleClause) {
    auto map = encode(formula(3, {{1, 2, 3}}));
    EXPECT_EQ(map.graph.order(), 15u);
    EXPECT_EQ(map.graph.arc_count(), 27u);
    EXPECT_EQ(map.graph.label(map.hub(0)), "c1");
    EXPECT_EQ(map.graph.label(map.copy(2, 0).a), "a3_1");
    EXPECT_FALSE(decide_inv_le_k(map.graph, 0));
    auto fam = decide_inv_le_k(map.graph, 1);
    ASSERT_TRUE(fam);
    auto phi = decode(map, fam->sets.at(0));
    EXPECT_TRUE(is_one_in_three(formula(3, {{1, 2, 3}}), phi));
}

TEST(Encode, UnsatisfiableFormulaNeedsTwoSets) {
    auto f = formula(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
    EXPECT_FALSE(brute_one_in_three(f));
    auto map = encode(f);
    EXPECT_FALSE(decide_inv_le_k(map.graph, 1));
}

TEST(Encode, RejectsTooSmallFormulas) {
    EXPECT_THROW(encode(formula(2, {})), InputError);
    EXPECT_THROW(encode(formula(3, {})), InputError);
    EXPECT_THROW(encode(formula(3, {{1, 1, 2}})), InputError);
    EXPECT_THROW(encode(formula(3, {{1, 2, 4}})), InputError);
}

TEST(Encode, VariableGadgetsBecomeAcyclicUnderEitherPattern) {
    std::mt19937_64 rng(51);
    auto map = encode(random_formula(5, 4, rng));
    for (bool value : {false, true}) {
        auto x = assignment_to_set(map, Assignment(5, value)).set;
        OrientedGraph after = invert(map.graph, x);
        for (std::size_t i = 0; i < 5; ++i) {
            EXPECT_FALSE(is_acyclic(map.graph.induced(map.gadget(i))));
            EXPECT_TRUE(is_acyclic(after.induced(map.gadget(i))));
        }
    }
}

TEST(Encode, ConnectedFormulasGiveStrongGraphs) {
    auto map = encode(formula(5, {{1, 2, 3}, {3, 4, 5}, {1, 4, 2}}));
    EXPECT_TRUE(is_strongly_connected(map.graph));
}

TEST(Encode, DecisionMatchesBruteForce) {
    std::mt19937_64 rng(52);
    for (int i = 0; i < 20; ++i) {
        auto f = random_formula(4 + i % 3, 2 + i % 4, rng);
        auto map = encode(f);
        auto fam = decide_inv_le_k(map.graph, 1);
        EXPECT_EQ(fam.has_value(), brute_one_in_three(f).has_value());
        if (fam) EXPECT_TRUE(is_one_in_three(f, decode(map, fam->sets.at(0))));
    }
}

TEST(AssignmentToSet, CertifiedExactlyForOneInThree) {
    auto f = formula(4, {{1, 2, 3}, {2, 3, 4}});
    auto map = encode(f);
    for (std::uint32_t bits = 0; bits < 16; ++bits) {
        Assignment phi(4);
        for (std::size_t i = 0; i < 4; ++i) phi[i] = (bits >> i) & 1u;
        auto cs = assignment_to_set(map, phi);
        EXPECT_EQ(cs.certified, is_one_in_three(f, phi));
        EXPECT_EQ(cs.certified, is_acyclic(invert(map.graph, cs.set)));
        EXPECT_EQ(cs.set.contains(map.hub(0)), phi[0]);
        if (cs.certified) EXPECT_EQ(decode(map, cs.set), phi) << bits;
    }
}

TEST(AssignmentToSet, SetShapes) {
    auto map = encode(formula(3, {{1, 2, 3}}));
    auto cs = assignment_to_set(map, {true, false, false});
    ASSERT_TRUE(cs.certified);
    auto t = map.copy(0, 0), f = map.copy(1, 0);
    EXPECT_TRUE(cs.set.contains(t.b) && cs.set.contains(t.d) && !cs.set.contains(t.a));
    EXPECT_TRUE(cs.set.contains(f.a) && cs.set.contains(f.b) && cs.set.contains(f.e));
    EXPECT_FALSE(cs.set.contains(map.hub(1)));
    EXPECT_EQ(cs.set.size(), 9u);
}

TEST(Decode, RejectsBadSets) {
    auto map = encode(formula(3, {{1, 2, 3}}));
    EXPECT_THROW(decode(map, map.graph.empty_set()), CertificationError);
    auto cs = assignment_to_set(map, {true, true, false});
    EXPECT_FALSE(cs.certified);
    EXPECT_THROW(decode(map, cs.set), CertificationError);
    auto good = assignment_to_set(map, {false, false, true}).set;
    good.toggle(map.copy(0, 0).e);
    EXPECT_THROW(decode(map, good), CertificationError);
    EXPECT_THROW(decode(map, VertexSet(3)), InputError);
}

TEST(Brute, EmptyFormulaAndGuards) {
    auto phi = brute_one_in_three(formula(3, {}));
    ASSERT_TRUE(phi);
    EXPECT_EQ(*phi, Assignment(3, false));
    auto one = brute_one_in_three(formula(3, {{1, 2, 3}}));
    ASSERT_TRUE(one);
    EXPECT_EQ(*one, (Assignment{true, false, false}));
    EXPECT_THROW(brute_one_in_three(formula(30, {{1, 2, 3}})), GuardExceeded);
}

TEST(FormulaIo, RoundTrip) {
    auto f = formula(4, {{1, 2, 3}, {2, 3, 4}});
    std::stringstream ss;
    write_formula(ss, f);
    auto g = read_formula(ss);
    EXPECT_EQ(g.n_vars, 4u);
    EXPECT_EQ(g.clauses, f.clauses);
}

TEST(FormulaIo, CommentsAndErrors) {
    std::istringstream ok("c hello\n# note\n\np o3sat 3 1\n1 2 3\n");
    EXPECT_EQ(read_formula(ok).clauses.size(), 1u);
    std::istringstream no_header("1 2 3\n");
    EXPECT_THROW(read_formula(no_header), InputError);
    std::istringstream short_clause("p o3sat 3 1\n1 2\n");
    EXPECT_THROW(read_formula(short_clause), InputError);
    std::istringstream count("p o3sat 3 2\n1 2 3\n");
    EXPECT_THROW(read_formula(count), InputError);
    std::istringstream zero("p o3sat 3 1\n0 1 2\n");
    EXPECT_THROW(read_formula(zero), InputError);
    EXPECT_THROW(read_formula_file("/nonexistent/formula.txt"), InputError);
}
