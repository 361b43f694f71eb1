#pragma once

#include <optional>
#include <vector>

#include "invnum/inversion.hpp"
#include "invnum/oriented_graph.hpp"

namespace invnum {

/// Partition of V(T) - {s, t} by the arcs to s and t:
/// A = N+(s) & N-(t), B = N-(s) & N+(t), C = N+(s) & N+(t), D = N-(s) & N-(t).
struct PolarPartition {
    Vertex s = 0;
    Vertex t = 0;
    VertexSet a, b, c, d;
};

PolarPartition polar_partition(const OrientedGraph& t, Vertex s, Vertex sink);

/// How to interlace an ordering a_1..a_p of A with b_1..b_q of B. z lists
/// the a_i inverted by both sets; breakpoints[i] = j_i. For a_i outside z,
/// b_j -> a_i exactly when j <= j_i; for a_i in z the pattern is reversed.
struct MergePlan {
    std::vector<Vertex> z;
    std::vector<std::size_t> breakpoints;
};

/// Greedy choice of nondecreasing breakpoints (smallest feasible j_i,
/// preferring a_i outside z on ties). `pa` must be the transitive ordering
/// of T<A>; `pb` is the ordering of B after its own inversions.
std::optional<MergePlan> merge_orderings(const OrientedGraph& t, const std::vector<Vertex>& pa,
                                         const std::vector<Vertex>& pb);

/// After deleting sources and sinks, the set N-[v] of the first v whose
/// inversion makes the rest transitive with source v. Empty when T is
/// already transitive; nullopt exactly when inv(T) >= 2.
std::optional<VertexSet> inv1_tournament(const OrientedGraph& t);

/// Where the future source s and sink t sit in (X1, X2), up to swapping
/// the two sets. sink_in_both is the arc-reversal dual of source_in_both.
enum class PoleCase { both_in_first, split, source_in_both, sink_in_both, both_in_both };

inline constexpr PoleCase kPoleCases[] = {PoleCase::both_in_first, PoleCase::split,
                                          PoleCase::source_in_both, PoleCase::sink_in_both,
                                          PoleCase::both_in_both};

/// Two sets placing s and t as in `c` whose inversion makes T transitive
/// with source s and sink t, or nullopt when no such pair exists.
std::optional<DecyclingFamily> two_inversions_with_poles(const OrientedGraph& t, Vertex s, Vertex sink,
                                                         PoleCase c);

/// Two sets decycling T, or nullopt when inv(T) > 2. A 1-set answer is
/// padded with an empty second set.
std::optional<DecyclingFamily> inv2_tournament(const OrientedGraph& t);

/// Transitive ordering (source first) of T<s>, or nullopt if T<s> has a cycle.
std::optional<std::vector<Vertex>> transitive_order(const OrientedGraph& t, const VertexSet& s);

}  // namespace invnum
