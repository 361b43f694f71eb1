#pragma once

#include <vector>

#include "invnum/oriented_graph.hpp"
#include "invnum/vertex_set.hpp"

namespace invnum {

/// An ordered list of vertex sets, read as an unordered family.
struct DecyclingFamily {
    std::vector<VertexSet> sets;

    std::size_t size() const { return sets.size(); }
    bool empty() const { return sets.empty(); }
    bool operator==(const DecyclingFamily&) const = default;
};

/// Reverses every arc with both ends in `x`. The input is left untouched.
OrientedGraph invert(const OrientedGraph& d, const VertexSet& x);

/// Reverses arc uv iff an odd number of the sets contain both u and v.
OrientedGraph apply_family(const OrientedGraph& d, const DecyclingFamily& family);

/// Number of sets of `family` containing both u and v.
std::size_t co_membership(const DecyclingFamily& family, Vertex u, Vertex v);

}  // namespace invnum
