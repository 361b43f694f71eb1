#pragma once

#include <vector>

#include "invnum/oriented_graph.hpp"

namespace invnum {

/// Either an acyclic ordering (no backward arc) or a directed cycle.
struct OrderingOrCycle {
    std::vector<Vertex> ordering;
    /// Vertices of a directed cycle in traversal order; empty when acyclic.
    std::vector<Vertex> cycle;

    bool acyclic() const { return cycle.empty(); }
};

bool is_acyclic(const OrientedGraph& d);

/// Kahn's algorithm, always emitting the smallest available vertex first.
OrderingOrCycle acyclic_ordering(const OrientedGraph& d);

/// A shortest directed cycle, or an empty vector when `d` is acyclic.
std::vector<Vertex> shortest_cycle(const OrientedGraph& d);

/// Strongly connected components, each sorted, listed by smallest member.
std::vector<std::vector<Vertex>> strongly_connected_components(const OrientedGraph& d);
bool is_strongly_connected(const OrientedGraph& d);

struct RemovedVertex {
    Vertex vertex;  // index in the input graph
    bool was_source;
};

struct StrippedGraph {
    OrientedGraph graph;
    /// kept[i] is the input index of vertex i of `graph`.
    std::vector<Vertex> kept;
    /// Removal order; re-adding in reverse order rebuilds the input.
    std::vector<RemovedVertex> removed;
};

/// Repeatedly deletes sources and sinks. Deleting them never changes the
/// inversion number, and any decycling family of the result (mapped back
/// through `kept`) decycles the input.
StrippedGraph strip_sources_sinks(const OrientedGraph& d);

/// True iff tournament `t` is transitive with source `s` and sink `sink`.
/// Throws InputError when `t` is not a tournament.
bool is_transitive_with(const OrientedGraph& t, Vertex s, Vertex sink);

/// Isomorphism test by degree-filtered backtracking; fine for small orders.
bool are_isomorphic(const OrientedGraph& a, const OrientedGraph& b);

}  // namespace invnum
