#pragma once

#include <cstddef>
#include <vector>

#include "invnum/oriented_graph.hpp"

namespace invnum {

struct ParamLimits {
    /// Largest order accepted by tau() and nu().
    std::size_t max_vertices = 64;
    /// Largest strong component left after reductions that the feedback arc
    /// set dynamic program will expand (2^m table entries).
    std::size_t max_fas_component = 24;
};

/// tau(D): minimum cycle transversal (feedback vertex set).
struct FeedbackVertexResult {
    std::size_t value = 0;
    std::vector<Vertex> vertices;  // sorted
};

/// tau'(D): minimum cycle arc-transversal. Reversing the witness also
/// leaves D acyclic.
struct FeedbackArcResult {
    std::size_t value = 0;
    std::vector<Arc> arcs;  // sorted
};

/// nu(D): maximum number of vertex-disjoint directed cycles.
struct PackingResult {
    std::size_t value = 0;
    std::vector<std::vector<Vertex>> cycles;
};

FeedbackVertexResult tau(const OrientedGraph& d, const ParamLimits& limits = {});
FeedbackArcResult tau_arc(const OrientedGraph& d, const ParamLimits& limits = {});
PackingResult nu(const OrientedGraph& d, const ParamLimits& limits = {});

}  // namespace invnum
