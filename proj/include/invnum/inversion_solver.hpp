#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "invnum/cycle_params.hpp"
#include "invnum/inversion.hpp"
#include "invnum/oriented_graph.hpp"

namespace invnum {

/// Per-vertex k-bit membership vectors: bit i of labels[v] is set iff v is
/// in the i-th set of the family. Arc uv is reversed iff labels[u] & labels[v]
/// has odd popcount.
struct LabelAssignment {
    std::size_t k = 0;
    std::vector<std::uint32_t> labels;

    static LabelAssignment from_family(const DecyclingFamily& family, std::size_t order);
    DecyclingFamily to_family() const;
    bool reverses(Vertex u, Vertex v) const;
    bool operator==(const LabelAssignment&) const = default;
};

struct SearchOptions {
    /// Worker threads for the root-split search; 0 means hardware concurrency.
    unsigned workers = 1;
    /// Return the family of the lexicographically smallest accepting
    /// labeling regardless of scheduling.
    bool deterministic = true;
    std::optional<std::chrono::milliseconds> timeout;
    /// Search-node budget, 0 for none. Exceeding it throws GuardExceeded.
    std::uint64_t node_limit = 0;
    std::size_t max_vertices = 256;
    std::size_t max_k = 16;
};

struct SearchStats {
    std::uint64_t nodes = 0;
};

/// Exhaustive search for a decycling family of at most k sets. nullopt is a
/// complete refutation; running out of time throws Timeout and exceeding a
/// guard throws GuardExceeded. Empty sets are dropped from the result.
std::optional<DecyclingFamily> decide_inv_le_k(const OrientedGraph& d, std::size_t k,
                                               const SearchOptions& options = {},
                                               SearchStats* stats = nullptr);

struct InvCertificate {
    /// inv(D), or nullopt when inv(D) > k_max.
    std::optional<std::size_t> value;
    DecyclingFamily family;
    /// Every smaller family size was refuted by full exhaustion.
    bool exhausted_below = false;
    std::size_t k_max = 0;
};

InvCertificate inversion_number(const OrientedGraph& d, std::size_t k_max,
                                const SearchOptions& options = {});

/// True iff applying the family leaves the graph acyclic.
bool verify_family(const OrientedGraph& d, const DecyclingFamily& family);

/// One pair {u, v} per arc of a minimum feedback arc set.
DecyclingFamily family_from_fas(const OrientedGraph& d, const ParamLimits& limits = {});

/// For each vertex x of a minimum cycle transversal in turn, the sets
/// N+[x] and N+(x) taken in the current graph among vertices not yet
/// handled, which turns x into a sink. At most 2 tau(D) sets.
DecyclingFamily family_from_fvs(const OrientedGraph& d, const ParamLimits& limits = {});

/// Tournament T on V(D) containing every arc of D for which `family` is
/// still decycling. Throws InputError when the family does not decycle D.
OrientedGraph extend_to_tournament(const OrientedGraph& d, const DecyclingFamily& family);

/// Vertex order used by the search: greedily the vertex closing the most
/// directed triangles with already placed vertices, then the most arcs to
/// them, then the most directed triangles overall, then the smallest index.
std::vector<Vertex> search_order(const OrientedGraph& d);

}  // namespace invnum
