#pragma once

#include <array>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "invnum/oriented_graph.hpp"

namespace invnum {

/// Monotone 3-CNF: every clause is three distinct positive variables,
/// numbered from 1.
struct MonotoneFormula {
    std::size_t n_vars = 0;
    std::vector<std::array<std::size_t, 3>> clauses;

    /// Throws InputError on a clause with a repeated or out-of-range variable.
    void validate() const;
};

/// Text format: "p o3sat <n_vars> <m>" then m lines of three variables.
/// Blank lines and lines starting with 'c' or '#' are ignored.
MonotoneFormula read_formula(std::istream& in);
MonotoneFormula read_formula_file(const std::filesystem::path& path);
void write_formula(std::ostream& out, const MonotoneFormula& f);

/// Assignment indexed by variable - 1.
using Assignment = std::vector<bool>;

/// Vertex ids of one copy of the gadget J. The c vertex is the shared hub.
struct GadgetCopy {
    Vertex a, b, d, e;
};

/// The reduction graph together with its vertex layout: copy (i, j) of J
/// (0-based variable i, clause j) occupies ids 4(i*m + j) .. +3 in the
/// order a, b, d, e; the hub c_i is 4nm + i.
struct ReductionMap {
    OrientedGraph graph;
    std::size_t n_vars = 0;
    std::size_t m = 0;

    GadgetCopy copy(std::size_t i, std::size_t j) const;
    Vertex hub(std::size_t i) const;
    /// All vertices of the variable gadget K_i.
    VertexSet gadget(std::size_t i) const;
};

/// Builds the oriented graph D with inv(D) = 1 iff the formula has a
/// 1-in-3 assignment. Requires n_vars >= 3 and at least one clause.
ReductionMap encode(const MonotoneFormula& f);

/// Reads the assignment off a single decycling set. Throws
/// CertificationError when X does not decycle the graph or meets some K_i in
/// neither of the two allowed patterns.
Assignment decode(const ReductionMap& map, const VertexSet& x);

struct CertifiedSet {
    VertexSet set;
    bool certified = false;
};

/// The set built from an assignment: {b, c_i, d} copies for true variables
/// and {a, b, e} copies for false ones. `certified` records whether it
/// decycles the graph, which holds exactly for 1-in-3 assignments.
CertifiedSet assignment_to_set(const ReductionMap& map, const Assignment& phi);

/// True iff every clause has exactly one true variable.
bool is_one_in_three(const MonotoneFormula& f, const Assignment& phi);

/// Exhaustive search in increasing binary order (x1 is the low bit).
/// Throws GuardExceeded above `max_vars` variables.
std::optional<Assignment> brute_one_in_three(const MonotoneFormula& f, std::size_t max_vars = 25);

}  // namespace invnum
