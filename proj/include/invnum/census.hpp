#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "invnum/oriented_graph.hpp"

namespace invnum {

inline constexpr std::size_t kCensusMaxOrder = 7;

/// A tournament in canonical form. Bits of `code` follow the vertex pairs
/// (0,1), (0,2), ..., (0,n-1), (1,2), ... with the first pair as the most
/// significant bit; a bit is 1 when the lower vertex beats the higher one.
/// The canonical code is the minimum over all relabelings.
struct CanonicalTournament {
    std::size_t order = 0;
    std::uint32_t code = 0;

    OrientedGraph graph() const;
    /// Zero-padded hexadecimal code, at least one digit.
    std::string hex() const;
    static CanonicalTournament from_hex(std::size_t order, const std::string& hex);

    auto operator<=>(const CanonicalTournament&) const = default;
};

/// Code of `t` under its current labeling.
std::uint32_t tournament_code(const OrientedGraph& t);

/// Throws InputError for non-tournaments, GuardExceeded above order 7.
CanonicalTournament canonical_form(const OrientedGraph& t);

/// One representative per isomorphism class, sorted by code.
std::vector<CanonicalTournament> enumerate_tournaments(std::size_t n);

struct CensusRecord {
    CanonicalTournament tournament;
    std::size_t inv = 0;
    std::size_t tau = 0;
    std::size_t tau_arc = 0;
    std::size_t nu = 0;
};

/// inv, tau, tau' and nu for every class of order n. With `results`, lines
/// "<hex> <inv> <tau> <tau_arc> <nu>" already in the file are reused and new
/// ones are appended as they are computed.
std::vector<CensusRecord> census_sweep(std::size_t n,
                                       const std::optional<std::filesystem::path>& results = {});

struct MaxInv {
    std::size_t value = 0;
    CanonicalTournament witness;
};

/// Maximum inversion number over tournaments of order n, with the first
/// class (by code) attaining it.
MaxInv max_inv(std::size_t n);

/// Classes of order <= n_max with inv(T) = k and inv(T - x) < k for all x.
std::vector<CanonicalTournament> critical_tournaments(std::size_t n_max, std::size_t k);

/// Checks over dijoin(L, R) that every decycling pair (X1, X2) has one set
/// inside V(L) and the other inside V(R). Requires inv(L) = inv(R) = 1 and
/// at most 12 vertices in total (InputError otherwise).
bool verify_dijoin_split(const OrientedGraph& l, const OrientedGraph& r);

}  // namespace invnum
