#include "invnum/census.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "invnum/constructions.hpp"
#include "invnum/cycle_params.hpp"
#include "invnum/errors.hpp"
#include "invnum/inversion_solver.hpp"

namespace invnum {

namespace {

std::size_t pair_count(std::size_t n) { return n * (n - (n ? 1 : 0)) / 2; }

void check_order(std::size_t n) {
    if (n > kCensusMaxOrder)
        throw GuardExceeded("census is limited to order " + std::to_string(kCensusMaxOrder) +
                            ", got " + std::to_string(n));
}

}  // namespace

OrientedGraph CanonicalTournament::graph() const {
    OrientedGraph g(order);
    std::size_t bit = pair_count(order);
    for (Vertex i = 0; i < order; ++i)
        for (Vertex j = i + 1; j < order; ++j) {
            --bit;
            if ((code >> bit) & 1u)
                g.add_arc(i, j);
            else
                g.add_arc(j, i);
        }
    return g;
}

std::string CanonicalTournament::hex() const {
    std::size_t digits = std::max<std::size_t>(1, (pair_count(order) + 3) / 4);
    std::ostringstream out;
    out << std::hex;
    out.width(static_cast<std::streamsize>(digits));
    out.fill('0');
    out << code;
    return out.str();
}

CanonicalTournament CanonicalTournament::from_hex(std::size_t order, const std::string& hex) {
    check_order(order);
    std::size_t used = 0;
    unsigned long value = 0;
    try {
        value = std::stoul(hex, &used, 16);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != hex.size() || hex.empty() || (value >> pair_count(order)) != 0)
        throw InputError("bad tournament code '" + hex + "' for order " + std::to_string(order));
    return {order, static_cast<std::uint32_t>(value)};
}

std::uint32_t tournament_code(const OrientedGraph& t) {
    if (!t.is_tournament()) throw InputError("expected a tournament");
    check_order(t.order());
    std::uint32_t code = 0;
    for (Vertex i = 0; i < t.order(); ++i)
        for (Vertex j = i + 1; j < t.order(); ++j) code = (code << 1) | (t.has_arc(i, j) ? 1u : 0u);
    return code;
}

CanonicalTournament canonical_form(const OrientedGraph& t) {
    const std::size_t n = t.order();
    std::uint32_t best = tournament_code(t);
    std::array<std::array<bool, kCensusMaxOrder>, kCensusMaxOrder> adj{};
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = 0; j < n; ++j) adj[i][j] = i != j && t.has_arc(i, j);

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::array<Vertex, kCensusMaxOrder> p{};
    std::iota(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(n), 0);
    do {
        // Build the code from the top bit, abandoning once it exceeds best.
        std::uint32_t code = 0;
        std::size_t bit = pairs.size();
        bool smaller = false, larger = false;
        for (auto [i, j] : pairs) {
            --bit;
            std::uint32_t b = adj[p[i]][p[j]] ? 1u : 0u;
            code |= b << bit;
            if (smaller) continue;
            std::uint32_t want = (best >> bit) & 1u;
            if (b > want) {
                larger = true;
                break;
            }
            smaller = b < want;
        }
        if (!larger) best = code;
    } while (std::next_permutation(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(n)));
    return {n, best};
}

std::vector<CanonicalTournament> enumerate_tournaments(std::size_t n) {
    check_order(n);
    if (n <= 1) return {CanonicalTournament{n, 0}};
    // Every tournament of order n is a class of order n-1 plus one vertex.
    std::set<CanonicalTournament> classes;
    for (const CanonicalTournament& base : enumerate_tournaments(n - 1)) {
        OrientedGraph g = base.graph();
        for (std::uint32_t beats = 0; beats < (1u << (n - 1)); ++beats) {
            OrientedGraph h(n);
            for (const Arc& a : g.arcs()) h.add_arc(a.tail, a.head);
            const auto x = static_cast<Vertex>(n - 1);
            for (Vertex v = 0; v + 1 < n; ++v) {
                if ((beats >> v) & 1u)
                    h.add_arc(x, v);
                else
                    h.add_arc(v, x);
            }
            classes.insert(canonical_form(h));
        }
    }
    return {classes.begin(), classes.end()};
}

std::vector<CensusRecord> census_sweep(std::size_t n, const std::optional<std::filesystem::path>& results) {
    std::map<std::string, CensusRecord> known;
    if (results && std::filesystem::exists(*results)) {
        std::ifstream in(*results);
        std::string line;
        while (std::getline(in, line)) {
            std::istringstream ls(line);
            std::string hex;
            CensusRecord r;
            if (!(ls >> hex)) continue;
            if (!(ls >> r.inv >> r.tau >> r.tau_arc >> r.nu))
                throw InputError("malformed census results line: " + line);
            r.tournament = CanonicalTournament::from_hex(n, hex);
            known[hex] = r;
        }
    }
    std::ofstream out;
    if (results) {
        out.open(*results, std::ios::app);
        if (!out) throw InputError("cannot write " + results->string());
    }

    std::vector<CensusRecord> records;
    for (const CanonicalTournament& t : enumerate_tournaments(n)) {
        if (auto it = known.find(t.hex()); it != known.end()) {
            records.push_back(it->second);
            continue;
        }
        OrientedGraph g = t.graph();
        CensusRecord r{t, *inversion_number(g, n).value, tau(g).value, tau_arc(g).value, nu(g).value};
        if (out) {
            out << t.hex() << ' ' << r.inv << ' ' << r.tau << ' ' << r.tau_arc << ' ' << r.nu << '\n';
            out.flush();
        }
        records.push_back(r);
    }
    return records;
}

MaxInv max_inv(std::size_t n) {
    check_order(n);
    MaxInv best;
    bool have = false;
    for (const CanonicalTournament& t : enumerate_tournaments(n)) {
        std::size_t value = *inversion_number(t.graph(), n).value;
        if (!have || value > best.value) {
            best = {value, t};
            have = true;
        }
    }
    return best;
}

std::vector<CanonicalTournament> critical_tournaments(std::size_t n_max, std::size_t k) {
    check_order(n_max);
    std::map<CanonicalTournament, std::size_t> inv;
    std::vector<CanonicalTournament> critical;
    for (std::size_t n = 0; n <= n_max; ++n)
        for (const CanonicalTournament& t : enumerate_tournaments(n)) {
            OrientedGraph g = t.graph();
            std::size_t value = *inversion_number(g, n).value;
            inv[t] = value;
            if (value != k) continue;
            bool is_critical = true;
            for (Vertex x = 0; x < n && is_critical; ++x)
                is_critical = inv.at(canonical_form(g.without_vertex(x))) < k;
            if (is_critical) critical.push_back(t);
        }
    return critical;
}

bool verify_dijoin_split(const OrientedGraph& l, const OrientedGraph& r) {
    const std::size_t n = l.order() + r.order();
    if (n > 12) throw InputError("dijoin split check is limited to 12 vertices");
    for (const auto* g : {&l, &r})
        if (inversion_number(*g, 1).value != std::size_t{1})
            throw InputError("dijoin split check needs inv(L) = inv(R) = 1");

    OrientedGraph d = dijoin(l, r);
    std::vector<std::uint32_t> out(n), in(n);
    for (const Arc& a : d.arcs()) {
        out[a.tail] |= 1u << a.head;
        in[a.head] |= 1u << a.tail;
    }
    const std::uint32_t left = (1u << l.order()) - 1;
    const std::uint32_t right = ((1u << n) - 1) & ~left;
    const std::uint32_t all = (1u << n) - 1;
    std::vector<std::uint32_t> succ(n);
    for (std::uint32_t x1 = 0; x1 <= all; ++x1)
        for (std::uint32_t x2 = 0; x2 <= all; ++x2) {
            for (std::size_t u = 0; u < n; ++u) {
                std::uint32_t odd = ((x1 >> u) & 1u ? x1 : 0u) ^ ((x2 >> u) & 1u ? x2 : 0u);
                succ[u] = (out[u] & ~odd) | (in[u] & odd);
            }
            // peel sinks until nothing changes
            std::uint32_t alive = all;
            bool progress = true;
            while (alive && progress) {
                progress = false;
                for (std::size_t u = 0; u < n; ++u)
                    if (((alive >> u) & 1u) && !(succ[u] & alive)) {
                        alive &= ~(1u << u);
                        progress = true;
                    }
            }
            if (alive) continue;
            bool split = ((x1 & ~left) == 0 && (x2 & ~right) == 0) ||
                         ((x1 & ~right) == 0 && (x2 & ~left) == 0);
            if (!split) return false;
        }
    return true;
}

}  // namespace invnum
