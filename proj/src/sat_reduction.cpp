#include "invnum/sat_reduction.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "invnum/errors.hpp"
#include "invnum/inversion.hpp"
#include "invnum/inversion_solver.hpp"

namespace invnum {

void MonotoneFormula::validate() const {
    for (std::size_t j = 0; j < clauses.size(); ++j) {
        const auto& c = clauses[j];
        for (std::size_t v : c)
            if (v < 1 || v > n_vars)
                throw InputError("clause " + std::to_string(j + 1) + " uses variable " +
                                 std::to_string(v) + " outside 1.." + std::to_string(n_vars));
        if (c[0] == c[1] || c[0] == c[2] || c[1] == c[2])
            throw InputError("clause " + std::to_string(j + 1) + " repeats a variable");
    }
}

MonotoneFormula read_formula(std::istream& in) {
    MonotoneFormula f;
    std::optional<std::size_t> m;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first[0] == 'c' || first[0] == '#') continue;
        if (!m) {
            std::string kind;
            std::size_t n = 0, count = 0;
            if (first != "p" || !(ls >> kind >> n >> count) || kind != "o3sat")
                throw InputError("line " + std::to_string(lineno) + ": expected 'p o3sat <n> <m>'");
            f.n_vars = n;
            m = count;
            continue;
        }
        std::array<std::size_t, 3> clause{};
        std::istringstream cs(line);
        long long v[3];
        std::string extra;
        if (!(cs >> v[0] >> v[1] >> v[2]) || (cs >> extra))
            throw InputError("line " + std::to_string(lineno) + ": expected three variables");
        for (int i = 0; i < 3; ++i) {
            if (v[i] < 1) throw InputError("line " + std::to_string(lineno) + ": variables are positive");
            clause[i] = static_cast<std::size_t>(v[i]);
        }
        f.clauses.push_back(clause);
    }
    if (!m) throw InputError("missing 'p o3sat' header");
    if (f.clauses.size() != *m)
        throw InputError("header announces " + std::to_string(*m) + " clauses, found " +
                         std::to_string(f.clauses.size()));
    f.validate();
    return f;
}

MonotoneFormula read_formula_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path.string());
    return read_formula(in);
}

void write_formula(std::ostream& out, const MonotoneFormula& f) {
    out << "p o3sat " << f.n_vars << ' ' << f.clauses.size() << '\n';
    for (const auto& c : f.clauses) out << c[0] << ' ' << c[1] << ' ' << c[2] << '\n';
}

GadgetCopy ReductionMap::copy(std::size_t i, std::size_t j) const {
    const auto base = static_cast<Vertex>(4 * (i * m + j));
    return {base, base + 1, base + 2, base + 3};
}

Vertex ReductionMap::hub(std::size_t i) const { return static_cast<Vertex>(4 * n_vars * m + i); }

VertexSet ReductionMap::gadget(std::size_t i) const {
    VertexSet s(graph.order());
    for (std::size_t j = 0; j < m; ++j) {
        GadgetCopy g = copy(i, j);
        for (Vertex v : {g.a, g.b, g.d, g.e}) s.insert(v);
    }
    s.insert(hub(i));
    return s;
}

ReductionMap encode(const MonotoneFormula& f) {
    f.validate();
    if (f.n_vars < 3) throw InputError("need at least 3 variables");
    if (f.clauses.empty()) throw InputError("need at least one clause");
    ReductionMap map;
    map.n_vars = f.n_vars;
    map.m = f.clauses.size();
    map.graph = OrientedGraph(f.n_vars * (4 * map.m + 1));
    std::vector<std::string> labels(map.graph.order());
    for (std::size_t i = 0; i < f.n_vars; ++i) {
        const Vertex c = map.hub(i);
        labels[c] = "c" + std::to_string(i + 1);
        for (std::size_t j = 0; j < map.m; ++j) {
            auto [a, b, d, e] = map.copy(i, j);
            for (auto [tail, head] : {std::pair{a, b}, {b, c}, {c, e}, {e, b}, {d, a}, {b, d}, {e, d}, {c, a}})
                map.graph.add_arc(tail, head);
            std::string suffix = std::to_string(i + 1) + "_" + std::to_string(j + 1);
            labels[a] = "a" + suffix;
            labels[b] = "b" + suffix;
            labels[d] = "d" + suffix;
            labels[e] = "e" + suffix;
        }
    }
    for (std::size_t j = 0; j < map.m; ++j) {
        const auto& cl = f.clauses[j];
        for (std::size_t k = 0; k < 3; ++k)
            map.graph.add_arc(map.copy(cl[k] - 1, j).a, map.copy(cl[(k + 1) % 3] - 1, j).a);
    }
    map.graph.set_labels(std::move(labels));
    return map;
}

namespace {

VertexSet pattern(const ReductionMap& map, std::size_t i, bool value) {
    VertexSet s(map.graph.order());
    for (std::size_t j = 0; j < map.m; ++j) {
        GadgetCopy g = map.copy(i, j);
        if (value) {
            s.insert(g.b);
            s.insert(g.d);
        } else {
            s.insert(g.a);
            s.insert(g.b);
            s.insert(g.e);
        }
    }
    if (value) s.insert(map.hub(i));
    return s;
}

}  // namespace

Assignment decode(const ReductionMap& map, const VertexSet& x) {
    if (x.universe() != map.graph.order()) throw InputError("set over the wrong vertex universe");
    if (!verify_family(map.graph, DecyclingFamily{{x}}))
        throw CertificationError("the set does not decycle the reduction graph");
    Assignment phi(map.n_vars);
    for (std::size_t i = 0; i < map.n_vars; ++i) {
        VertexSet part = x & map.gadget(i);
        if (part == pattern(map, i, true))
            phi[i] = true;
        else if (part == pattern(map, i, false))
            phi[i] = false;
        else
            throw CertificationError("variable gadget " + std::to_string(i + 1) +
                                     " meets the set in neither allowed pattern");
    }
    return phi;
}

CertifiedSet assignment_to_set(const ReductionMap& map, const Assignment& phi) {
    if (phi.size() != map.n_vars) throw InputError("assignment length does not match the formula");
    CertifiedSet out{VertexSet(map.graph.order()), false};
    for (std::size_t i = 0; i < map.n_vars; ++i) out.set |= pattern(map, i, phi[i]);
    out.certified = verify_family(map.graph, DecyclingFamily{{out.set}});
    return out;
}

bool is_one_in_three(const MonotoneFormula& f, const Assignment& phi) {
    if (phi.size() != f.n_vars) return false;
    for (const auto& c : f.clauses)
        if (phi[c[0] - 1] + phi[c[1] - 1] + phi[c[2] - 1] != 1) return false;
    return true;
}

std::optional<Assignment> brute_one_in_three(const MonotoneFormula& f, std::size_t max_vars) {
    f.validate();
    if (f.n_vars > max_vars)
        throw GuardExceeded(std::to_string(f.n_vars) + " variables exceed the brute-force limit of " +
                            std::to_string(max_vars));
    Assignment phi(f.n_vars);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << f.n_vars); ++mask) {
        for (std::size_t i = 0; i < f.n_vars; ++i) phi[i] = (mask >> i) & 1;
        if (is_one_in_three(f, phi)) return phi;
    }
    return std::nullopt;
}

}  // namespace invnum
