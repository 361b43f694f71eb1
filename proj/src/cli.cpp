#include "invnum/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "invnum/acceptance.hpp"
#include "invnum/acyclicity.hpp"
#include "invnum/census.hpp"
#include "invnum/constructions.hpp"
#include "invnum/cycle_params.hpp"
#include "invnum/errors.hpp"
#include "invnum/graph_io.hpp"
#include "invnum/inversion_solver.hpp"
#include "invnum/sat_reduction.hpp"
#include "invnum/tournament_poly.hpp"

namespace invnum {

namespace {

using nlohmann::json;

void need_inputs(const RunConfig& c, std::size_t count) {
    if (c.inputs.size() != count)
        throw InputError(c.subcommand + " expects " + std::to_string(count) + " input argument(s), got " +
                         std::to_string(c.inputs.size()));
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

json certificate_json(const OrientedGraph& g, std::optional<std::size_t> value,
                      const DecyclingFamily& family, std::size_t k_max) {
    json j;
    j["inv"] = value ? json(*value) : json(nullptr);
    j["family"] = family_to_json(family);
    if (g.has_labels()) j["family_labels"] = family_labels_to_json(g, family);
    j["exhausted_below"] = true;
    j["k_max"] = k_max;
    return j;
}

int cmd_gen(const RunConfig& c, std::ostream& out) {
    if (c.inputs.empty() || c.inputs.size() > 2) throw InputError("gen expects a construction and an optional order");
    OrientedGraph g;
    if (c.inputs.size() == 2) {
        std::size_t param = 0;
        try {
            param = std::stoul(c.inputs[1]);
        } catch (const std::exception&) {
            throw InputError("order parameter '" + c.inputs[1] + "' is not a number");
        }
        g = catalog(c.inputs[0], param);
    } else {
        g = parse_construction(c.inputs[0]);
    }
    std::ofstream file;
    if (c.output) {
        file.open(*c.output);
        if (!file) throw InputError("cannot write " + *c.output);
    }
    std::ostream& dest = c.output ? file : out;
    if (c.format == "text")
        write_graph(dest, g);
    else if (c.format == "dot")
        write_dot(dest, g);
    else if (c.format == "json")
        emit(dest, graph_to_json(g));
    else
        throw InputError("unknown format '" + c.format + "'");
    return kExitOk;
}

SearchOptions search_options(const RunConfig& c) {
    SearchOptions o;
    o.workers = c.workers;
    o.deterministic = c.deterministic;
    if (c.timeout_seconds)
        o.timeout = std::chrono::milliseconds(static_cast<long long>(*c.timeout_seconds * 1000.0));
    return o;
}

int cmd_inv(const RunConfig& c, std::ostream& out) {
    need_inputs(c, 1);
    OrientedGraph g = read_graph_file(c.inputs[0]);
    InvCertificate cert = inversion_number(g, c.max_k, search_options(c));
    emit(out, certificate_json(g, cert.value, cert.family, c.max_k));
    return cert.value ? kExitOk : kExitNo;
}

int cmd_inv_t(const RunConfig& c, std::ostream& out) {
    need_inputs(c, 1);
    if (c.k != 1 && c.k != 2) throw InputError("--k must be 1 or 2");
    OrientedGraph g = read_graph_file(c.inputs[0]);
    if (!g.is_tournament()) throw InputError("inv-t needs a tournament");
    std::optional<DecyclingFamily> found;
    if (auto x = inv1_tournament(g)) {
        found = DecyclingFamily{};
        if (!x->empty()) found->sets.push_back(*x);
    } else if (c.k == 2) {
        found = inv2_tournament(g);
    }
    std::optional<std::size_t> value;
    if (found) value = found->size();
    emit(out, certificate_json(g, value, found ? *found : DecyclingFamily{}, c.k));
    return found ? kExitOk : kExitNo;
}

int cmd_params(const RunConfig& c, std::ostream& out) {
    need_inputs(c, 1);
    OrientedGraph g = read_graph_file(c.inputs[0]);
    auto t = tau(g);
    auto ta = tau_arc(g);
    auto n = nu(g);
    json arcs = json::array();
    for (const Arc& a : ta.arcs) arcs.push_back({a.tail, a.head});
    emit(out, {{"tau", {{"value", t.value}, {"vertices", t.vertices}}},
               {"tau_arc", {{"value", ta.value}, {"arcs", arcs}}},
               {"nu", {{"value", n.value}, {"cycles", n.cycles}}}});
    return kExitOk;
}

int cmd_bounds(const RunConfig& c, std::ostream& out) {
    need_inputs(c, 1);
    OrientedGraph g = read_graph_file(c.inputs[0]);
    DecyclingFamily fas = family_from_fas(g);
    DecyclingFamily fvs = family_from_fvs(g);
    bool ok = verify_family(g, fas) && verify_family(g, fvs);
    emit(out, {{"tau", tau(g).value},
               {"tau_arc", tau_arc(g).value},
               {"fas_family", family_to_json(fas)},
               {"fvs_family", family_to_json(fvs)},
               {"verified", ok}});
    return ok ? kExitOk : kExitNo;
}

int cmd_reduce(const RunConfig& c, std::ostream& out) {
    need_inputs(c, 1);
    MonotoneFormula f = read_formula_file(c.inputs[0]);
    ReductionMap map = encode(f);
    json j = {{"n_vars", f.n_vars},
              {"clauses", f.clauses.size()},
              {"n", map.graph.order()},
              {"arc_count", map.graph.arc_count()}};
    if (c.output)
        write_graph_file(*c.output, map.graph);
    else
        j["graph"] = graph_to_json(map.graph);
    emit(out, j);
    return kExitOk;
}

int cmd_decode(const RunConfig& c, std::ostream& out, std::ostream& err) {
    need_inputs(c, 3);
    MonotoneFormula f = read_formula_file(c.inputs[0]);
    ReductionMap map = encode(f);
    if (!(read_graph_file(c.inputs[1]) == map.graph))
        throw InputError("graph is not the reduction of the given formula");
    std::ifstream in(c.inputs[2]);
    if (!in) throw InputError("cannot open " + c.inputs[2]);
    DecyclingFamily family = family_from_json(json::parse(in), map.graph.order());
    VertexSet x(map.graph.order());
    std::size_t nonempty = 0;
    for (const auto& s : family.sets)
        if (!s.empty()) {
            x = s;
            ++nonempty;
        }
    if (nonempty != 1) throw InputError("decode needs a family with exactly one non-empty set");
    try {
        Assignment phi = decode(map, x);
        std::vector<std::size_t> true_vars;
        for (std::size_t i = 0; i < phi.size(); ++i)
            if (phi[i]) true_vars.push_back(i + 1);
        emit(out, {{"certified", true}, {"assignment", phi}, {"true_variables", true_vars}});
        return kExitOk;
    } catch (const CertificationError& e) {
        err << "certificate rejected: " << e.what() << '\n';
        emit(out, {{"certified", false}, {"error", e.what()}});
        return kExitNo;
    }
}

int cmd_census(const RunConfig& c, std::ostream& out, std::ostream& err) {
    need_inputs(c, 0);
    if (c.critical) {
        json members = json::array();
        for (const auto& t : critical_tournaments(c.order, *c.critical)) {
            members.push_back({{"order", t.order}, {"code", t.hex()}, {"arcs", graph_to_json(t.graph())["arcs"]}});
            err << "order " << t.order << "  code " << t.hex() << '\n';
        }
        emit(out, {{"k", *c.critical}, {"max_order", c.order}, {"critical", members}});
        return kExitOk;
    }
    std::optional<std::filesystem::path> resume;
    if (c.resume) resume = *c.resume;
    auto records = census_sweep(c.order, resume);
    json rows = json::array();
    std::size_t best = 0;
    std::string witness;
    err << std::left << std::setw(10) << "code" << " inv tau tau' nu\n";
    for (const auto& r : records) {
        rows.push_back({{"code", r.tournament.hex()}, {"inv", r.inv}, {"tau", r.tau},
                        {"tau_arc", r.tau_arc}, {"nu", r.nu}});
        if (witness.empty() || r.inv > best) {
            best = r.inv;
            witness = r.tournament.hex();
        }
        err << std::setw(10) << r.tournament.hex() << ' ' << std::setw(3) << r.inv << ' ' << std::setw(3)
            << r.tau << ' ' << std::setw(4) << r.tau_arc << ' ' << r.nu << '\n';
    }
    emit(out, {{"order", c.order}, {"classes", records.size()}, {"max_inv", best},
               {"witness", witness}, {"records", rows}});
    return kExitOk;
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
    need_inputs(c, 0);
    Suite suite;
    if (c.suite == "paper")
        suite = Suite::paper;
    else if (c.suite == "quick")
        suite = Suite::quick;
    else
        throw InputError("unknown suite '" + c.suite + "'");
    json rows = json::array();
    bool all = true;
    run_acceptance(suite, [&](const CriterionResult& r) {
        err << std::setw(3) << r.id << "  " << (r.passed ? "pass" : "FAIL") << "  " << std::left
            << std::setw(52) << r.title << std::right << ' ' << std::fixed << std::setprecision(1)
            << r.seconds << "s  " << r.detail << '\n';
        rows.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"checks", r.checks},
                        {"failures", r.failures}, {"detail", r.detail}});
        all &= r.passed;
    });
    emit(out, {{"suite", c.suite}, {"passed", all}, {"criteria", rows}});
    return all ? kExitOk : kExitNo;
}

}  // namespace

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
    try {
        if (c.timeout_seconds && !(*c.timeout_seconds > 0)) throw InputError("timeout must be positive");
        if (c.subcommand == "gen") return cmd_gen(c, out);
        if (c.subcommand == "inv") return cmd_inv(c, out);
        if (c.subcommand == "inv-t") return cmd_inv_t(c, out);
        if (c.subcommand == "params") return cmd_params(c, out);
        if (c.subcommand == "bounds") return cmd_bounds(c, out);
        if (c.subcommand == "reduce") return cmd_reduce(c, out);
        if (c.subcommand == "decode") return cmd_decode(c, out, err);
        if (c.subcommand == "census") return cmd_census(c, out, err);
        if (c.subcommand == "verify") return cmd_verify(c, out, err);
        throw InputError("unknown subcommand '" + c.subcommand + "'");
    } catch (const InputError& e) {
        err << "input error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const nlohmann::json::exception& e) {
        err << "input error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const CertificationError& e) {
        err << "certification error: " << e.what() << '\n';
        return kExitNo;
    } catch (const GuardExceeded& e) {
        err << "limit exceeded: " << e.what() << '\n';
        return kExitLimit;
    } catch (const Timeout& e) {
        err << "timeout: " << e.what() << '\n';
        return kExitLimit;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Inversion number toolkit for oriented graphs"};
    app.require_subcommand(1);
    RunConfig c;
    double timeout = 0;

    auto* gen = app.add_subcommand("gen", "Print a named or composed graph");
    gen->add_option("construction", c.inputs, "Catalog name or expression, then an optional order")
        ->required();
    gen->add_option("--format", c.format, "text, dot or json")->check(CLI::IsMember({"text", "dot", "json"}));
    auto* dot = gen->add_flag("--dot", "Same as --format dot");
    gen->add_option("-o,--output", c.output, "Write to a file instead of stdout");

    auto* inv = app.add_subcommand("inv", "Exact inversion number with certificate");
    inv->add_option("graph", c.inputs, "Graph file")->required();
    inv->add_option("--max-k", c.max_k, "Largest family size to try");
    inv->add_flag("--deterministic,!--nondeterministic", c.deterministic,
                  "Return the first family in search order (default on)");
    auto* timeout_opt = inv->add_option("--timeout", timeout, "Seconds before giving up");
    inv->add_option("--workers", c.workers, "Search threads, 0 for all cores");

    auto* inv_t = app.add_subcommand("inv-t", "Polynomial decision of inv(T) <= k for tournaments");
    inv_t->add_option("graph", c.inputs, "Tournament file")->required();
    inv_t->add_option("--k", c.k, "1 or 2")->required()->check(CLI::IsMember({1, 2}));

    auto* params = app.add_subcommand("params", "tau, tau' and nu with witnesses");
    params->add_option("graph", c.inputs, "Graph file")->required();

    auto* bounds = app.add_subcommand("bounds", "Decycling families from feedback sets");
    bounds->add_option("graph", c.inputs, "Graph file")->required();

    auto* reduce = app.add_subcommand("reduce", "Encode a monotone 1-in-3 SAT formula");
    reduce->add_option("formula", c.inputs, "Formula file")->required();
    reduce->add_option("-o,--output", c.output, "Write the graph to this file");

    auto* decode_cmd = app.add_subcommand("decode", "Read an assignment off a 1-set certificate");
    decode_cmd->add_option("files", c.inputs, "Formula, graph and family JSON")->expected(3)->required();

    auto* census = app.add_subcommand("census", "Tournaments up to isomorphism");
    census->add_option("--order", c.order, "Tournament order (at most 7)")->required();
    census->add_option("--critical", c.critical, "List k-inversion-critical tournaments up to --order");
    census->add_option("--resume", c.resume, "Results file to reuse and extend");

    auto* verify = app.add_subcommand("verify", "Run the acceptance checks");
    verify->add_option("--suite", c.suite, "paper or quick")->check(CLI::IsMember({"paper", "quick"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }
    c.subcommand = app.get_subcommands().front()->get_name();
    if (*dot) c.format = "dot";
    if (*timeout_opt) c.timeout_seconds = timeout;
    return run(c, out, err);
}

}  // namespace invnum
