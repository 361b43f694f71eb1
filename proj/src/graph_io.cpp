#include "invnum/graph_io.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "invnum/errors.hpp"

namespace invnum {

namespace {

bool next_data_line(std::istream& in, std::string& line, std::map<Vertex, std::string>& labels) {
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') {
            std::istringstream ls(line.substr(first + 1));
            std::string kw, name;
            long long idx = -1;
            if (ls >> kw && kw == "label" && ls >> idx >> name && idx >= 0)
                labels[static_cast<Vertex>(idx)] = name;
            continue;
        }
        return true;
    }
    return false;
}

long long parse_int(std::istringstream& ls, const std::string& what) {
    long long v = 0;
    if (!(ls >> v)) throw InputError("expected integer for " + what);
    return v;
}

}  // namespace

OrientedGraph read_graph(std::istream& in) {
    std::string line;
    std::map<Vertex, std::string> labels;
    if (!next_data_line(in, line, labels)) throw InputError("missing header line 'n m'");
    std::istringstream header(line);
    long long n = parse_int(header, "n");
    long long m = parse_int(header, "m");
    if (n < 0 || m < 0) throw InputError("negative n or m in header");
    std::vector<Arc> arcs;
    for (long long i = 0; i < m; ++i) {
        if (!next_data_line(in, line, labels))
            throw InputError("expected " + std::to_string(m) + " arcs, found " + std::to_string(i));
        std::istringstream ls(line);
        long long u = parse_int(ls, "arc tail");
        long long v = parse_int(ls, "arc head");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InputError("arc " + std::to_string(u) + " " + std::to_string(v) + " out of range");
        arcs.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    while (next_data_line(in, line, labels))
        throw InputError("unexpected trailing data: '" + line + "'");
    OrientedGraph g = OrientedGraph::from_arcs(static_cast<std::size_t>(n), arcs);
    if (!labels.empty()) {
        std::vector<std::string> names(g.order());
        for (Vertex v = 0; v < g.order(); ++v) {
            auto it = labels.find(v);
            names[v] = it == labels.end() ? std::to_string(v) : it->second;
        }
        g.set_labels(std::move(names));
    }
    return g;
}

OrientedGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open graph file '" + path + "'");
    return read_graph(in);
}

void write_graph(std::ostream& out, const OrientedGraph& d) {
    if (d.has_labels())
        for (Vertex v = 0; v < d.order(); ++v) out << "# label " << v << ' ' << d.label(v) << '\n';
    auto arcs = d.arcs();
    out << d.order() << ' ' << arcs.size() << '\n';
    for (const Arc& a : arcs) out << a.tail << ' ' << a.head << '\n';
}

void write_graph_file(const std::string& path, const OrientedGraph& d) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write graph file '" + path + "'");
    write_graph(out, d);
}

void write_dot(std::ostream& out, const OrientedGraph& d, const std::string& name) {
    out << "digraph " << name << " {\n";
    for (Vertex v = 0; v < d.order(); ++v) out << "  " << v << " [label=\"" << d.label(v) << "\"];\n";
    for (const Arc& a : d.arcs()) out << "  " << a.tail << " -> " << a.head << ";\n";
    out << "}\n";
}

nlohmann::json graph_to_json(const OrientedGraph& d) {
    nlohmann::json arcs = nlohmann::json::array();
    for (const Arc& a : d.arcs()) arcs.push_back({a.tail, a.head});
    nlohmann::json j{{"n", d.order()}, {"arcs", arcs}};
    if (d.has_labels()) j["labels"] = d.labels();
    return j;
}

nlohmann::json family_to_json(const DecyclingFamily& family) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& s : family.sets) j.push_back(s.members());
    return j;
}

nlohmann::json family_labels_to_json(const OrientedGraph& d, const DecyclingFamily& family) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& s : family.sets) {
        nlohmann::json names = nlohmann::json::array();
        s.for_each([&](Vertex v) { names.push_back(d.label(v)); });
        j.push_back(names);
    }
    return j;
}

DecyclingFamily family_from_json(const nlohmann::json& j, std::size_t order) {
    const nlohmann::json& arr = j.is_object() ? j.at("family") : j;
    if (!arr.is_array()) throw InputError("family must be an array of vertex arrays");
    DecyclingFamily f;
    for (const auto& set : arr) {
        if (!set.is_array()) throw InputError("family member must be an array");
        VertexSet s(order);
        for (const auto& v : set) {
            if (!v.is_number_integer() || v.get<long long>() < 0)
                throw InputError("family vertex must be a non-negative integer");
            s.insert(v.get<Vertex>());
        }
        f.sets.push_back(std::move(s));
    }
    return f;
}

}  // namespace invnum
