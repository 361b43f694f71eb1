#include "invnum/constructions.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "invnum/errors.hpp"
#include "invnum/inversion.hpp"

namespace invnum {

namespace {

std::vector<std::string> indexed_labels(const std::string& prefix, std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

std::vector<std::string> labels_of(const OrientedGraph& d) {
    std::vector<std::string> out;
    for (Vertex v = 0; v < d.order(); ++v) out.push_back(d.label(v));
    return out;
}

/// Vertex set of TT_n given 1-based indices.
VertexSet tt_set(std::size_t n, std::initializer_list<Vertex> one_based) {
    VertexSet s(n);
    for (Vertex i : one_based) s.insert(i - 1);
    return s;
}

OrientedGraph inverted_tt(std::size_t n, std::initializer_list<Vertex> x1,
                          std::initializer_list<Vertex> x2) {
    return apply_family(transitive(n), DecyclingFamily{{tt_set(n, x1), tt_set(n, x2)}});
}

}  // namespace

OrientedGraph transitive(std::size_t n) {
    OrientedGraph g(n);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) g.add_arc(i, j);
    g.set_labels(indexed_labels("v", n));
    return g;
}

OrientedGraph directed_cycle(std::size_t k) {
    if (k < 3) throw InputError("directed cycle needs length >= 3, got " + std::to_string(k));
    OrientedGraph g(k);
    for (Vertex i = 0; i < k; ++i) g.add_arc(i, static_cast<Vertex>((i + 1) % k));
    g.set_labels(indexed_labels("v", k));
    return g;
}

OrientedGraph dijoin(const OrientedGraph& left, const OrientedGraph& right) {
    const auto nl = static_cast<Vertex>(left.order());
    OrientedGraph g(left.order() + right.order());
    for (const Arc& a : left.arcs()) g.add_arc(a.tail, a.head);
    for (const Arc& a : right.arcs()) g.add_arc(nl + a.tail, nl + a.head);
    for (Vertex u = 0; u < nl; ++u)
        for (Vertex v = 0; v < right.order(); ++v) g.add_arc(u, nl + v);

    std::vector<std::string> labels = labels_of(left);
    std::set<std::string> taken(labels.begin(), labels.end());
    for (Vertex v = 0; v < right.order(); ++v) {
        std::string name = right.label(v);
        while (taken.count(name)) name += "'";
        taken.insert(name);
        labels.push_back(name);
    }
    g.set_labels(std::move(labels));
    return g;
}

OrientedGraph lex_product(const OrientedGraph& d, const OrientedGraph& h) {
    const std::size_t nh = h.order();
    OrientedGraph g(d.order() * nh);
    auto id = [nh](Vertex a, Vertex x) { return static_cast<Vertex>(a * nh + x); };
    for (const Arc& a : d.arcs())
        for (Vertex x = 0; x < nh; ++x)
            for (Vertex y = 0; y < nh; ++y) g.add_arc(id(a.tail, x), id(a.head, y));
    for (Vertex a = 0; a < d.order(); ++a)
        for (const Arc& e : h.arcs()) g.add_arc(id(a, e.tail), id(a, e.head));
    std::vector<std::string> labels;
    for (Vertex a = 0; a < d.order(); ++a)
        for (Vertex x = 0; x < nh; ++x) labels.push_back("(" + d.label(a) + "," + h.label(x) + ")");
    g.set_labels(std::move(labels));
    return g;
}

OrientedGraph augment(const OrientedGraph& d, Vertex z, const std::string& tag) {
    if (z >= d.order())
        throw InputError("augmentation vertex " + std::to_string(z) + " out of range");
    const auto n = static_cast<Vertex>(d.order());
    const Vertex x = n;
    const Vertex y = n + 1;
    OrientedGraph g(d.order() + 2);
    for (const Arc& a : d.arcs()) g.add_arc(a.tail, a.head);
    g.add_arc(z, y);
    g.add_arc(y, x);
    g.add_arc(x, z);
    for (Vertex v = 0; v < n; ++v) {
        if (v == z) continue;
        g.add_arc(x, v);
        g.add_arc(y, v);
    }
    std::vector<std::string> labels = labels_of(d);
    labels.push_back("x" + tag);
    labels.push_back("y" + tag);
    g.set_labels(std::move(labels));
    return g;
}

OrientedGraph q_tournament(std::size_t n) {
    if (n < 1) throw InputError("Q_n needs n >= 1");
    OrientedGraph g(n);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) {
            if (j == i + 1)
                g.add_arc(j, i);
            else
                g.add_arc(i, j);
        }
    g.set_labels(indexed_labels("v", n));
    return g;
}

OrientedGraph v_tournament(std::size_t n) {
    if (n < 2) throw InputError("V_n needs n >= 2");
    OrientedGraph g = transitive(n - 1);
    OrientedGraph out(n);
    for (const Arc& a : g.arcs()) out.add_arc(a.tail, a.head);
    const auto x = static_cast<Vertex>(n - 1);
    for (Vertex i = 0; i + 1 < n; ++i) {
        // vertex i is v_{i+1}; odd 1-based index means even 0-based index
        if (i % 2 == 0)
            out.add_arc(x, i);
        else
            out.add_arc(i, x);
    }
    auto labels = indexed_labels("v", n - 1);
    labels.push_back("x");
    out.set_labels(std::move(labels));
    return out;
}

OrientedGraph abc_tournament(std::size_t k) {
    if (k < 1) throw InputError("T_k needs k >= 1");
    OrientedGraph g(3 * k);
    auto id = [k](std::size_t part, std::size_t i) { return static_cast<Vertex>(part * k + i); };
    for (std::size_t part = 0; part < 3; ++part) {
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j) g.add_arc(id(part, i), id(part, j));
        std::size_t next = (part + 1) % 3;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) g.add_arc(id(part, i), id(next, j));
    }
    std::vector<std::string> labels;
    for (const char* p : {"a", "b", "c"})
        for (auto& l : indexed_labels(p, k)) labels.push_back(l);
    g.set_labels(std::move(labels));
    return g;
}

OrientedGraph second_subdivision(const OrientedGraph& d) {
    auto arcs = d.arcs();
    const auto n = static_cast<Vertex>(d.order());
    OrientedGraph g(d.order() + 2 * arcs.size());
    std::vector<std::string> labels = labels_of(d);
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        const Vertex x = n + static_cast<Vertex>(2 * i);
        const Vertex y = x + 1;
        g.add_arc(arcs[i].tail, x);
        g.add_arc(x, y);
        g.add_arc(y, arcs[i].head);
        std::string tagname = d.label(arcs[i].tail) + ">" + d.label(arcs[i].head);
        labels.push_back("x[" + tagname + "]");
        labels.push_back("y[" + tagname + "]");
    }
    g.set_labels(std::move(labels));
    return g;
}

bool catalog_needs_param(CatalogName name) {
    switch (name) {
        case CatalogName::TT:
        case CatalogName::C:
        case CatalogName::V:
        case CatalogName::Q:
        case CatalogName::T:
            return true;
        default:
            return false;
    }
}

CatalogEntry parse_catalog_name(const std::string& raw, std::optional<std::size_t> param) {
    static const std::vector<std::pair<std::string, CatalogName>> fixed = {
        {"A6", CatalogName::A6}, {"B6", CatalogName::B6}, {"D5", CatalogName::D5},
        {"R5", CatalogName::R5}, {"V5", CatalogName::V5}, {"J", CatalogName::J},
        {"D7", CatalogName::D7}, {"H1", CatalogName::H1}, {"H2", CatalogName::H2}};
    for (const auto& [key, value] : fixed)
        if (raw == key) return {value, std::nullopt};

    // Parametric families: prefix plus an optional inline order ("TT5", "Q7").
    static const std::vector<std::pair<std::string, CatalogName>> families = {
        {"TT", CatalogName::TT}, {"C", CatalogName::C}, {"V", CatalogName::V},
        {"Q", CatalogName::Q}, {"T", CatalogName::T}};
    for (const auto& [prefix, value] : families) {
        if (raw.rfind(prefix, 0) != 0) continue;
        std::string rest = raw.substr(prefix.size());
        if (!std::all_of(rest.begin(), rest.end(), [](unsigned char c) { return std::isdigit(c); }))
            continue;
        if (!rest.empty()) {
            if (param) throw InputError("order given twice for '" + raw + "'");
            param = std::stoul(rest);
        }
        if (!param) throw InputError("catalog family '" + prefix + "' needs an order parameter");
        return {value, param};
    }
    throw InputError("unknown catalog name '" + raw + "'");
}

std::string catalog_display_name(const CatalogEntry& entry) {
    static const char* names[] = {"TT", "C", "A6", "B6", "D5", "R5", "V5",
                                  "V", "Q", "J", "D7", "H1", "H2", "T"};
    std::string s = names[static_cast<int>(entry.name)];
    if (entry.param) s += std::to_string(*entry.param);
    return s;
}

OrientedGraph catalog(const CatalogEntry& entry) {
    auto need = [&]() {
        if (!entry.param) throw InputError("missing order parameter");
        return *entry.param;
    };
    switch (entry.name) {
        case CatalogName::TT:
            return transitive(need());
        case CatalogName::C:
            return directed_cycle(need());
        case CatalogName::V:
            return v_tournament(need());
        case CatalogName::Q:
            return q_tournament(need());
        case CatalogName::T:
            return abc_tournament(need());
        case CatalogName::A6:
            return inverted_tt(6, {1, 3}, {4, 6});
        case CatalogName::B6:
            return inverted_tt(6, {1, 4, 5}, {2, 5, 6});
        case CatalogName::D5:
            return inverted_tt(5, {2, 4}, {1, 5});
        case CatalogName::R5:
            return inverted_tt(5, {1, 3, 5}, {2, 4});
        case CatalogName::V5:
            return inverted_tt(5, {1, 5}, {3, 5});
        case CatalogName::J: {
            // a=0 b=1 c=2 d=3 e=4
            OrientedGraph g = OrientedGraph::from_arcs(
                5, {{0, 1}, {1, 2}, {2, 4}, {4, 1}, {3, 0}, {1, 3}, {4, 3}, {2, 0}});
            g.set_labels({"a", "b", "c", "d", "e"});
            return g;
        }
        case CatalogName::D7: {
            // y1..y6 = 0..5, hub y = 6
            const Vertex y = 6;
            std::vector<Arc> arcs;
            for (Vertex i = 0; i < 6; ++i) arcs.push_back({i, static_cast<Vertex>((i + 1) % 6)});
            arcs.insert(arcs.end(), {{3, 0}, {1, 4}, {5, 2}});
            arcs.insert(arcs.end(), {{0, y}, {y, 1}, {2, y}, {y, 3}, {4, y}, {y, 5}});
            OrientedGraph g = OrientedGraph::from_arcs(7, arcs);
            g.set_labels({"y1", "y2", "y3", "y4", "y5", "y6", "y"});
            return g;
        }
        case CatalogName::H1:
        case CatalogName::H2: {
            OrientedGraph c3 = directed_cycle(3);
            c3.set_labels({"a", "b", "c"});
            OrientedGraph h1 = augment(c3, 0, "1");
            if (entry.name == CatalogName::H1) return h1;
            return augment(h1, 0, "2");
        }
    }
    throw InputError("unhandled catalog name");
}

OrientedGraph catalog(const std::string& name, std::optional<std::size_t> param) {
    return catalog(parse_catalog_name(name, param));
}

namespace {

class ExpressionParser {
public:
    explicit ExpressionParser(const std::string& text) : text_(text) {}

    OrientedGraph parse() {
        OrientedGraph g = expression();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + text_.substr(pos_) + "'");
        return g;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw InputError("construction '" + text_ + "': " + why);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    std::string token() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
                text_[pos_] == '\''))
            ++pos_;
        if (start == pos_) fail("expected a name");
        return text_.substr(start, pos_ - start);
    }

    OrientedGraph expression() {
        std::string name = token();
        if (name == "dijoin" || name == "lex") {
            expect('(');
            OrientedGraph a = expression();
            expect(',');
            OrientedGraph b = expression();
            expect(')');
            return name == "dijoin" ? dijoin(a, b) : lex_product(a, b);
        }
        if (name == "subdiv") {
            expect('(');
            OrientedGraph a = expression();
            expect(')');
            return second_subdivision(a);
        }
        if (name == "augment") {
            expect('(');
            OrientedGraph a = expression();
            expect(',');
            std::string z = token();
            std::string tag;
            if (accept(',')) tag = token();
            expect(')');
            return augment(a, vertex(a, z), tag);
        }
        return catalog(name);
    }

    Vertex vertex(const OrientedGraph& g, const std::string& name) const {
        for (Vertex v = 0; v < g.order(); ++v)
            if (g.label(v) == name) return v;
        if (std::all_of(name.begin(), name.end(), [](unsigned char c) { return std::isdigit(c); })) {
            std::size_t v = std::stoul(name);
            if (v < g.order()) return static_cast<Vertex>(v);
        }
        fail("no vertex '" + name + "'");
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

OrientedGraph parse_construction(const std::string& expr) { return ExpressionParser(expr).parse(); }

OrientedGraph random_tournament(std::size_t n, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(0.5);
    OrientedGraph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            if (coin(rng))
                g.add_arc(u, v);
            else
                g.add_arc(v, u);
        }
    return g;
}

OrientedGraph random_oriented_graph(std::size_t n, double density, std::mt19937_64& rng) {
    std::bernoulli_distribution join(density), coin(0.5);
    OrientedGraph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            if (!join(rng)) continue;
            if (coin(rng))
                g.add_arc(u, v);
            else
                g.add_arc(v, u);
        }
    return g;
}

}  // namespace invnum
