#include "splitchroma/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "splitchroma/check.hpp"

namespace splitchroma {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
    throw InputError("parse error at line " + std::to_string(line) + ": " + what);
}

bool data_line(const std::string& raw, std::string& out) {
    std::string s = raw;
    if (!s.empty() && s.back() == '\r') s.pop_back();
    size_t i = s.find_first_not_of(" \t");
    if (i == std::string::npos || s[i] == '#') return false;
    out = s;
    return true;
}

} // namespace

Graph parse_graph(std::istream& in) {
    std::string raw, line;
    int lineno = 0;

    int n = -1, m = -1;
    while (std::getline(in, raw)) {
        ++lineno;
        if (!data_line(raw, line)) continue;
        std::istringstream hs(line);
        if (!(hs >> n >> m) || n < 0 || m < 0) parse_fail(lineno, "expected header \"n m\"");
        std::string extra;
        if (hs >> extra) parse_fail(lineno, "trailing tokens after header");
        break;
    }
    if (n < 0) throw InputError("parse error: missing header line");

    Graph g(n);
    int read = 0;
    while (read < m && std::getline(in, raw)) {
        ++lineno;
        if (!data_line(raw, line)) continue;
        std::istringstream es(line);
        int u, v;
        if (!(es >> u >> v)) parse_fail(lineno, "expected edge \"u v\"");
        std::string extra;
        if (es >> extra) parse_fail(lineno, "trailing tokens after edge");
        if (u < 0 || u >= n || v < 0 || v >= n)
            parse_fail(lineno, "vertex id out of range 0.." + std::to_string(n - 1));
        if (u == v) parse_fail(lineno, "self-loop");
        if (!g.add_edge(u, v)) parse_fail(lineno, "duplicate edge");
        ++read;
    }
    if (read < m)
        throw InputError("parse error: expected " + std::to_string(m) +
                         " edges, found " + std::to_string(read));
    return g;
}

Graph parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "cannot open " + path);
    return parse_graph(in);
}

std::string render_graph(const Graph& g) {
    std::ostringstream os;
    os << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const Edge& e : g.edges()) os << e.first << " " << e.second << "\n";
    return os.str();
}

void write_graph_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    require(out.good(), "cannot write " + path);
    out << render_graph(g);
}

std::string render_coloring(const EdgeColoring& c) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [e, col] : c.assignment)
        edges.push_back({{"u", e.first}, {"v", e.second}, {"color", col}});
    nlohmann::json doc{{"palette", c.palette_size}, {"edges", edges}};
    return doc.dump(2) + "\n";
}

EdgeColoring parse_coloring(std::istream& in) {
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("coloring parse error: ") + e.what());
    }
    EdgeColoring c;
    try {
        c.palette_size = doc.at("palette").get<int>();
        for (const auto& item : doc.at("edges")) {
            int u = item.at("u").get<int>();
            int v = item.at("v").get<int>();
            require(u != v, "coloring contains a self-loop");
            c.set(u, v, item.at("color").get<int>());
        }
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("coloring schema error: ") + e.what());
    }
    return c;
}

EdgeColoring parse_coloring_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "cannot open " + path);
    return parse_coloring(in);
}

void write_coloring_file(const EdgeColoring& c, const std::string& path) {
    std::ofstream out(path);
    require(out.good(), "cannot write " + path);
    out << render_coloring(c);
}

} // namespace splitchroma
