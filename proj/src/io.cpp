#include "bbpmcs/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace bbpmcs {

namespace {

Graph parse_json_graph(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid graph JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw ParseError("graph JSON must be an object with \"n\" and \"edges\"");
    if (!j["n"].is_number_integer() || j["n"].get<long long>() < 0)
        throw ParseError("graph JSON: \"n\" must be a non-negative integer");
    Graph g(j["n"].get<int>());
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw ParseError("graph JSON: each edge must be a pair of integers");
        int u = e[0].get<int>(), v = e[1].get<int>();
        if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
            throw ParseError("graph JSON: edge endpoint out of range");
        if (u == v) throw ParseError("graph JSON: self-loop");
        g.add_edge(u, v);
    }
    return g;
}

}  // namespace

Graph parse_graph(const std::string& text) {
    size_t p = text.find_first_not_of(" \t\r\n");
    if (p == std::string::npos) throw ParseError("empty graph document");
    if (text[p] == '{') return parse_json_graph(text);

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            size_t a = line.find_first_not_of(" \t\r");
            if (a != std::string::npos && line[a] != '#') return true;
        }
        return false;
    };

    if (!next_line()) throw ParseError("empty graph document");
    long long n, m;
    {
        std::istringstream ls(line);
        std::string extra;
        if (!(ls >> n >> m) || (ls >> extra))
            throw ParseError("line " + std::to_string(lineno) + ": expected \"n m\"");
        if (n < 0 || m < 0)
            throw ParseError("line " + std::to_string(lineno) + ": counts must be non-negative");
    }
    Graph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        if (!next_line())
            throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(m) +
                             " edges, got " + std::to_string(i));
        std::istringstream ls(line);
        long long u, v;
        std::string extra;
        if (!(ls >> u >> v) || (ls >> extra))
            throw ParseError("line " + std::to_string(lineno) + ": expected \"u v\"");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("line " + std::to_string(lineno) + ": vertex index out of range");
        if (u == v) throw ParseError("line " + std::to_string(lineno) + ": self-loop");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));  // duplicates collapse
    }
    if (next_line()) throw ParseError("line " + std::to_string(lineno) + ": trailing content");
    return g;
}

Graph parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_graph(ss.str());
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

std::string to_json_graph(const Graph& g) {
    nlohmann::ordered_json j;
    j["n"] = g.vertex_count();
    j["edges"] = nlohmann::json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    return j.dump();
}

}  // namespace bbpmcs
