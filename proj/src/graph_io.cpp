#include "endgraph/graph_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace endgraph {

namespace {

std::string strip(const std::string& s) {
    auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::string unquote(const std::string& s) {
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"') return s.substr(1, s.size() - 2);
    return s;
}

std::string quote_if_needed(const std::string& s) {
    bool plain = !s.empty();
    for (char c : s)
        if (!(isalnum(static_cast<unsigned char>(c)) || c == '_')) plain = false;
    if (plain && !isdigit(static_cast<unsigned char>(s[0]))) return s;
    return "\"" + s + "\"";
}

}  // namespace

FiniteGraph from_dot(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<VertexId> vertices;
    std::map<std::pair<std::string, std::string>, int> mult;
    int lineno = 0;
    bool in_graph = false;
    while (std::getline(in, line)) {
        ++lineno;
        auto comment = line.find("//");
        if (comment != std::string::npos) line = line.substr(0, comment);
        line = strip(line);
        if (line.empty()) continue;
        if (!in_graph) {
            if (line.rfind("graph", 0) == 0) {
                in_graph = true;
                continue;
            }
            if (line.rfind("digraph", 0) == 0)
                throw InputError("line " + std::to_string(lineno) + ": directed graphs unsupported");
            throw InputError("line " + std::to_string(lineno) + ": expected 'graph ... {'");
        }
        if (line == "}") {
            in_graph = false;
            continue;
        }
        if (!line.empty() && line.back() == ';') line.pop_back();
        line = strip(line);
        if (line.empty()) continue;
        auto dash = line.find("--");
        if (dash == std::string::npos) {
            vertices.push_back(unquote(strip(line)));
            continue;
        }
        std::string a = unquote(strip(line.substr(0, dash)));
        std::string b = unquote(strip(line.substr(dash + 2)));
        if (a.empty() || b.empty())
            throw InputError("line " + std::to_string(lineno) + ": malformed edge");
        vertices.push_back(a);
        vertices.push_back(b);
        auto key = std::minmax(a, b);
        mult[{key.first, key.second}] += 1;
    }
    if (in_graph) throw InputError("unterminated graph block (missing '}')");
    std::vector<Edge> edges;
    for (const auto& [pr, m] : mult) edges.push_back({pr.first, pr.second, m});
    return FiniteGraph(vertices, edges);
}

std::string to_dot(const FiniteGraph& g, const std::string& name, const VertexSet& frontier) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (const auto& id : g.ids()) {
        out << "  " << quote_if_needed(id);
        if (frontier.count(id)) out << "  // frontier";
        out << ";\n";
    }
    for (const auto& [u, v, m] : g.edges())
        for (int c = 0; c < m; ++c)
            out << "  " << quote_if_needed(g.id_of(u)) << " -- " << quote_if_needed(g.id_of(v))
                << ";\n";
    out << "}\n";
    return out.str();
}

FiniteGraph from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("JSON parse error: ") + e.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw InputError("graph JSON must have 'vertices' and 'edges'");
    std::vector<VertexId> vertices;
    for (const auto& v : j["vertices"]) vertices.push_back(v.get<std::string>());
    std::vector<Edge> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() < 2)
            throw InputError("edge entries must be [u, v] or [u, v, mult]");
        Edge edge;
        edge.u = e[0].get<std::string>();
        edge.v = e[1].get<std::string>();
        edge.mult = e.size() >= 3 ? e[2].get<int>() : 1;
        edges.push_back(edge);
    }
    return FiniteGraph(vertices, edges);
}

std::string to_json_text(const FiniteGraph& g, const VertexSet& frontier,
                         std::optional<int> radius) {
    nlohmann::ordered_json j;
    j["vertices"] = nlohmann::json::array();
    for (const auto& id : g.ids()) j["vertices"].push_back(id);
    j["edges"] = nlohmann::json::array();
    for (const auto& [u, v, m] : g.edges())
        j["edges"].push_back({g.id_of(u), g.id_of(v), m});
    if (!frontier.empty()) {
        j["frontier"] = nlohmann::json::array();
        for (const auto& id : frontier) j["frontier"].push_back(id);
    }
    if (radius) j["radius"] = *radius;
    return j.dump(2) + "\n";
}

FiniteGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") return from_json_text(text);
    return from_dot(text);
}

}  // namespace endgraph
