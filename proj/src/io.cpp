#include "pathchrom/io.hpp"

#include <fstream>
#include <sstream>

namespace pathchrom {

Graph parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            if (n >= 0) throw parse_error(lineno, "duplicate p line");
            std::string kind;
            int declared_n, declared_m;
            if (!(ls >> kind >> declared_n >> declared_m) || kind != "edge")
                throw parse_error(lineno, "expected `p edge <n> <m>`");
            if (declared_n < 0) throw parse_error(lineno, "negative vertex count");
            n = declared_n;
        } else if (tag == "e") {
            if (n < 0) throw parse_error(lineno, "edge before the p line");
            int u, v;
            if (!(ls >> u >> v)) throw parse_error(lineno, "expected `e <u> <v>`");
            if (u < 1 || u > n || v < 1 || v > n)
                throw parse_error(lineno, "vertex out of range 1.." + std::to_string(n));
            if (u == v) throw parse_error(lineno, "self-loop at vertex " + std::to_string(u));
            edges.emplace_back(u - 1, v - 1);
        } else {
            throw parse_error(lineno, "unknown line type `" + tag + "`");
        }
    }
    if (n < 0) throw parse_error(lineno, "missing p line");
    return Graph(n, edges);
}

std::string write_dimacs(const Graph& g) {
    std::ostringstream out;
    auto edges = g.edges();  // already sorted lexicographically with u < v
    out << "p edge " << g.order() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

ordered_json graph_to_json(const Graph& g) {
    ordered_json j;
    j["schema"] = 1;
    j["n"] = g.order();
    auto edges = ordered_json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    if (g.has_labels()) j["labels"] = g.labels();
    return j;
}

namespace {
void require_schema(const ordered_json& j) {
    if (!j.is_object()) throw invalid_parameter("JSON document must be an object");
    if (j.contains("schema") && j["schema"] != 1)
        throw invalid_parameter("unsupported schema version");
}
}  // namespace

Graph graph_from_json(const ordered_json& j) {
    require_schema(j);
    if (!j.contains("n") || !j["n"].is_number_integer()) throw invalid_parameter("graph JSON needs integer `n`");
    int n = j["n"].get<int>();
    std::vector<std::pair<int, int>> edges;
    if (j.contains("edges"))
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2) throw invalid_parameter("graph JSON edge must be a pair");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
    return Graph(n, edges, std::move(labels));
}

namespace {
ordered_json bags_to_json(const std::vector<VertexSet>& bags) {
    auto arr = ordered_json::array();
    for (const VertexSet& b : bags) arr.push_back(b.to_vector());
    return arr;
}
}  // namespace

ordered_json decomposition_to_json(const TreeDecomposition& d) {
    ordered_json j;
    j["schema"] = 1;
    j["nodes"] = d.nodes();
    auto te = ordered_json::array();
    for (auto [a, b] : d.tree_edges) te.push_back({a, b});
    j["tree_edges"] = std::move(te);
    j["bags"] = bags_to_json(d.bags);
    return j;
}

ordered_json decomposition_to_json(const PathDecomposition& d) {
    ordered_json j;
    j["schema"] = 1;
    j["nodes"] = d.bags.size();
    j["tree_edges"] = ordered_json::array();
    j["bags"] = bags_to_json(d.bags);
    return j;
}

LoadedDecomposition decomposition_from_json(const ordered_json& j, int graph_order) {
    require_schema(j);
    if (!j.contains("bags") || !j["bags"].is_array())
        throw invalid_structure("decomposition JSON needs a `bags` array");
    std::vector<VertexSet> bags;
    for (const auto& bag : j["bags"]) {
        VertexSet b(graph_order);
        for (const auto& v : bag) {
            int x = v.get<int>();
            if (x < 0 || x >= graph_order)
                throw invalid_structure("bag vertex " + std::to_string(x) + " outside the graph");
            b.set(x);
        }
        bags.push_back(std::move(b));
    }
    if (j.contains("nodes") && j["nodes"].get<int>() != static_cast<int>(bags.size()))
        throw invalid_structure("`nodes` does not match the number of bags");
    LoadedDecomposition out;
    std::vector<std::pair<int, int>> tree_edges;
    if (j.contains("tree_edges"))
        for (const auto& e : j["tree_edges"]) tree_edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    if (tree_edges.empty()) {
        out.is_path = true;
        out.path.bags = std::move(bags);
    } else {
        out.tree.bags = std::move(bags);
        out.tree.tree_edges = std::move(tree_edges);
    }
    return out;
}

FileFormat parse_format_name(const std::string& name) {
    if (name == "auto") return FileFormat::automatic;
    if (name == "dimacs") return FileFormat::dimacs;
    if (name == "json") return FileFormat::json;
    throw invalid_parameter("unknown format `" + name + "` (expected dimacs or json)");
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw invalid_parameter("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw invalid_parameter("cannot write file: " + path);
    out << text;
}

Graph load_graph_file(const std::string& path, FileFormat format) {
    std::string text = read_text_file(path);
    if (format == FileFormat::automatic) {
        auto dot = path.find_last_of('.');
        std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
        if (ext == "json") format = FileFormat::json;
        else if (ext == "col" || ext == "dimacs") format = FileFormat::dimacs;
        else {
            // sniff: JSON documents start with '{'
            auto first = text.find_first_not_of(" \t\r\n");
            format = (first != std::string::npos && text[first] == '{') ? FileFormat::json : FileFormat::dimacs;
        }
    }
    if (format == FileFormat::json) return graph_from_json(ordered_json::parse(text));
    return parse_dimacs(text);
}

LoadedDecomposition load_decomposition_file(const std::string& path, int graph_order) {
    return decomposition_from_json(ordered_json::parse(read_text_file(path)), graph_order);
}

}  // namespace pathchrom
