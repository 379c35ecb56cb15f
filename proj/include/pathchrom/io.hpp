#pragma once

#include <string>

#include <json.hpp>

#include "pathchrom/constructions.hpp"
#include "pathchrom/decomposition.hpp"

namespace pathchrom {

using ordered_json = nlohmann::ordered_json;

// DIMACS .col: `c` comments, one `p edge <n> <m>` header, `e <u> <v>` lines
// with 1-based endpoints. Duplicate edges collapse; self-loops are rejected.
Graph parse_dimacs(const std::string& text);

// Canonical form: header, then edges sorted lexicographically, 1-based.
// parse_dimacs(write_dimacs(g)) reproduces g exactly.
std::string write_dimacs(const Graph& g);

// {schema:1, n, edges:[[u,v],...], labels?:[...]}
ordered_json graph_to_json(const Graph& g);
Graph graph_from_json(const ordered_json& j);

// {schema:1, nodes, tree_edges:[[a,b],...], bags:[[v,...],...]}; a path
// decomposition has no tree edges and reads the bags in index order.
ordered_json decomposition_to_json(const TreeDecomposition& d);
ordered_json decomposition_to_json(const PathDecomposition& d);

struct LoadedDecomposition {
    bool is_path = false;
    PathDecomposition path;  // set when is_path
    TreeDecomposition tree;  // set otherwise
};
LoadedDecomposition decomposition_from_json(const ordered_json& j, int graph_order);

enum class FileFormat { automatic, dimacs, json };
FileFormat parse_format_name(const std::string& name);

Graph load_graph_file(const std::string& path, FileFormat format = FileFormat::automatic);
LoadedDecomposition load_decomposition_file(const std::string& path, int graph_order);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace pathchrom
