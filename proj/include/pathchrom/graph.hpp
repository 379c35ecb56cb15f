#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pathchrom/bitset.hpp"

namespace pathchrom {

// Finite simple undirected graph on vertices 0..n-1 with set-based adjacency.
// Immutable after construction; all operations return new values.
class Graph {
public:
    Graph() = default;

    Graph(int n, std::span<const std::pair<int, int>> edge_list, std::vector<std::string> labels = {});
    Graph(int n, std::initializer_list<std::pair<int, int>> edge_list)
        : Graph(n, std::span<const std::pair<int, int>>(edge_list.begin(), edge_list.size())) {}

    int order() const { return n_; }
    int edge_count() const { return m_; }

    bool has_edge(int u, int v) const { return adj_[check(u)].test(check(v)); }
    const VertexSet& neighbors(int v) const { return adj_[check(v)]; }
    int degree(int v) const { return adj_[check(v)].count(); }

    // Sorted edge list with u < v.
    std::vector<std::pair<int, int>> edges() const;

    const std::vector<std::string>& labels() const { return labels_; }
    bool has_labels() const { return !labels_.empty(); }

    bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

private:
    int check(int v) const {
        if (v < 0 || v >= n_)
            throw invalid_vertex("vertex " + std::to_string(v) + " outside graph of order " + std::to_string(n_));
        return v;
    }

    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<std::string> labels_;
};

// Cycle C_n: vertex j adjacent to j+-1 mod n. Requires n >= 3.
Graph make_cycle(int n);

// Complete graph K_n. Requires n >= 1.
Graph make_complete(int n);

// Edgeless graph on n vertices.
Graph make_edgeless(int n);

// N[U]: U together with every vertex having a neighbor in U.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& u);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_parent;  // vertex i of graph is to_parent[i] in the parent
};

// Subgraph induced by s, with the index map back to g.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

// Minimum vertex cut size via unit-capacity max-flow on the split digraph,
// over all non-adjacent pairs (n-1 for complete graphs). Requires order >= 1.
int vertex_connectivity(const Graph& g);

struct ConnectivityCertificate {
    int value = 0;
    // Pair attaining the minimum (or -1,-1 for complete graphs) with its
    // internally-disjoint paths and a separating cut of size `value`.
    int source = -1, target = -1;
    std::vector<std::vector<int>> disjoint_paths;
    std::vector<int> min_cut;
};

ConnectivityCertificate vertex_connectivity_certificate(const Graph& g);

// True iff `map` (total on V(h)) is injective and preserves both edges and
// non-edges into g.
bool check_induced_embedding(const Graph& h, const Graph& g, std::span<const int> map);

bool is_triangle_free(const Graph& g);

bool is_connected(const Graph& g);

}  // namespace pathchrom
