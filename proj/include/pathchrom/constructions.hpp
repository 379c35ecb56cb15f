#pragma once

#include <span>
#include <vector>

#include "pathchrom/decomposition.hpp"

namespace pathchrom {

// Label (row, base) of a vertex of R_m(G); base -1 stands for the apex v0.
struct RmLabel {
    int row = 0;
    int base = -1;
    bool is_apex() const { return base < 0; }
};

// R_m(G): m rows, each holding an apex plus a copy of V(G). Two vertices are
// adjacent iff they share a row and exactly one is the apex, or they lie in
// distinct rows, neither is an apex, and their bases are adjacent in G.
// Index layout: (row-1)*(n+1) + base + 1, apex first within each row, so
// blocks are contiguous bit ranges.
struct RmGraph {
    Graph graph;
    int rows = 0;        // m
    int base_order = 0;  // n = |V(G)|

    int order() const { return graph.order(); }

    int index_of(int row, int base) const {
        if (row < 1 || row > rows) throw invalid_parameter("row " + std::to_string(row) + " outside [1.." + std::to_string(rows) + "]");
        if (base < -1 || base >= base_order) throw invalid_parameter("base vertex " + std::to_string(base) + " invalid");
        return (row - 1) * (base_order + 1) + base + 1;
    }
    RmLabel label_of(int vertex) const {
        if (vertex < 0 || vertex >= order()) throw invalid_vertex("vertex outside R_m(G)");
        return {vertex / (base_order + 1) + 1, vertex % (base_order + 1) - 1};
    }
};

RmGraph r_product(const Graph& g, int m);

// The block [I, U] as a vertex set of r; bases may include -1 for the apex.
VertexSet block(const RmGraph& r, std::span<const int> rows, std::span<const int> bases);

// Proper-color <U> with c = chi(<U>) classes and send class s to the s-th
// smallest row of `rows`; the image is an induced copy of <U> inside [I, U].
// Returns the map over V(G) with -1 outside U. Requires |rows| >= chi(<U>).
std::vector<int> embed_into_block(const Graph& g, const RmGraph& r, const VertexSet& u, std::span<const int> rows);

// Mycielski graph M_k: M_2 is a single edge; each step adds a shadow of every
// vertex plus an apex joined to all shadows, shadows inheriting the base
// adjacency. shadow_of records which vertex a shadow corresponds to.
struct MycielskiGraph {
    Graph graph;
    int k = 2;
    std::vector<int> stage;      // step at which the vertex appeared (2 for the seed edge)
    std::vector<int> shadow_of;  // -1 for seed vertices and stage apexes

    static int order_of(int k) { return 3 * (1 << (k - 2)) - 1; }
    // Vertices added at stage s >= 3 are [order_of(s-1), order_of(s)); the
    // shadow of old vertex x is order_of(s-1) + x and the apex comes last.
    int stage_first(int s) const { return order_of(s - 1); }
    int stage_apex(int s) const { return order_of(s) - 1; }
};

MycielskiGraph mycielski(int k);

// The star tree-decomposition of R_m(C_n): center bag [[m], {v_2..v_n}],
// leaf s holding row s plus [[m], {v_2, v_n}]. Requires n >= 4.
struct StarDecomposition {
    RmGraph rm;  // R_m(C_n) in the canonical layout
    TreeDecomposition decomposition;
};

StarDecomposition star_decomposition_rm_cycle(int n, int m);

// (1,v_1),...,(m,v_1), (1,v_2),...,(m,v_n), (1,v_0),...,(m,v_0): rows sweep
// fastest within each base vertex of sigma, apex column last.
Enumeration mu_enumeration(const Graph& g, const Enumeration& sigma, int m);

// Map V(R_m(M_n)) -> V(M_r) sending row i to the stage-(n+i) shadows with the
// stage apex as the row apex; an induced embedding for every r >= m+n.
std::vector<int> mycielski_embedding(int n, int m, int r);

}  // namespace pathchrom
