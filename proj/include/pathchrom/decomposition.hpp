#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pathchrom/coloring.hpp"
#include "pathchrom/graph.hpp"

namespace pathchrom {

// A permutation v_1,...,v_n of the vertex set.
using Enumeration = std::vector<int>;

bool is_permutation_of_vertices(const Graph& g, const Enumeration& order);

// Ordered bag sequence B_1,...,B_s.
struct PathDecomposition {
    std::vector<VertexSet> bags;
};

// Tree on nodes 0..bags.size()-1 plus one bag per node.
struct TreeDecomposition {
    std::vector<std::pair<int, int>> tree_edges;
    std::vector<VertexSet> bags;
    int nodes() const { return static_cast<int>(bags.size()); }
};

struct DecompositionReport {
    bool ok = true;
    std::string violation;  // axiom name plus a witness vertex/edge
    explicit operator bool() const { return ok; }
};

// The three axioms: vertices covered, edges covered, and for each vertex the
// nodes holding it induce a connected subtree (consecutive bags for paths).
// Throws invalid_structure if the tree field is not a tree.
DecompositionReport validate_tree_decomposition(const Graph& g, const TreeDecomposition& d);
DecompositionReport validate_path_decomposition(const Graph& g, const PathDecomposition& d);

// Empty bags are legal in external input but carry nothing; strip them.
PathDecomposition normalized(PathDecomposition d);

// max over bags of chi(<bag>); 0 when there are no bags.
// Throws invalid_structure when the decomposition is not valid for g.
int decomposition_chromatic_number(const Graph& g, const PathDecomposition& d, BagChromaticCache* cache = nullptr);
int decomposition_chromatic_number(const Graph& g, const TreeDecomposition& d, BagChromaticCache* cache = nullptr);

// P_sigma^G: bag X_l = N[{v_1..v_l}] minus {v_1..v_{l-1}}.
PathDecomposition path_decomposition_from_enumeration(const Graph& g, const Enumeration& sigma);

// chi(P_sigma^G) without materializing the decomposition twice.
int enumeration_chromatic_number(const Graph& g, const Enumeration& sigma, BagChromaticCache* cache = nullptr);

// The conversion behind the fact that some enumeration attains chi_P: order
// vertices by the last bag containing them (ties by vertex index); the
// resulting P_sigma^G has chromatic number at most that of d.
Enumeration enumeration_from_path_decomposition(const Graph& g, const PathDecomposition& d);

// sigma is special for k = chi_P(G): chi(P_sigma^G) = k and every bag X_i
// with chi(X_i) = k has v_i without neighbors among v_1..v_{i-1}.
bool is_special_enumeration(const Graph& g, const Enumeration& sigma, int k, BagChromaticCache* cache = nullptr);

}  // namespace pathchrom
