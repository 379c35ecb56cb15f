#pragma once

#include <optional>

#include "pathchrom/decomposition.hpp"

namespace pathchrom {

struct DpOptions {
    // The subset frontier needs 2^n bits; refuse beyond this without override.
    int size_limit = 28;
    bool size_override = false;
    bool want_witness = true;
};

struct DpReport {
    int k = 0;  // the k decided, or the chi_P value found
    bool feasible = false;
    std::optional<Enumeration> witness;
    uint64_t states_explored = 0;
    uint64_t bag_cache_hits = 0;
    double elapsed_seconds = 0.0;
};

// X_l for any enumeration whose first l vertices are exactly s with v last:
// N[s] minus (s minus {v}). Requires v in s.
VertexSet bag_of_prefix(const Graph& g, const VertexSet& s, int v);

// Subset DP for "some enumeration keeps every bag k-colorable", which decides
// chi_P(G) <= k. feasible(empty) holds; feasible(S) iff some v in S has
// feasible(S \ v) and chi(bag_of_prefix(S, v)) <= k.
DpReport path_chromatic_at_most(const Graph& g, int k, const DpOptions& opts = {});

// Least k with path_chromatic_at_most true, plus a witness enumeration
// recovered by predecessor walking. 0 with an empty witness on the empty graph.
DpReport path_chromatic_number(const Graph& g, const DpOptions& opts = {});

// A special enumeration if one exists: computes k = chi_P(G), then reruns the
// DP admitting a step only when chi(bag) <= k-1, or chi(bag) = k and the
// entered vertex has no earlier neighbor.
std::optional<Enumeration> exists_special_enumeration(const Graph& g, const DpOptions& opts = {});

// Independent oracle: min over all |V|! enumerations of chi(P_sigma^G),
// evaluated through the decomposition module. Guarded to |V| <= 9.
int brute_force_path_chromatic(const Graph& g);

}  // namespace pathchrom
