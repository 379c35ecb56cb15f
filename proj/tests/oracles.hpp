// Test-only oracles, kept independent of the solver paths they check:
// exhaustive chromatic number by enumerating assignments, bag construction by
// plain set algebra, graph corpus generators with a portable RNG.
#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "pathchrom/graph.hpp"

namespace oracles {

using pathchrom::Graph;

// chi by trying every assignment with k colors, k ascending. Only for tiny graphs.
inline int exhaustive_chromatic_number(const Graph& g) {
    const int n = g.order();
    if (n == 0) return 0;
    auto edges = g.edges();
    for (int k = 1; k <= n; ++k) {
        std::vector<int> a(n, 0);
        while (true) {
            bool proper = true;
            for (auto [u, v] : edges)
                if (a[u] == a[v]) {
                    proper = false;
                    break;
                }
            if (proper) return k;
            int i = 0;
            while (i < n && ++a[i] == k) a[i++] = 0;
            if (i == n) break;
        }
    }
    return n;
}

// First-fit along an order, written directly against has_edge.
inline int greedy_oracle(const Graph& g, const std::vector<int>& order) {
    std::vector<int> color(g.order(), -1);
    int used = 0;
    for (int v : order) {
        std::vector<bool> banned(used + 1, false);
        for (int w = 0; w < g.order(); ++w)
            if (g.has_edge(v, w) && color[w] >= 0) banned[color[w]] = true;
        int c = 0;
        while (banned[c]) ++c;
        color[v] = c;
        used = std::max(used, c + 1);
    }
    return used;
}

// The bag formula evaluated with std::set operations.
inline std::vector<std::set<int>> bags_by_set_algebra(const Graph& g, const std::vector<int>& sigma) {
    std::vector<std::set<int>> bags;
    for (size_t l = 0; l < sigma.size(); ++l) {
        std::set<int> closed;  // N[{v_1..v_l}]
        for (size_t i = 0; i <= l; ++i) {
            closed.insert(sigma[i]);
            for (int w = 0; w < g.order(); ++w)
                if (g.has_edge(sigma[i], w)) closed.insert(w);
        }
        for (size_t i = 0; i < l; ++i) closed.erase(sigma[i]);
        bags.push_back(std::move(closed));
    }
    return bags;
}

// min over every enumeration of the max exhaustive bag chi; fully independent
// of both the DP and the production brute force. Tiny n only.
inline int exhaustive_path_chromatic(const Graph& g) {
    const int n = g.order();
    if (n == 0) return 0;
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    int best = n;
    do {
        int worst = 0;
        for (const auto& bag : bags_by_set_algebra(g, sigma)) {
            std::vector<int> members(bag.begin(), bag.end());
            std::vector<std::pair<int, int>> edges;
            for (size_t i = 0; i < members.size(); ++i)
                for (size_t j = i + 1; j < members.size(); ++j)
                    if (g.has_edge(members[i], members[j])) edges.emplace_back(i, j);
            worst = std::max(worst, exhaustive_chromatic_number(Graph(static_cast<int>(members.size()), edges)));
            if (worst >= best) break;
        }
        best = std::min(best, worst);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return best;
}

struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    int below(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }
};

inline Graph graph_from_edge_mask(int n, uint64_t mask) {
    std::vector<std::pair<int, int>> e;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask >> bit & 1) e.emplace_back(u, v);
    return Graph(n, e);
}

inline Graph random_graph(Rng& rng, int n, int edge_percent) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.below(100) < edge_percent) e.emplace_back(u, v);
    return Graph(n, e);
}

inline bool connected_oracle(const Graph& g) {
    if (g.order() == 0) return true;
    std::vector<char> seen(g.order(), 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w = 0; w < g.order(); ++w)
            if (g.has_edge(v, w) && !seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == g.order();
}

// Connected graphs on exactly n vertices, one representative per isomorphism
// class, found by keeping edge masks that are minimal over all relabelings.
inline std::vector<Graph> connected_graphs_up_to_iso(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    const int bits = static_cast<int>(pairs.size());
    std::vector<std::vector<int>> pair_index(n, std::vector<int>(n, -1));
    for (int i = 0; i < bits; ++i) {
        pair_index[pairs[i].first][pairs[i].second] = i;
        pair_index[pairs[i].second][pairs[i].first] = i;
    }
    std::vector<int> perm(n);
    std::vector<Graph> out;
    for (uint64_t mask = 0; mask < (uint64_t{1} << bits); ++mask) {
        Graph g = graph_from_edge_mask(n, mask);
        if (!connected_oracle(g)) continue;
        std::iota(perm.begin(), perm.end(), 0);
        bool minimal = true;
        do {
            uint64_t remapped = 0;
            for (int i = 0; i < bits; ++i)
                if (mask >> i & 1) remapped |= uint64_t{1} << pair_index[perm[pairs[i].first]][perm[pairs[i].second]];
            if (remapped < mask) {
                minimal = false;
                break;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (minimal) out.push_back(std::move(g));
    }
    return out;
}

}  // namespace oracles
