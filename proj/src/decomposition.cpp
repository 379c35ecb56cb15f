#include "pathchrom/decomposition.hpp"

#include <algorithm>
#include <numeric>

namespace pathchrom {

bool is_permutation_of_vertices(const Graph& g, const Enumeration& order) {
    if (static_cast<int>(order.size()) != g.order()) return false;
    std::vector<char> seen(g.order(), 0);
    for (int v : order) {
        if (v < 0 || v >= g.order() || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

namespace {

void check_bag_universes(const Graph& g, const std::vector<VertexSet>& bags) {
    for (const VertexSet& b : bags)
        if (b.universe() != g.order()) throw invalid_structure("bag universe does not match graph order");
}

DecompositionReport check_cover_axioms(const Graph& g, const std::vector<VertexSet>& bags) {
    VertexSet covered(g.order());
    for (const VertexSet& b : bags) covered |= b;
    if (covered.count() != g.order()) {
        for (int v = 0; v < g.order(); ++v)
            if (!covered.test(v))
                return {false, "vertex-cover: vertex " + std::to_string(v) + " is in no bag"};
    }
    for (auto [u, v] : g.edges()) {
        bool hit = false;
        for (const VertexSet& b : bags)
            if (b.test(u) && b.test(v)) {
                hit = true;
                break;
            }
        if (!hit)
            return {false,
                    "edge-cover: edge {" + std::to_string(u) + "," + std::to_string(v) + "} is in no bag"};
    }
    return {};
}

}  // namespace

DecompositionReport validate_path_decomposition(const Graph& g, const PathDecomposition& d) {
    check_bag_universes(g, d.bags);
    if (auto r = check_cover_axioms(g, d.bags); !r) return r;
    const int s = static_cast<int>(d.bags.size());
    for (int v = 0; v < g.order(); ++v) {
        int first = -1, last = -1, count = 0;
        for (int t = 0; t < s; ++t)
            if (d.bags[t].test(v)) {
                if (first < 0) first = t;
                last = t;
                ++count;
            }
        if (count > 0 && count != last - first + 1)
            return {false, "consecutiveness: bags containing vertex " + std::to_string(v) + " are not consecutive"};
    }
    return {};
}

DecompositionReport validate_tree_decomposition(const Graph& g, const TreeDecomposition& d) {
    check_bag_universes(g, d.bags);
    const int s = d.nodes();
    if (static_cast<int>(d.tree_edges.size()) != std::max(0, s - 1))
        throw invalid_structure("tree field is not a tree: expected " + std::to_string(std::max(0, s - 1)) +
                                " edges on " + std::to_string(s) + " nodes");
    std::vector<std::vector<int>> tree_adj(s);
    for (auto [a, b] : d.tree_edges) {
        if (a < 0 || a >= s || b < 0 || b >= s || a == b)
            throw invalid_structure("tree field is not a tree: bad edge");
        tree_adj[a].push_back(b);
        tree_adj[b].push_back(a);
    }
    if (s > 0) {
        std::vector<char> seen(s, 0);
        std::vector<int> stack = {0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            for (int w : tree_adj[t])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
        }
        if (reached != s) throw invalid_structure("tree field is not a tree: not connected");
    }
    if (auto r = check_cover_axioms(g, d.bags); !r) return r;
    // Connected-subtree condition: the nodes holding v must all be reachable
    // from one of them without leaving the holding set.
    for (int v = 0; v < g.order(); ++v) {
        int rootv = -1, holding = 0;
        for (int t = 0; t < s; ++t)
            if (d.bags[t].test(v)) {
                if (rootv < 0) rootv = t;
                ++holding;
            }
        if (holding <= 1) continue;
        std::vector<char> seen(s, 0);
        std::vector<int> stack = {rootv};
        seen[rootv] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            for (int w : tree_adj[t])
                if (!seen[w] && d.bags[w].test(v)) {
                    seen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
        }
        if (reached != holding)
            return {false, "connected-subtree: bags containing vertex " + std::to_string(v) +
                               " do not induce a connected subtree"};
    }
    return {};
}

PathDecomposition normalized(PathDecomposition d) {
    std::erase_if(d.bags, [](const VertexSet& b) { return b.empty(); });
    return d;
}

namespace {

int max_bag_chromatic(const Graph& g, const std::vector<VertexSet>& bags, BagChromaticCache* cache) {
    BagChromaticCache local_cache(g);
    BagChromaticCache& c = cache ? *cache : local_cache;
    int best = 0;
    for (const VertexSet& b : bags) best = std::max(best, c.chromatic_of(b));
    return best;
}

}  // namespace

int decomposition_chromatic_number(const Graph& g, const PathDecomposition& d, BagChromaticCache* cache) {
    if (auto r = validate_path_decomposition(g, d); !r) throw invalid_structure(r.violation);
    return max_bag_chromatic(g, d.bags, cache);
}

int decomposition_chromatic_number(const Graph& g, const TreeDecomposition& d, BagChromaticCache* cache) {
    if (auto r = validate_tree_decomposition(g, d); !r) throw invalid_structure(r.violation);
    return max_bag_chromatic(g, d.bags, cache);
}

PathDecomposition path_decomposition_from_enumeration(const Graph& g, const Enumeration& sigma) {
    if (!is_permutation_of_vertices(g, sigma))
        throw invalid_parameter("enumeration must be a permutation of the vertex set");
    PathDecomposition d;
    d.bags.reserve(g.order());
    VertexSet closed(g.order());   // N[{v_1..v_l}]
    VertexSet earlier(g.order());  // {v_1..v_{l-1}}
    for (int l = 0; l < g.order(); ++l) {
        int v = sigma[l];
        closed |= g.neighbors(v);
        closed.set(v);
        d.bags.push_back(closed.minus(earlier));
        earlier.set(v);
    }
    return d;
}

int enumeration_chromatic_number(const Graph& g, const Enumeration& sigma, BagChromaticCache* cache) {
    PathDecomposition d = path_decomposition_from_enumeration(g, sigma);
    BagChromaticCache local_cache(g);
    BagChromaticCache& c = cache ? *cache : local_cache;
    int best = 0;
    for (const VertexSet& b : d.bags) best = std::max(best, c.chromatic_of(b));
    return best;
}

Enumeration enumeration_from_path_decomposition(const Graph& g, const PathDecomposition& d) {
    if (auto r = validate_path_decomposition(g, d); !r) throw invalid_structure(r.violation);
    std::vector<int> last_bag(g.order(), -1);
    for (int t = 0; t < static_cast<int>(d.bags.size()); ++t)
        d.bags[t].for_each([&](int v) { last_bag[v] = t; });
    Enumeration sigma(g.order());
    std::iota(sigma.begin(), sigma.end(), 0);
    std::stable_sort(sigma.begin(), sigma.end(), [&](int a, int b) { return last_bag[a] < last_bag[b]; });
    return sigma;
}

bool is_special_enumeration(const Graph& g, const Enumeration& sigma, int k, BagChromaticCache* cache) {
    if (!is_permutation_of_vertices(g, sigma))
        throw invalid_parameter("enumeration must be a permutation of the vertex set");
    BagChromaticCache local_cache(g);
    BagChromaticCache& c = cache ? *cache : local_cache;
    PathDecomposition d = path_decomposition_from_enumeration(g, sigma);
    int chi = 0;
    for (const VertexSet& b : d.bags) chi = std::max(chi, c.chromatic_of(b));
    if (chi != k) return false;
    VertexSet earlier(g.order());
    for (int i = 0; i < g.order(); ++i) {
        int v = sigma[i];
        if (c.chromatic_of(d.bags[i]) == k && g.neighbors(v).intersects(earlier)) return false;
        earlier.set(v);
    }
    return true;
}

}  // namespace pathchrom
