#include "pathchrom/constructions.hpp"

#include <algorithm>

namespace pathchrom {

RmGraph r_product(const Graph& g, int m) {
    if (m < 1) throw invalid_parameter("r_product requires m >= 1, got " + std::to_string(m));
    const int n = g.order();
    RmGraph r;
    r.rows = m;
    r.base_order = n;
    const int total = m * (n + 1);
    std::vector<std::pair<int, int>> edges;
    auto idx = [n](int row, int base) { return (row - 1) * (n + 1) + base + 1; };
    for (int i = 1; i <= m; ++i)
        for (int b = 0; b < n; ++b) edges.emplace_back(idx(i, -1), idx(i, b));
    for (auto [u, v] : g.edges())
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= m; ++j) {
                if (i == j) continue;
                edges.emplace_back(idx(i, u), idx(j, v));
            }
    std::vector<std::string> labels(total);
    for (int i = 1; i <= m; ++i) {
        labels[idx(i, -1)] = "(" + std::to_string(i) + ",v0)";
        for (int b = 0; b < n; ++b)
            labels[idx(i, b)] = "(" + std::to_string(i) + ",v" + std::to_string(b + 1) + ")";
    }
    r.graph = Graph(total, edges, std::move(labels));
    return r;
}

VertexSet block(const RmGraph& r, std::span<const int> rows, std::span<const int> bases) {
    VertexSet out(r.order());
    for (int row : rows)
        for (int base : bases) out.set(r.index_of(row, base));
    return out;
}

std::vector<int> embed_into_block(const Graph& g, const RmGraph& r, const VertexSet& u, std::span<const int> rows) {
    if (u.universe() != g.order()) throw invalid_vertex("vertex set universe does not match the base graph");
    if (g.order() != r.base_order) throw invalid_parameter("R_m graph was not built from this base graph");
    InducedSubgraph sub = induced_subgraph(g, u);
    Coloring coloring = optimal_coloring(sub.graph);
    const int c = coloring.palette;
    if (static_cast<int>(rows.size()) < c)
        throw invalid_parameter("embed_into_block needs at least chi(<U>) = " + std::to_string(c) + " rows, got " +
                                std::to_string(rows.size()));
    std::vector<int> chosen(rows.begin(), rows.end());
    std::sort(chosen.begin(), chosen.end());
    std::vector<int> map(g.order(), -1);
    for (int i = 0; i < sub.graph.order(); ++i)
        map[sub.to_parent[i]] = r.index_of(chosen[coloring.color[i]], sub.to_parent[i]);
    return map;
}

MycielskiGraph mycielski(int k) {
    if (k < 2) throw invalid_parameter("mycielski requires k >= 2, got " + std::to_string(k));
    MycielskiGraph m;
    m.k = k;
    std::vector<std::pair<int, int>> edges = {{0, 1}};
    m.stage = {2, 2};
    m.shadow_of = {-1, -1};
    int prev_order = 2;
    for (int s = 3; s <= k; ++s) {
        const int shadow_base = prev_order;
        const int apex = 2 * prev_order;
        std::vector<std::pair<int, int>> old_edges = edges;
        for (auto [x, y] : old_edges) {
            if (x >= prev_order || y >= prev_order) continue;  // only base edges
            edges.emplace_back(shadow_base + x, y);
            edges.emplace_back(shadow_base + y, x);
        }
        for (int x = 0; x < prev_order; ++x) {
            edges.emplace_back(apex, shadow_base + x);
            m.stage.push_back(s);
            m.shadow_of.push_back(x);
        }
        m.stage.push_back(s);
        m.shadow_of.push_back(-1);
        prev_order = 2 * prev_order + 1;
    }
    m.graph = Graph(prev_order, edges);
    return m;
}

StarDecomposition star_decomposition_rm_cycle(int n, int m) {
    if (n < 4) throw invalid_parameter("the star decomposition needs n >= 4, got " + std::to_string(n));
    if (m < 1) throw invalid_parameter("r_product requires m >= 1, got " + std::to_string(m));
    StarDecomposition out;
    out.rm = r_product(make_cycle(n), m);
    const RmGraph& r = out.rm;
    TreeDecomposition& d = out.decomposition;
    d.bags.resize(m + 1, VertexSet(r.order()));
    for (int s = 1; s <= m; ++s) d.tree_edges.emplace_back(0, s);
    // center: [[m], {v_2..v_n}]  (bases 1..n-1 in 0-based vertex ids)
    for (int i = 1; i <= m; ++i)
        for (int b = 1; b < n; ++b) d.bags[0].set(r.index_of(i, b));
    // leaf s: the whole row s plus [[m], {v_2, v_n}]
    for (int s = 1; s <= m; ++s) {
        VertexSet& bag = d.bags[s];
        for (int b = -1; b < n; ++b) bag.set(r.index_of(s, b));
        for (int i = 1; i <= m; ++i) {
            bag.set(r.index_of(i, 1));
            bag.set(r.index_of(i, n - 1));
        }
    }
    return out;
}

Enumeration mu_enumeration(const Graph& g, const Enumeration& sigma, int m) {
    if (!is_permutation_of_vertices(g, sigma))
        throw invalid_parameter("enumeration must be a permutation of the vertex set");
    if (m < 1) throw invalid_parameter("mu_enumeration requires m >= 1, got " + std::to_string(m));
    const int n = g.order();
    auto idx = [n](int row, int base) { return (row - 1) * (n + 1) + base + 1; };
    Enumeration mu;
    mu.reserve(m * (n + 1));
    for (int t = 0; t < n; ++t)
        for (int i = 1; i <= m; ++i) mu.push_back(idx(i, sigma[t]));
    for (int i = 1; i <= m; ++i) mu.push_back(idx(i, -1));
    return mu;
}

std::vector<int> mycielski_embedding(int n, int m, int r) {
    if (n < 2 || m < 1) throw invalid_parameter("mycielski_embedding requires n >= 2 and m >= 1");
    if (r < m + n)
        throw invalid_parameter("mycielski_embedding requires r >= m+n = " + std::to_string(m + n) + ", got " +
                                std::to_string(r));
    MycielskiGraph host = mycielski(r);
    const int base_n = MycielskiGraph::order_of(n);
    std::vector<int> map(m * (base_n + 1), -1);
    auto idx = [base_n](int row, int base) { return (row - 1) * (base_n + 1) + base + 1; };
    for (int i = 1; i <= m; ++i) {
        map[idx(i, -1)] = host.stage_apex(n + i);
        for (int b = 0; b < base_n; ++b) map[idx(i, b)] = host.stage_first(n + i) + b;
    }
    return map;
}

}  // namespace pathchrom
