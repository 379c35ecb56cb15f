#include "pathchrom/graph.hpp"

#include <algorithm>
#include <queue>

namespace pathchrom {

Graph::Graph(int n, std::span<const std::pair<int, int>> edge_list, std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
    if (n < 0) throw invalid_parameter("graph order must be nonnegative");
    if (!labels_.empty() && static_cast<int>(labels_.size()) != n)
        throw invalid_parameter("label table size must match graph order");
    adj_.assign(n_, VertexSet(n_));
    for (auto [u, v] : edge_list) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw invalid_vertex("edge endpoint outside graph of order " + std::to_string(n_));
        if (u == v) throw invalid_parameter("self-loop at vertex " + std::to_string(u));
        if (!adj_[u].test(v)) {
            adj_[u].set(v);
            adj_[v].set(u);
            ++m_;
        }
    }
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        adj_[u].for_each([&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

Graph make_cycle(int n) {
    if (n < 3) throw invalid_parameter("cycle requires n >= 3, got " + std::to_string(n));
    std::vector<std::pair<int, int>> e;
    e.reserve(n);
    for (int j = 0; j < n; ++j) e.emplace_back(j, (j + 1) % n);
    return Graph(n, e);
}

Graph make_complete(int n) {
    if (n < 1) throw invalid_parameter("complete graph requires n >= 1, got " + std::to_string(n));
    std::vector<std::pair<int, int>> e;
    e.reserve(n * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, e);
}

Graph make_edgeless(int n) { return Graph(n, std::span<const std::pair<int, int>>{}); }

VertexSet closed_neighborhood(const Graph& g, const VertexSet& u) {
    if (u.universe() != g.order()) throw invalid_vertex("vertex set universe does not match graph order");
    VertexSet out = u;
    u.for_each([&](int v) { out |= g.neighbors(v); });
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.order()) throw invalid_vertex("vertex set universe does not match graph order");
    std::vector<int> to_parent = s.to_vector();
    std::vector<int> to_child(g.order(), -1);
    for (int i = 0; i < static_cast<int>(to_parent.size()); ++i) to_child[to_parent[i]] = i;
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < static_cast<int>(to_parent.size()); ++i) {
        (g.neighbors(to_parent[i]) & s).for_each([&](int w) {
            if (to_parent[i] < w) e.emplace_back(i, to_child[w]);
        });
    }
    return {Graph(static_cast<int>(to_parent.size()), e), std::move(to_parent)};
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    VertexSet seen(g.order());
    std::vector<int> stack = {0};
    seen.set(0);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        g.neighbors(v).for_each([&](int w) {
            if (!seen.test(w)) {
                seen.set(w);
                stack.push_back(w);
            }
        });
    }
    return seen.count() == g.order();
}

bool is_triangle_free(const Graph& g) {
    for (int u = 0; u < g.order(); ++u) {
        bool hit = false;
        g.neighbors(u).for_each([&](int v) {
            if (v > u && g.neighbors(u).intersects(g.neighbors(v))) hit = true;
        });
        if (hit) return false;
    }
    return true;
}

bool check_induced_embedding(const Graph& h, const Graph& g, std::span<const int> map) {
    if (static_cast<int>(map.size()) != h.order())
        throw invalid_parameter("embedding map must be total on the pattern graph");
    VertexSet image(g.order());
    for (int x : map) {
        if (x < 0 || x >= g.order()) throw invalid_parameter("embedding map hits vertex outside the host graph");
        if (image.test(x)) return false;  // not injective
        image.set(x);
    }
    for (int u = 0; u < h.order(); ++u)
        for (int v = u + 1; v < h.order(); ++v)
            if (h.has_edge(u, v) != g.has_edge(map[u], map[v])) return false;
    return true;
}

namespace {

// Dinic on the vertex-split digraph: vertex v becomes v_in = 2v, v_out = 2v+1
// with a capacity-1 arc; each graph edge uv gives arcs u_out->v_in and
// v_out->u_in of effectively infinite capacity.
struct SplitFlow {
    struct Arc {
        int to, cap;
    };
    std::vector<Arc> arcs;
    std::vector<std::vector<int>> out;
    std::vector<int> level, iter;
    int nodes;

    explicit SplitFlow(const Graph& g) : nodes(2 * g.order()) {
        out.resize(nodes);
        const int inf = g.order() + 1;
        for (int v = 0; v < g.order(); ++v) add(2 * v, 2 * v + 1, 1);
        for (auto [u, v] : g.edges()) {
            add(2 * u + 1, 2 * v, inf);
            add(2 * v + 1, 2 * u, inf);
        }
    }

    void add(int a, int b, int cap) {
        out[a].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({b, cap});
        out[b].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({a, 0});
    }

    bool bfs(int s, int t) {
        level.assign(nodes, -1);
        std::queue<int> q;
        level[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int id : out[v])
                if (arcs[id].cap > 0 && level[arcs[id].to] < 0) {
                    level[arcs[id].to] = level[v] + 1;
                    q.push(arcs[id].to);
                }
        }
        return level[t] >= 0;
    }

    int dfs(int v, int t, int f) {
        if (v == t) return f;
        for (int& i = iter[v]; i < static_cast<int>(out[v].size()); ++i) {
            int id = out[v][i];
            if (arcs[id].cap > 0 && level[arcs[id].to] == level[v] + 1) {
                int d = dfs(arcs[id].to, t, std::min(f, arcs[id].cap));
                if (d > 0) {
                    arcs[id].cap -= d;
                    arcs[id ^ 1].cap += d;
                    return d;
                }
            }
        }
        return 0;
    }

    int max_flow(int s, int t, int limit) {
        int flow = 0;
        while (flow < limit && bfs(s, t)) {
            iter.assign(nodes, 0);
            while (flow < limit) {
                int f = dfs(s, t, limit - flow);
                if (f == 0) break;
                flow += f;
            }
        }
        return flow;
    }

    // Nodes reachable from s in the residual network.
    VertexSet residual_side(int s) {
        VertexSet seen(nodes);
        std::vector<int> stack = {s};
        seen.set(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int id : out[v])
                if (arcs[id].cap > 0 && !seen.test(arcs[id].to)) {
                    seen.set(arcs[id].to);
                    stack.push_back(arcs[id].to);
                }
        }
        return seen;
    }

    // Decompose the unit flow into internally-disjoint vertex paths s..t.
    // Forward arcs carry flow iff their reverse gained capacity; a DFS with
    // backtracking is immune to flow cycles the augmentation may have left.
    std::vector<std::vector<int>> unit_paths(int s, int t, int value) {
        std::vector<char> used(arcs.size(), 0);
        std::vector<std::vector<int>> paths;
        for (int rep = 0; rep < value; ++rep) {
            std::vector<int> trail;  // arc ids
            std::vector<char> visited(nodes, 0);
            if (!path_dfs(2 * s + 1, 2 * t, used, visited, trail)) break;
            std::vector<int> path = {s};
            for (int id : trail) {
                used[id] = 1;
                int node = arcs[id].to;
                if (node % 2 == 0 && node != 2 * t) path.push_back(node / 2);
            }
            path.push_back(t);
            paths.push_back(std::move(path));
        }
        return paths;
    }

    bool path_dfs(int at, int goal, const std::vector<char>& used, std::vector<char>& visited,
                  std::vector<int>& trail) {
        if (at == goal) return true;
        visited[at] = 1;
        for (int id : out[at]) {
            if (id % 2 != 0 || used[id] || arcs[id ^ 1].cap <= 0) continue;  // not a flowing forward arc
            if (visited[arcs[id].to]) continue;
            trail.push_back(id);
            if (path_dfs(arcs[id].to, goal, used, visited, trail)) return true;
            trail.pop_back();
        }
        return false;
    }
};

}  // namespace

ConnectivityCertificate vertex_connectivity_certificate(const Graph& g) {
    const int n = g.order();
    if (n == 0) throw invalid_parameter("vertex connectivity of the empty graph is undefined");
    ConnectivityCertificate best;
    best.value = n - 1;  // complete-graph convention
    for (int s = 0; s < n; ++s) {
        for (int t = s + 1; t < n; ++t) {
            if (g.has_edge(s, t)) continue;
            SplitFlow net(g);
            int f = net.max_flow(2 * s + 1, 2 * t, best.value + 1);
            if (f < best.value || (f == best.value && best.source < 0)) {
                best.value = f;
                best.source = s;
                best.target = t;
                best.disjoint_paths = net.unit_paths(s, t, f);
                best.min_cut.clear();
                VertexSet side = net.residual_side(2 * s + 1);
                for (int v = 0; v < n; ++v)
                    if (side.test(2 * v) && !side.test(2 * v + 1)) best.min_cut.push_back(v);
            }
        }
    }
    return best;
}

int vertex_connectivity(const Graph& g) { return vertex_connectivity_certificate(g).value; }

}  // namespace pathchrom
