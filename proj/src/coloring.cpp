#include "pathchrom/coloring.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace pathchrom {

bool is_proper(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.color.size()) != g.order()) return false;
    for (int v = 0; v < g.order(); ++v)
        if (c.color[v] < 0 || c.color[v] >= c.palette) return false;
    for (auto [u, v] : g.edges())
        if (c.color[u] == c.color[v]) return false;
    return true;
}

namespace {

constexpr uint64_t low_bits(int b) { return b >= 64 ? ~uint64_t{0} : ((uint64_t{1} << b) - 1); }

// Greedy maximal clique: repeatedly take the candidate with most candidate
// neighbors. Used as a decision seed and as a chromatic lower bound.
int greedy_clique_word(const uint64_t* rows, int b, int* out_members) {
    uint64_t cand = low_bits(b);
    int size = 0;
    while (cand) {
        int best = -1, best_deg = -1;
        uint64_t it = cand;
        while (it) {
            int v = std::countr_zero(it);
            it &= it - 1;
            int d = std::popcount(rows[v] & cand);
            if (d > best_deg) {
                best_deg = d;
                best = v;
            }
        }
        out_members[size++] = best;
        cand &= rows[best];
    }
    return size;
}

// Proper 2-coloring per component, or failure on an odd cycle.
bool bipartite_word(const uint64_t* rows, int b, int* colors) {
    std::fill(colors, colors + b, -1);
    std::vector<int> queue;
    for (int s = 0; s < b; ++s) {
        if (colors[s] >= 0) continue;
        colors[s] = 0;
        queue.assign(1, s);
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            uint64_t nb = rows[v];
            while (nb) {
                int w = std::countr_zero(nb);
                nb &= nb - 1;
                if (colors[w] < 0) {
                    colors[w] = 1 - colors[v];
                    queue.push_back(w);
                } else if (colors[w] == colors[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

struct WordDecider {
    const uint64_t* rows;
    int b;
    int k;
    int colors[64];
    uint64_t allowed[64];
    uint64_t uncolored = 0;
    int max_used = 0;

    bool assign(int v, int c) {
        colors[v] = c;
        uncolored &= ~(uint64_t{1} << v);
        if (c + 1 > max_used) max_used = c + 1;
        uint64_t nb = rows[v] & uncolored;
        while (nb) {
            int w = std::countr_zero(nb);
            nb &= nb - 1;
            allowed[w] &= ~(uint64_t{1} << c);
            if (allowed[w] == 0) return false;
        }
        return true;
    }

    // DSATUR branch and bound for fixed k: most-constrained vertex first,
    // candidate colors capped at max_used+1 to break palette symmetry.
    bool search() {
        if (uncolored == 0) return true;
        int v = -1, v_opts = 65, v_deg = -1;
        uint64_t it = uncolored;
        while (it) {
            int u = std::countr_zero(it);
            it &= it - 1;
            int opts = std::popcount(allowed[u]);
            int deg = std::popcount(rows[u]);
            if (opts < v_opts || (opts == v_opts && deg > v_deg)) {
                v = u;
                v_opts = opts;
                v_deg = deg;
            }
        }
        uint64_t cand = allowed[v] & low_bits(std::min(k, max_used + 1));
        while (cand) {
            int c = std::countr_zero(cand);
            cand &= cand - 1;
            uint64_t saved_allowed[64];
            uint64_t saved_uncolored = uncolored;
            int saved_max = max_used;
            uint64_t nb = rows[v] & uncolored;
            uint64_t touched = nb;
            while (nb) {
                int w = std::countr_zero(nb);
                nb &= nb - 1;
                saved_allowed[w] = allowed[w];
            }
            bool ok = assign(v, c) && search();
            if (ok) return true;
            colors[v] = -1;
            uncolored = saved_uncolored;
            max_used = saved_max;
            while (touched) {
                int w = std::countr_zero(touched);
                touched &= touched - 1;
                allowed[w] = saved_allowed[w];
            }
        }
        return false;
    }
};

// k-colorability of the graph given by word-adjacency rows, b <= 64.
// Writes a proper coloring into out_colors on success when non-null.
bool decide_word(const uint64_t* rows, int b, int k, int* out_colors) {
    if (b == 0) return true;
    if (k <= 0) return false;
    int scratch[64];
    int* colors = out_colors ? out_colors : scratch;
    if (k == 1) {
        for (int v = 0; v < b; ++v)
            if (rows[v]) return false;
        std::fill(colors, colors + b, 0);
        return true;
    }
    if (b <= k) {
        std::iota(colors, colors + b, 0);
        return true;
    }
    if (k == 2) return bipartite_word(rows, b, colors);

    int clique[64];
    int cs = greedy_clique_word(rows, b, clique);
    if (cs > k) return false;

    WordDecider d;
    d.rows = rows;
    d.b = b;
    d.k = std::min(k, 64);
    d.uncolored = low_bits(b);
    std::fill(d.colors, d.colors + b, -1);
    std::fill(d.allowed, d.allowed + b, low_bits(d.k));
    for (int s = 0; s < cs; ++s)
        if (!d.assign(clique[s], s)) return false;
    if (!d.search()) return false;
    std::copy(d.colors, d.colors + b, colors);
    return true;
}

int greedy_clique_sets(const Graph& g, std::vector<int>& out) {
    VertexSet cand = VertexSet::full(g.order());
    out.clear();
    while (cand.any()) {
        int best = -1, best_deg = -1;
        cand.for_each([&](int v) {
            int d = (g.neighbors(v) & cand).count();
            if (d > best_deg) {
                best_deg = d;
                best = v;
            }
        });
        out.push_back(best);
        cand &= g.neighbors(best);
    }
    return static_cast<int>(out.size());
}

// Plain DSATUR backtracking over set adjacency; only reached for graphs
// with more than 64 vertices.
struct SetDecider {
    const Graph& g;
    int k;
    std::vector<int> colors;
    int uncolored_count;
    int max_used = 0;

    explicit SetDecider(const Graph& g_, int k_)
        : g(g_), k(k_), colors(g_.order(), -1), uncolored_count(g_.order()) {}

    bool search() {
        if (uncolored_count == 0) return true;
        int v = -1, v_sat = -1, v_deg = -1;
        std::vector<char> seen(k, 0);
        VertexSet banned_best(0);
        for (int u = 0; u < g.order(); ++u) {
            if (colors[u] >= 0) continue;
            std::fill(seen.begin(), seen.end(), 0);
            int sat = 0;
            g.neighbors(u).for_each([&](int w) {
                int c = colors[w];
                if (c >= 0 && !seen[c]) {
                    seen[c] = 1;
                    ++sat;
                }
            });
            if (sat > v_sat || (sat == v_sat && g.degree(u) > v_deg)) {
                v = u;
                v_sat = sat;
                v_deg = g.degree(u);
            }
        }
        std::vector<char> banned(k, 0);
        g.neighbors(v).for_each([&](int w) {
            if (colors[w] >= 0) banned[colors[w]] = 1;
        });
        int limit = std::min(k, max_used + 1);
        for (int c = 0; c < limit; ++c) {
            if (banned[c]) continue;
            colors[v] = c;
            --uncolored_count;
            int saved_max = max_used;
            max_used = std::max(max_used, c + 1);
            if (search()) return true;
            colors[v] = -1;
            ++uncolored_count;
            max_used = saved_max;
        }
        return false;
    }
};

bool decide_sets(const Graph& g, int k, std::vector<int>* out_colors) {
    const int n = g.order();
    if (n == 0) return true;
    if (k <= 0) return false;
    std::vector<int> local(n, -1);
    std::vector<int>& colors = out_colors ? *out_colors : local;
    colors.assign(n, -1);
    if (k == 1) {
        if (g.edge_count() > 0) return false;
        std::fill(colors.begin(), colors.end(), 0);
        return true;
    }
    if (n <= k) {
        std::iota(colors.begin(), colors.end(), 0);
        return true;
    }
    if (k == 2) {
        // bipartite sweep
        std::vector<int> queue;
        for (int s = 0; s < n; ++s) {
            if (colors[s] >= 0) continue;
            colors[s] = 0;
            queue.assign(1, s);
            while (!queue.empty()) {
                int v = queue.back();
                queue.pop_back();
                bool odd = false;
                g.neighbors(v).for_each([&](int w) {
                    if (colors[w] < 0) {
                        colors[w] = 1 - colors[v];
                        queue.push_back(w);
                    } else if (colors[w] == colors[v]) {
                        odd = true;
                    }
                });
                if (odd) return false;
            }
        }
        return true;
    }
    std::vector<int> clique;
    if (greedy_clique_sets(g, clique) > k) return false;
    SetDecider d(g, k);
    for (int s = 0; s < static_cast<int>(clique.size()); ++s) {
        d.colors[clique[s]] = s;
        --d.uncolored_count;
    }
    d.max_used = static_cast<int>(clique.size());
    if (!d.search()) return false;
    colors = d.colors;
    return true;
}

void build_word_rows(const Graph& g, std::vector<uint64_t>& rows) {
    rows.assign(g.order(), 0);
    for (int v = 0; v < g.order(); ++v) rows[v] = g.neighbors(v).as_word();
}

}  // namespace

std::optional<Coloring> chromatic_decision(const Graph& g, int k) {
    if (k < 0) return std::nullopt;
    const int n = g.order();
    if (n == 0) return Coloring{{}, k};
    if (k == 0) return std::nullopt;
    std::vector<int> colors(n, -1);
    bool ok;
    if (n <= 64) {
        std::vector<uint64_t> rows;
        build_word_rows(g, rows);
        ok = decide_word(rows.data(), n, k, colors.data());
    } else {
        ok = decide_sets(g, k, &colors);
    }
    if (!ok) return std::nullopt;
    return Coloring{std::move(colors), k};
}

int chromatic_number(const Graph& g) {
    const int n = g.order();
    if (n == 0) return 0;
    if (g.edge_count() == 0) return 1;
    std::vector<int> clique;
    int lb = greedy_clique_sets(g, clique);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    int ub = greedy_bound(g, order);
    for (int k = lb; k < ub; ++k)
        if (chromatic_decision(g, k)) return k;
    return ub;
}

Coloring optimal_coloring(const Graph& g) {
    int chi = chromatic_number(g);
    auto c = chromatic_decision(g, chi);
    assert(c.has_value());
    c->palette = chi;
    return *c;
}

int greedy_bound(const Graph& g, std::span<const int> order) {
    const int n = g.order();
    if (static_cast<int>(order.size()) != n)
        throw invalid_parameter("greedy order must be a permutation of the vertex set");
    std::vector<char> seen(n, 0);
    for (int v : order) {
        if (v < 0 || v >= n || seen[v]) throw invalid_parameter("greedy order must be a permutation of the vertex set");
        seen[v] = 1;
    }
    if (n == 0) return 0;
    std::vector<int> color(n, -1);
    int used = 0;
    std::vector<char> banned(n + 1, 0);
    for (int v : order) {
        std::fill(banned.begin(), banned.begin() + used + 1, 0);
        g.neighbors(v).for_each([&](int w) {
            if (color[w] >= 0) banned[color[w]] = 1;
        });
        int c = 0;
        while (banned[c]) ++c;
        color[v] = c;
        used = std::max(used, c + 1);
    }
    return used;
}

// ---- BagChromaticCache ----

namespace {
inline uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}
}  // namespace

BagChromaticCache::BagChromaticCache(const Graph& g) : g_(&g) {
    if (g.order() <= 64) {
        build_word_rows(g, adj_word_);
        word_table_.assign(size_t{1} << 12, WordEntry{});
    }
}

BagChromaticCache::~BagChromaticCache() = default;

void BagChromaticCache::word_grow() {
    std::vector<WordEntry> old = std::move(word_table_);
    word_table_.assign(old.size() * 2, WordEntry{});
    const size_t mask = word_table_.size() - 1;
    for (const WordEntry& e : old) {
        if (!e.key) continue;
        size_t i = mix64(e.key) & mask;
        while (word_table_[i].key) i = (i + 1) & mask;
        word_table_[i] = e;
    }
}

BagChromaticCache::Bounds* BagChromaticCache::lookup_word(uint64_t key) {
    if (word_size_ * 10 >= word_table_.size() * 7) word_grow();
    const size_t mask = word_table_.size() - 1;
    size_t i = mix64(key) & mask;
    while (word_table_[i].key) {
        if (word_table_[i].key == key) return &word_table_[i].bounds;
        i = (i + 1) & mask;
    }
    word_table_[i].key = key;
    int c = std::popcount(key);
    word_table_[i].bounds.lb = 1;
    word_table_[i].bounds.ub = static_cast<uint8_t>(std::min(c, 255));
    ++word_size_;
    return &word_table_[i].bounds;
}

bool BagChromaticCache::decide(uint64_t bag, int k, Bounds& b) {
    // Compact the bag to indices 0..c-1 and decide on stack-local rows.
    int pos[64];
    uint64_t rows[64];
    int c = 0;
    uint64_t it = bag;
    while (it) {
        int v = std::countr_zero(it);
        it &= it - 1;
        pos[v] = c++;
    }
    int i = 0;
    it = bag;
    while (it) {
        int v = std::countr_zero(it);
        it &= it - 1;
        uint64_t nb = adj_word_[v] & bag;
        uint64_t row = 0;
        while (nb) {
            int w = std::countr_zero(nb);
            nb &= nb - 1;
            row |= uint64_t{1} << pos[w];
        }
        rows[i++] = row;
    }
    bool ok = decide_word(rows, c, k, nullptr);
    if (ok)
        b.ub = static_cast<uint8_t>(std::min<int>(b.ub, k));
    else
        b.lb = static_cast<uint8_t>(std::max<int>(b.lb, k + 1));
    return ok;
}

bool BagChromaticCache::chromatic_leq(uint64_t bag, int k) {
    ++queries_;
    if (bag == 0) return k >= 0;
    if (k <= 0) return false;
    Bounds* b = lookup_word(bag);
    if (b->ub <= k) {
        ++hits_;
        return true;
    }
    if (b->lb > k) {
        ++hits_;
        return false;
    }
    return decide(bag, std::min(k, 64), *b);
}

int BagChromaticCache::chromatic_of(uint64_t bag) {
    if (bag == 0) return 0;
    Bounds* b = lookup_word(bag);
    int k = b->lb;
    while (true) {
        if (chromatic_leq(bag, k)) return k;
        ++k;
    }
}

bool BagChromaticCache::chromatic_leq(const VertexSet& bag, int k) {
    if (bag.universe() != g_->order()) throw invalid_vertex("bag universe does not match graph order");
    if (g_->order() <= 64) return chromatic_leq(bag.as_word(), k);
    ++queries_;
    if (bag.empty()) return k >= 0;
    if (k <= 0) return false;
    auto [it, inserted] = set_table_.try_emplace(bag);
    Bounds& b = it->second;
    if (inserted) {
        b.lb = 1;
        b.ub = static_cast<uint8_t>(std::min(bag.count(), 255));
    }
    if (b.ub <= k) {
        ++hits_;
        return true;
    }
    if (b.lb > k) {
        ++hits_;
        return false;
    }
    return decide_general(bag, k, b);
}

bool BagChromaticCache::decide_general(const VertexSet& bag, int k, Bounds& b) {
    InducedSubgraph sub = induced_subgraph(*g_, bag);
    bool ok = chromatic_decision(sub.graph, k).has_value();
    if (ok)
        b.ub = static_cast<uint8_t>(std::min<int>(b.ub, k));
    else
        b.lb = static_cast<uint8_t>(std::max<int>(b.lb, k + 1));
    return ok;
}

int BagChromaticCache::chromatic_of(const VertexSet& bag) {
    if (g_->order() <= 64) return chromatic_of(bag.as_word());
    if (bag.empty()) return 0;
    int k = 1;
    while (true) {
        if (chromatic_leq(bag, k)) return k;
        ++k;
    }
}

}  // namespace pathchrom
