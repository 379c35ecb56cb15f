#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "pathchrom/graph.hpp"

namespace pathchrom {

// Proper coloring with colors 0..palette-1.
struct Coloring {
    std::vector<int> color;
    int palette = 0;
};

bool is_proper(const Graph& g, const Coloring& c);

// A proper k-coloring if chi(g) <= k, empty otherwise. k=0 succeeds only on
// the empty graph; k<=2 is decided by a bipartiteness sweep, larger k by
// DSATUR backtracking seeded with a greedy maximal clique.
std::optional<Coloring> chromatic_decision(const Graph& g, int k);

// Exact chromatic number; 0 for the empty graph.
int chromatic_number(const Graph& g);

// A coloring with exactly chi(g) colors.
Coloring optimal_coloring(const Graph& g);

// Size of the first-fit coloring along `order` (a permutation of V).
int greedy_bound(const Graph& g, std::span<const int> order);

// Chromatic numbers of induced subgraphs ("bags"), memoized by the bag's
// vertex-set bitmask. Both the decomposition evaluator and the subset DP
// query the same cache; bounds are refined as decisions accumulate.
class BagChromaticCache {
public:
    explicit BagChromaticCache(const Graph& g);
    ~BagChromaticCache();
    BagChromaticCache(const BagChromaticCache&) = delete;
    BagChromaticCache& operator=(const BagChromaticCache&) = delete;

    // chi(<bag>) <= k?
    bool chromatic_leq(const VertexSet& bag, int k);
    // Fast path for graphs of order <= 64: the bag as a bitmask word.
    bool chromatic_leq(uint64_t bag_word, int k);

    int chromatic_of(const VertexSet& bag);
    int chromatic_of(uint64_t bag_word);

    const Graph& graph() const { return *g_; }
    uint64_t queries() const { return queries_; }
    uint64_t hits() const { return hits_; }

private:
    struct Bounds {
        uint8_t lb = 0;  // chi >= lb
        uint8_t ub = 255;  // chi <= ub
    };
    Bounds* lookup_word(uint64_t bag_word);
    bool decide(uint64_t bag_word, int k, Bounds& b);
    bool decide_general(const VertexSet& bag, int k, Bounds& b);

    const Graph* g_;
    std::vector<uint64_t> adj_word_;  // only for order <= 64

    // Open-addressing table for word keys (order <= 64). Key 0 (empty bag)
    // is the vacant sentinel; the empty bag never reaches the table.
    struct WordEntry {
        uint64_t key = 0;
        Bounds bounds;
    };
    std::vector<WordEntry> word_table_;
    size_t word_size_ = 0;
    void word_grow();

    std::unordered_map<VertexSet, Bounds, VertexSetHash> set_table_;  // order > 64

    uint64_t queries_ = 0;
    uint64_t hits_ = 0;
};

}  // namespace pathchrom
