#include "pathchrom/dp.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

namespace pathchrom {

VertexSet bag_of_prefix(const Graph& g, const VertexSet& s, int v) {
    if (s.universe() != g.order()) throw invalid_vertex("prefix universe does not match graph order");
    if (!s.test(v)) throw invalid_parameter("bag_of_prefix: vertex is not in the prefix");
    return closed_neighborhood(g, s).minus(s.minus(v));
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Bitset over all 2^n subset masks.
class SubsetFrontier {
public:
    explicit SubsetFrontier(int n) : words_(n >= 6 ? (size_t{1} << (n - 6)) : 1, 0) {}
    void clear() { std::fill(words_.begin(), words_.end(), 0); }
    bool test(uint64_t mask) const { return (words_[mask >> 6] >> (mask & 63)) & 1; }
    void set(uint64_t mask) { words_[mask >> 6] |= uint64_t{1} << (mask & 63); }

private:
    std::vector<uint64_t> words_;
};

constexpr int kHardSizeLimit = 30;

struct DpEngine {
    const Graph& g;
    int n;
    uint64_t full;
    std::vector<uint64_t> adj;
    BagChromaticCache cache;
    SubsetFrontier feasible;
    uint64_t states = 0;

    static int checked_order(const Graph& graph, const DpOptions& opts) {
        const int n = graph.order();
        if (n > opts.size_limit && !opts.size_override)
            throw size_limit_error("subset DP refuses " + std::to_string(n) + " vertices (limit " +
                                   std::to_string(opts.size_limit) + "; pass the size override to force)");
        if (n > kHardSizeLimit)
            throw size_limit_error("subset DP frontier cannot hold " + std::to_string(n) + " vertices (hard limit " +
                                   std::to_string(kHardSizeLimit) + ")");
        return n;
    }

    DpEngine(const Graph& graph, const DpOptions& opts)
        : g(graph), n(checked_order(graph, opts)), full((uint64_t{1} << n) - 1), cache(graph), feasible(n) {
        adj.resize(n);
        for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v).as_word();
    }

    uint64_t closed_of(uint64_t s) const {
        uint64_t closed = s;
        uint64_t it = s;
        while (it) {
            int v = std::countr_zero(it);
            it &= it - 1;
            closed |= adj[v];
        }
        return closed;
    }

    // Forward propagation over popcount layers. Admit decides whether a step
    // entering v (bag computed from the extended prefix) is allowed.
    template <class Admit>
    bool run(Admit&& admit) {
        feasible.clear();
        feasible.set(0);
        if (n == 0) return true;
        for (int layer = 0; layer < n; ++layer) {
            bool any_next = false;
            uint64_t mask = layer == 0 ? 0 : (uint64_t{1} << layer) - 1;
            while (true) {
                if (feasible.test(mask)) {
                    ++states;
                    uint64_t closed = closed_of(mask);
                    uint64_t rest = full & ~mask;
                    while (rest) {
                        int v = std::countr_zero(rest);
                        uint64_t vbit = rest & (~rest + 1);
                        rest &= rest - 1;
                        uint64_t next = mask | vbit;
                        if (feasible.test(next)) {
                            any_next = true;
                            continue;
                        }
                        uint64_t bag = (closed | adj[v] | vbit) & ~mask;
                        if (admit(bag, v, mask)) {
                            feasible.set(next);
                            any_next = true;
                        }
                    }
                }
                if (mask == 0) break;
                // Gosper's hack: next mask with the same popcount.
                uint64_t c = mask & (~mask + 1);
                uint64_t r = mask + c;
                mask = (((r ^ mask) >> 2) / c) | r;
                if (mask > full) break;
            }
            if (!any_next) break;  // dead frontier, later layers unreachable
        }
        return feasible.test(full);
    }

    // Predecessor walk through the filled frontier; deterministic by taking
    // the smallest admissible entering vertex at each step.
    template <class Admit>
    Enumeration extract_witness(Admit&& admit) {
        Enumeration order(n);
        uint64_t s = full;
        for (int i = n - 1; i >= 0; --i) {
            uint64_t closed = closed_of(s);
            int chosen = -1;
            uint64_t it = s;
            while (it) {
                int v = std::countr_zero(it);
                uint64_t vbit = it & (~it + 1);
                it &= it - 1;
                uint64_t prev = s & ~vbit;
                if (!feasible.test(prev)) continue;
                uint64_t bag = closed & ~prev;
                if (admit(bag, v, prev)) {
                    chosen = v;
                    break;
                }
            }
            if (chosen < 0) throw std::logic_error("witness extraction failed on a feasible frontier");
            order[i] = chosen;
            s &= ~(uint64_t{1} << chosen);
        }
        return order;
    }
};

}  // namespace

DpReport path_chromatic_at_most(const Graph& g, int k, const DpOptions& opts) {
    auto t0 = Clock::now();
    DpReport report;
    report.k = k;
    if (g.order() == 0) {
        report.feasible = k >= 0;
        if (report.feasible && opts.want_witness) report.witness = Enumeration{};
        report.elapsed_seconds = seconds_since(t0);
        return report;
    }
    if (k < 1) {
        report.feasible = false;
        report.elapsed_seconds = seconds_since(t0);
        return report;
    }
    DpEngine engine(g, opts);
    auto admit = [&](uint64_t bag, int, uint64_t) { return engine.cache.chromatic_leq(bag, k); };
    report.feasible = engine.run(admit);
    if (report.feasible && opts.want_witness) report.witness = engine.extract_witness(admit);
    report.states_explored = engine.states;
    report.bag_cache_hits = engine.cache.hits();
    report.elapsed_seconds = seconds_since(t0);
    return report;
}

DpReport path_chromatic_number(const Graph& g, const DpOptions& opts) {
    auto t0 = Clock::now();
    DpReport report;
    if (g.order() == 0) {
        report.k = 0;
        report.feasible = true;
        report.witness = Enumeration{};
        report.elapsed_seconds = seconds_since(t0);
        return report;
    }
    DpEngine engine(g, opts);
    for (int k = 1;; ++k) {
        auto admit = [&](uint64_t bag, int, uint64_t) { return engine.cache.chromatic_leq(bag, k); };
        if (engine.run(admit)) {
            report.k = k;
            report.feasible = true;
            if (opts.want_witness) report.witness = engine.extract_witness(admit);
            break;
        }
    }
    report.states_explored = engine.states;
    report.bag_cache_hits = engine.cache.hits();
    report.elapsed_seconds = seconds_since(t0);
    return report;
}

std::optional<Enumeration> exists_special_enumeration(const Graph& g, const DpOptions& opts) {
    if (g.order() == 0) return Enumeration{};  // vacuously special
    DpEngine engine(g, opts);
    int chi_p = 0;
    for (int k = 1;; ++k) {
        auto admit = [&](uint64_t bag, int, uint64_t) { return engine.cache.chromatic_leq(bag, k); };
        if (engine.run(admit)) {
            chi_p = k;
            break;
        }
    }
    const int k = chi_p;
    auto admit_special = [&](uint64_t bag, int v, uint64_t earlier) {
        if (engine.cache.chromatic_leq(bag, k - 1)) return true;
        return engine.cache.chromatic_leq(bag, k) && (engine.adj[v] & earlier) == 0;
    };
    if (!engine.run(admit_special)) return std::nullopt;
    return engine.extract_witness(admit_special);
}

int brute_force_path_chromatic(const Graph& g) {
    const int n = g.order();
    if (n > 9)
        throw size_limit_error("brute force over n! enumerations refuses " + std::to_string(n) + " vertices (limit 9)");
    if (n == 0) return 0;
    BagChromaticCache cache(g);
    Enumeration sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    int best = n;
    do {
        PathDecomposition d = path_decomposition_from_enumeration(g, sigma);
        int worst = 0;
        for (const VertexSet& bag : d.bags) {
            worst = std::max(worst, cache.chromatic_of(bag));
            if (worst >= best) break;
        }
        best = std::min(best, worst);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return best;
}

}  // namespace pathchrom
