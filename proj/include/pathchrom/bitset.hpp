#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "pathchrom/errors.hpp"

namespace pathchrom {

// Subset of {0..n-1} over a fixed universe, backed by 64-bit words.
// The universe size is part of the value: operations between sets of
// different universes throw invalid_parameter.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe) : n_(check_universe(universe)), w_(word_count(universe), 0) {}

    static VertexSet of(int universe, std::initializer_list<int> members) {
        VertexSet s(universe);
        for (int v : members) s.set(v);
        return s;
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int i = 0; i + 1 < static_cast<int>(s.w_.size()); ++i) s.w_[i] = ~uint64_t{0};
        if (universe > 0) s.w_.back() = low_mask(universe - 64 * (static_cast<int>(s.w_.size()) - 1));
        return s;
    }

    int universe() const { return n_; }

    bool test(int v) const {
        check_vertex(v);
        return (w_[v >> 6] >> (v & 63)) & 1;
    }

    void set(int v) {
        check_vertex(v);
        w_[v >> 6] |= uint64_t{1} << (v & 63);
    }

    void reset(int v) {
        check_vertex(v);
        w_[v >> 6] &= ~(uint64_t{1} << (v & 63));
    }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (uint64_t w : w_)
            if (w) return false;
        return true;
    }
    bool any() const { return !empty(); }

    bool contains_all(const VertexSet& other) const {
        check_same(other);
        for (size_t i = 0; i < w_.size(); ++i)
            if (other.w_[i] & ~w_[i]) return false;
        return true;
    }

    bool intersects(const VertexSet& other) const {
        check_same(other);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & other.w_[i]) return true;
        return false;
    }

    VertexSet& operator|=(const VertexSet& other) {
        check_same(other);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= other.w_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& other) {
        check_same(other);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= other.w_[i];
        return *this;
    }
    VertexSet& subtract(const VertexSet& other) {
        check_same(other);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~other.w_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    VertexSet minus(const VertexSet& other) const {
        VertexSet r = *this;
        r.subtract(other);
        return r;
    }
    VertexSet minus(int v) const {
        VertexSet r = *this;
        r.reset(v);
        return r;
    }

    bool operator==(const VertexSet& other) const = default;

    // Smallest member, or -1 when empty.
    int first() const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return static_cast<int>(i * 64) + std::countr_zero(w_[i]);
        return -1;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    template <class F>
    void for_each(F&& f) const {
        for (size_t i = 0; i < w_.size(); ++i) {
            uint64_t w = w_[i];
            while (w) {
                int v = static_cast<int>(i * 64) + std::countr_zero(w);
                f(v);
                w &= w - 1;
            }
        }
    }

    // Members as a single word; only valid for universes of at most 64.
    uint64_t as_word() const {
        if (n_ > 64) throw invalid_parameter("VertexSet::as_word: universe exceeds 64");
        return w_.empty() ? 0 : w_[0];
    }

    static VertexSet from_word(int universe, uint64_t word) {
        if (universe > 64) throw invalid_parameter("VertexSet::from_word: universe exceeds 64");
        VertexSet s(universe);
        if (!s.w_.empty()) s.w_[0] = word & (universe == 64 ? ~uint64_t{0} : low_mask(universe));
        return s;
    }

    size_t hash() const {
        size_t h = static_cast<size_t>(n_) * 0x9e3779b97f4a7c15ULL;
        for (uint64_t w : w_) h = (h ^ w) * 0x100000001b3ULL;
        return h;
    }

    std::string to_string() const {
        std::string s = "{";
        bool sep = false;
        for_each([&](int v) {
            if (sep) s += ',';
            s += std::to_string(v);
            sep = true;
        });
        return s + "}";
    }

private:
    static int check_universe(int n) {
        if (n < 0) throw invalid_parameter("VertexSet: negative universe");
        return n;
    }
    static size_t word_count(int n) { return static_cast<size_t>((n + 63) / 64); }
    static uint64_t low_mask(int bits) { return bits >= 64 ? ~uint64_t{0} : ((uint64_t{1} << bits) - 1); }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw invalid_vertex("vertex " + std::to_string(v) + " outside universe of size " + std::to_string(n_));
    }
    void check_same(const VertexSet& other) const {
        if (n_ != other.n_) throw invalid_parameter("VertexSet: universe mismatch");
    }

    int n_ = 0;
    std::vector<uint64_t> w_;
};

struct VertexSetHash {
    size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace pathchrom
