#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

namespace idb {

#ifndef IDB_MAX_VERTICES
#define IDB_MAX_VERTICES 64
#endif

// Hard width cap for graphs; one adjacency row fits in kWordsPerSet machine
// words, so graphs stay cheap to copy inside the search loops.
inline constexpr int kMaxVertices = IDB_MAX_VERTICES;
inline constexpr int kWordsPerSet = (kMaxVertices + 63) / 64;

static_assert(kMaxVertices >= 1 && kMaxVertices <= 4096);

// Fixed-width set of vertex indices (one bit per vertex).
class VertexSet {
public:
    constexpr VertexSet() = default;

    static VertexSet all_below(int n) {
        VertexSet s;
        for (int w = 0; w < kWordsPerSet; ++w) {
            int lo = w * 64;
            if (n >= lo + 64)
                s.words_[w] = ~std::uint64_t{0};
            else if (n > lo)
                s.words_[w] = (std::uint64_t{1} << (n - lo)) - 1;
        }
        return s;
    }

    static VertexSet single(int v) {
        VertexSet s;
        s.set(v);
        return s;
    }

    bool test(int v) const { return (words_[v >> 6] >> (v & 63)) & 1; }
    void set(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void reset(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        for (int i = 0; i < kWordsPerSet; ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    // true iff o is a subset of *this
    bool contains(const VertexSet& o) const {
        for (int i = 0; i < kWordsPerSet; ++i)
            if (o.words_[i] & ~words_[i]) return false;
        return true;
    }

    // Lowest member, or -1 when empty.
    int lowest() const {
        for (int i = 0; i < kWordsPerSet; ++i)
            if (words_[i]) return i * 64 + std::countr_zero(words_[i]);
        return -1;
    }

    // First member >= from, or -1.
    int next(int from) const {
        if (from >= kMaxVertices) return -1;
        int w = from >> 6;
        std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (cur) return w * 64 + std::countr_zero(cur);
            if (++w >= kWordsPerSet) return -1;
            cur = words_[w];
        }
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (int i = 0; i < kWordsPerSet; ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (int i = 0; i < kWordsPerSet; ++i) words_[i] &= o.words_[i];
        return *this;
    }
    // set difference
    VertexSet& operator-=(const VertexSet& o) {
        for (int i = 0; i < kWordsPerSet; ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool operator==(const VertexSet&) const = default;

    template <typename F>
    void for_each(F&& f) const {
        for (int i = 0; i < kWordsPerSet; ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                f(i * 64 + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

private:
    std::array<std::uint64_t, kWordsPerSet> words_{};
};

} // namespace idb
