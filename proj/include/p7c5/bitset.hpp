#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace p7c5 {

// Fixed-universe bitset used for vertex sets.  All binary operations require
// both operands to live over the same universe size.
class VertexSet {
public:
    VertexSet() : n_(0) {}
    explicit VertexSet(int universe) : n_(universe), w_((universe + 63) / 64, 0) {}

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int i = 0; i < universe; ++i) s.set(i);
        return s;
    }

    int universe_size() const { return n_; }

    bool test(int v) const {
        assert(v >= 0 && v < n_);
        return (w_[v >> 6] >> (v & 63)) & 1u;
    }
    void set(int v) {
        assert(v >= 0 && v < n_);
        w_[v >> 6] |= uint64_t{1} << (v & 63);
    }
    void reset(int v) {
        assert(v >= 0 && v < n_);
        w_[v >> 6] &= ~(uint64_t{1} << (v & 63));
    }
    void clear() { for (auto& w : w_) w = 0; }

    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (auto w : w_) if (w) return false;
        return true;
    }

    VertexSet& operator|=(const VertexSet& o) { op(o, [](uint64_t& a, uint64_t b) { a |= b; }); return *this; }
    VertexSet& operator&=(const VertexSet& o) { op(o, [](uint64_t& a, uint64_t b) { a &= b; }); return *this; }
    VertexSet& operator-=(const VertexSet& o) { op(o, [](uint64_t& a, uint64_t b) { a &= ~b; }); return *this; }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { a |= b; return a; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { a &= b; return a; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { a -= b; return a; }

    bool operator==(const VertexSet& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    bool subset_of(const VertexSet& o) const {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    bool intersects(const VertexSet& o) const {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    // First member >= from, or -1.
    int next(int from = 0) const {
        if (from >= n_) return -1;
        int word = from >> 6;
        uint64_t cur = w_[word] & (~uint64_t{0} << (from & 63));
        while (true) {
            if (cur) return (word << 6) + std::countr_zero(cur);
            if (++word >= (int)w_.size()) return -1;
            cur = w_[word];
        }
    }
    int first() const { return next(0); }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (int v = first(); v >= 0; v = next(v + 1)) fn(v);
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    const std::vector<uint64_t>& words() const { return w_; }

private:
    template <typename Op>
    void op(const VertexSet& o, Op fn) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i) fn(w_[i], o.w_[i]);
    }

    int n_;
    std::vector<uint64_t> w_;
};

} // namespace p7c5
