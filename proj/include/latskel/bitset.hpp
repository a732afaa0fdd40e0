#ifndef LATSKEL_BITSET_HPP
#define LATSKEL_BITSET_HPP

#include <cstdint>
#include <bit>
#include <cstddef>
#include <functional>
#include <vector>

namespace latskel {

/// Fixed-universe bitset over elements 0..n-1. Cheap value type; the
/// universe size is pinned at construction and must agree between
/// operands of the binary operations.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int universe() const { return n_; }

    void set(int i) { w_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (auto w : w_) if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bitset& operator-=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

    bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator<(const Bitset& o) const { return w_ < o.w_; }

    bool subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    /// Index of the lowest set bit, -1 when empty.
    int first() const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return int(i) * 64 + std::countr_zero(w_[i]);
        return -1;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t w = w_[i];
            while (w) {
                f(int(i) * 64 + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(count());
        for_each([&](int i) { v.push_back(i); });
        return v;
    }

    std::size_t hash() const {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        for (auto w : w_) h = (h ^ w) * 0x100000001b3ull;
        return h;
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

} // namespace latskel

#endif
