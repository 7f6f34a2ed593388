#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace amkit {

/// Fixed-length vector over GF(2), packed into 64-bit words. Bit i of the
/// vector is bit (i % 64) of word i / 64; unused high bits are kept zero.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    static BitVec ones(std::size_t n) {
        BitVec v(n);
        for (std::size_t i = 0; i < n; ++i) v.set(i);
        return v;
    }

    static BitVec from_words(std::size_t n, const std::uint64_t* words) {
        BitVec v(n);
        for (std::size_t i = 0; i < v.w_.size(); ++i) v.w_[i] = words[i];
        return v;
    }

    std::size_t size() const noexcept { return n_; }
    std::size_t word_count() const noexcept { return w_.size(); }
    const std::vector<std::uint64_t>& words() const noexcept { return w_; }

    bool test(std::size_t i) const noexcept { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool on = true) noexcept {
        const std::uint64_t m = std::uint64_t{1} << (i & 63);
        if (on)
            w_[i >> 6] |= m;
        else
            w_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) noexcept { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    std::size_t popcount() const noexcept {
        std::size_t c = 0;
        for (auto x : w_) c += static_cast<std::size_t>(std::popcount(x));
        return c;
    }
    bool none() const noexcept {
        for (auto x : w_)
            if (x) return false;
        return true;
    }

    BitVec& operator^=(const BitVec& o) noexcept {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }
    friend BitVec operator^(BitVec a, const BitVec& b) noexcept { return a ^= b; }
    friend BitVec operator&(BitVec a, const BitVec& b) noexcept {
        for (std::size_t i = 0; i < a.w_.size(); ++i) a.w_[i] &= b.w_[i];
        return a;
    }

    /// Parity of the inner product.
    bool dot(const BitVec& o) const noexcept {
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < w_.size(); ++i) acc ^= w_[i] & o.w_[i];
        return std::popcount(acc) & 1;
    }

    /// Index of the lowest set bit, or size() when none.
    std::size_t first_set() const noexcept {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(w_[i]));
        return n_;
    }

    /// Sorted 0-based coordinates of the set bits.
    std::vector<int> support() const {
        std::vector<int> s;
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t x = w_[i];
            while (x) {
                s.push_back(static_cast<int>(i * 64 + static_cast<std::size_t>(std::countr_zero(x))));
                x &= x - 1;
            }
        }
        return s;
    }

    friend bool operator==(const BitVec&, const BitVec&) = default;

    /// Orders by coordinate string, first coordinate most significant.
    friend std::strong_ordering operator<=>(const BitVec& a, const BitVec& b) noexcept {
        if (a.n_ != b.n_) return a.n_ <=> b.n_;
        for (std::size_t i = 0; i < a.n_; ++i) {
            const bool x = a.test(i), y = b.test(i);
            if (x != y) return y <=> x;
        }
        return std::strong_ordering::equal;
    }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace amkit
