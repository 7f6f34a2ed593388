#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace amkit {

/// Colexicographic ranking of k-subsets of {0..v-1}:
/// rank({s_0 < ... < s_{k-1}}) = sum_i C(s_i, i+1).
class ColexTable {
public:
    /// Throws CapacityError when C(v, k) does not fit in 64 bits.
    ColexTable(std::size_t v, std::size_t k);

    std::size_t v() const noexcept { return v_; }
    std::size_t k() const noexcept { return k_; }
    std::uint64_t count() const noexcept { return count_; }
    std::uint64_t binom(std::size_t m, std::size_t j) const noexcept {
        return j > k_ || m < j ? 0 : c_[m * (k_ + 1) + j];
    }

    /// `s` sorted increasing, length k.
    std::uint64_t rank(const int* s) const noexcept {
        std::uint64_t r = 0;
        for (std::size_t i = 0; i < k_; ++i) r += binom(static_cast<std::size_t>(s[i]), i + 1);
        return r;
    }
    std::uint64_t rank(const std::vector<int>& s) const noexcept { return rank(s.data()); }
    std::vector<int> unrank(std::uint64_t r) const;

private:
    std::size_t v_, k_;
    std::uint64_t count_;
    std::vector<std::uint64_t> c_;  // (v+1) x (k+1)
};

/// Calls f(rank) for each k-subset of the sorted list elems[0..m).
template <class F>
void for_each_k_subset(const ColexTable& T, const int* elems, std::size_t m, F&& f) {
    const std::size_t k = T.k();
    if (k > m) return;
    if (k == 0) {
        f(std::uint64_t{0});
        return;
    }
    std::size_t idx[64];
    std::vector<std::size_t> big;
    std::size_t* c = idx;
    if (k > 64) {
        big.resize(k);
        c = big.data();
    }
    for (std::size_t i = 0; i < k; ++i) c[i] = i;
    for (;;) {
        std::uint64_t r = 0;
        for (std::size_t i = 0; i < k; ++i) r += T.binom(static_cast<std::size_t>(elems[c[i]]), i + 1);
        f(r);
        std::size_t i = k;
        while (i > 0 && c[i - 1] == m - k + (i - 1)) --i;
        if (i == 0) return;
        ++c[i - 1];
        for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
    }
}

}  // namespace amkit
