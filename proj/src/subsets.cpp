#include "amkit/subsets.hpp"

#include "amkit/error.hpp"

#include <string>

namespace amkit {

ColexTable::ColexTable(std::size_t v, std::size_t k) : v_(v), k_(k), c_((v + 1) * (k + 1), 0) {
    for (std::size_t m = 0; m <= v; ++m) {
        c_[m * (k + 1)] = 1;
        for (std::size_t j = 1; j <= k && j <= m; ++j) {
            const std::uint64_t a = c_[(m - 1) * (k + 1) + j - 1];
            const std::uint64_t b = j <= m - 1 ? c_[(m - 1) * (k + 1) + j] : 0;
            if (a > UINT64_MAX - b)
                throw CapacityError("C(" + std::to_string(v) + "," + std::to_string(k) + ") does not fit in 64 bits");
            c_[m * (k + 1) + j] = a + b;
        }
    }
    count_ = k <= v ? c_[v * (k + 1) + k] : 0;
}

std::vector<int> ColexTable::unrank(std::uint64_t r) const {
    std::vector<int> s(k_);
    std::size_t m = v_;
    for (std::size_t i = k_; i-- > 0;) {
        // Largest element e with C(e, i+1) <= r.
        while (m > 0 && binom(m - 1, i + 1) > r) --m;
        --m;
        s[i] = static_cast<int>(m);
        r -= binom(m, i + 1);
    }
    return s;
}

}  // namespace amkit
