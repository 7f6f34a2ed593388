#include "amkit/bigint.hpp"

#include "amkit/error.hpp"

namespace amkit {

Int binomial(long n, long k) {
    Int r;
    if (n < 0 || k < 0 || k > n) return r;  // zero
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Int pow2(unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

Rat pow2q(long e) {
    if (e >= 0) return Rat(pow2(static_cast<unsigned long>(e)));
    Rat r(Int(1), pow2(static_cast<unsigned long>(-e)));
    r.canonicalize();
    return r;
}

bool is_integer(const Rat& q) { return q.get_den() == 1; }

Rat ratio(const Int& num, const Int& den) {
    if (den == 0) throw ArgumentError("division by zero");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

std::uint64_t isqrt(std::uint64_t x) {
    if (x < 2) return x;
    // Newton from above; monotone decreasing until r*r <= x.
    std::uint64_t r = x;
    std::uint64_t y = (r >> 1) + (r & 1);
    while (y < r) {
        r = y;
        y = (r + x / r) / 2;
    }
    return r;
}

unsigned __int128 isqrt(unsigned __int128 x) {
    if (x < 2) return x;
    unsigned __int128 r = x;
    unsigned __int128 y = (r >> 1) + (r & 1);
    while (y < r) {
        r = y;
        y = (r + x / r) / 2;
    }
    return r;
}

std::optional<std::int64_t> exact_sqrt(__int128 x) {
    if (x < 0) return std::nullopt;
    auto r = isqrt(static_cast<unsigned __int128>(x));
    if (r * r != static_cast<unsigned __int128>(x)) return std::nullopt;
    return static_cast<std::int64_t>(r);
}

std::optional<Int> exact_sqrt(const Int& x) {
    if (sgn(x) < 0 || !mpz_perfect_square_p(x.get_mpz_t())) return std::nullopt;
    Int r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

std::optional<std::uint64_t> binomial_u64(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // r * (n - k + i) / i stays integral at every step.
        r = r * (n - k + i) / i;
        if (r > UINT64_MAX) return std::nullopt;
    }
    return static_cast<std::uint64_t>(r);
}

std::string to_string(const Int& v) { return v.get_str(); }
std::string to_string(const Rat& v) { return v.get_str(); }

Int BinomialRows::at(long m, long k) {
    if (m < 0 || k < 0 || k > m) return Int(0);
    return row(m)[static_cast<std::size_t>(k)];
}

const std::vector<Int>& BinomialRows::row(long m) {
    if (m < 0) throw ArgumentError("binomial row index must be nonnegative");
    std::lock_guard<std::mutex> lock(mu_);
    if (auto it = index_.find(m); it != index_.end()) return *it->second;
    std::vector<Int> r(static_cast<std::size_t>(m) + 1);
    r[0] = 1;
    for (long j = 0; j < m; ++j) {
        r[static_cast<std::size_t>(j) + 1] = r[static_cast<std::size_t>(j)] * (m - j) / (j + 1);
    }
    storage_.push_back(std::move(r));
    index_[m] = &storage_.back();
    return storage_.back();
}

BinomialRows& binomial_rows() {
    static BinomialRows table;
    return table;
}

}  // namespace amkit
