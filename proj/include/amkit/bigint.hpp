#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <deque>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace amkit {

using Int = mpz_class;
using Rat = mpq_class;

/// C(n, k) with the combinatorial convention C(n, k) = 0 unless 0 <= k <= n.
Int binomial(long n, long k);

/// 2^e as an exact integer.
Int pow2(unsigned long e);

/// Rational 2^e for any integer e.
Rat pow2q(long e);

bool is_integer(const Rat& q);

/// num/den in lowest terms. den must be nonzero.
Rat ratio(const Int& num, const Int& den);

/// Floor square root of a nonnegative integer, exact.
std::uint64_t isqrt(std::uint64_t x);
unsigned __int128 isqrt(unsigned __int128 x);

/// Exact square root if x is a perfect square.
std::optional<std::int64_t> exact_sqrt(__int128 x);
std::optional<Int> exact_sqrt(const Int& x);

/// C(n, k) in 64 bits, or nullopt on overflow (k outside [0, n] gives 0).
std::optional<std::uint64_t> binomial_u64(std::uint64_t n, std::uint64_t k);

std::string to_string(const Int& v);
std::string to_string(const Rat& v);

/// Lazily memoized rows of Pascal's triangle. Row m is computed
/// multiplicatively on first use; references stay valid for the table's
/// lifetime. Safe to use from several threads.
class BinomialRows {
public:
    /// C(m, k) for m >= 0; zero outside 0 <= k <= m.
    Int at(long m, long k);

    /// Full row m (length m + 1).
    const std::vector<Int>& row(long m);

private:
    std::mutex mu_;
    std::unordered_map<long, const std::vector<Int>*> index_;
    std::deque<std::vector<Int>> storage_;
};

/// Process-wide table shared by the search and constraint code.
BinomialRows& binomial_rows();

}  // namespace amkit
