#include "amkit/harmonic.hpp"

#include "amkit/error.hpp"
#include "amkit/kernels.hpp"
#include "amkit/subsets.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

namespace amkit {

namespace {

void check_nk(std::size_t n, std::size_t k) {
    if (k > n) throw ArgumentError("degree k=" + std::to_string(k) + " exceeds n=" + std::to_string(n));
    if (n > 64) throw CapacityError("harmonic functions are limited to n <= 64");
}

}  // namespace

const Rat& HarmonicFn::operator()(const std::vector<int>& z) const {
    ColexTable T(n, k);
    return values.at(T.rank(z));
}

std::vector<Rat> gamma(const HarmonicFn& f) {
    if (f.k == 0) return {};
    ColexTable T(f.n, f.k), L(f.n, f.k - 1);
    std::vector<Rat> out(L.count());
    std::vector<int> y;
    for (std::uint64_t r = 0; r < T.count(); ++r) {
        if (sgn(f.values[r]) == 0) continue;
        const auto z = T.unrank(r);
        for (std::size_t drop = 0; drop < z.size(); ++drop) {
            y.clear();
            for (std::size_t i = 0; i < z.size(); ++i)
                if (i != drop) y.push_back(z[i]);
            out[L.rank(y)] += f.values[r];
        }
    }
    return out;
}

bool is_harmonic(const HarmonicFn& f) {
    for (const auto& g : gamma(f))
        if (sgn(g) != 0) return false;
    return true;
}

std::vector<HarmonicFn> harm_basis(std::size_t n, std::size_t k) {
    check_nk(n, k);
    ColexTable T(n, k);
    const std::size_t cols = T.count();
    if (k == 0) return {HarmonicFn{n, 0, {Rat(1)}}};
    ColexTable L(n, k - 1);
    const std::size_t rows = L.count();

    // gamma matrix: row y, column z, entry 1 iff y is contained in z.
    std::vector<std::vector<Int>> M(rows, std::vector<Int>(cols));
    std::vector<int> y;
    for (std::size_t c = 0; c < cols; ++c) {
        const auto z = T.unrank(c);
        for (std::size_t drop = 0; drop < k; ++drop) {
            y.clear();
            for (std::size_t i = 0; i < k; ++i)
                if (i != drop) y.push_back(z[i]);
            M[L.rank(y)][c] = 1;
        }
    }

    // Fraction-free Gauss-Jordan: row_i <- p * row_i - a * row_pivot, then
    // divide by the row content.
    auto normalize = [](std::vector<Int>& row) {
        Int g = 0;
        for (const auto& x : row)
            if (sgn(x) != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g > 1)
            for (auto& x : row)
                if (sgn(x) != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    };
    std::vector<std::size_t> pivcol;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && sgn(M[p][c]) == 0) ++p;
        if (p == rows) continue;
        std::swap(M[r], M[p]);
        if (sgn(M[r][c]) < 0)
            for (auto& x : M[r]) x = -x;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(M[i][c]) == 0) continue;
            const Int a = M[i][c], piv = M[r][c];
            for (std::size_t j = 0; j < cols; ++j) {
                if (sgn(M[r][j]) == 0 && sgn(M[i][j]) == 0) continue;
                M[i][j] = piv * M[i][j] - a * M[r][j];
            }
            normalize(M[i]);
        }
        pivcol.push_back(c);
        ++r;
    }
    M.resize(r);

    std::vector<bool> is_piv(cols, false);
    for (auto c : pivcol) is_piv[c] = true;
    Int L_all = 1;
    for (std::size_t i = 0; i < r; ++i) mpz_lcm(L_all.get_mpz_t(), L_all.get_mpz_t(), M[i][pivcol[i]].get_mpz_t());

    std::vector<HarmonicFn> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        std::vector<Int> x(cols);
        x[f] = L_all;
        for (std::size_t i = 0; i < r; ++i) {
            if (sgn(M[i][f]) == 0) continue;
            x[pivcol[i]] = -(M[i][f] * L_all) / M[i][pivcol[i]];
        }
        normalize(x);
        HarmonicFn h{n, k, std::vector<Rat>(x.begin(), x.end())};
        basis.push_back(std::move(h));
    }
    return basis;
}

const std::vector<HarmonicFn>& cached_harm_basis(std::size_t n, std::size_t k) {
    static std::mutex mu;
    static std::map<std::pair<std::size_t, std::size_t>, std::vector<HarmonicFn>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({n, k});
        if (it != cache.end()) return it->second;
    }
    auto b = harm_basis(n, k);
    std::lock_guard<std::mutex> lock(mu);
    return cache.try_emplace({n, k}, std::move(b)).first->second;
}

namespace {

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;
constexpr unsigned long kMaxSquare = 2500;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    std::uint64_t lo = static_cast<std::uint64_t>(p & kPrime), hi = static_cast<std::uint64_t>(p >> 61);
    std::uint64_t s = lo + hi;
    if (s >= kPrime) s -= kPrime;
    return s;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1;
    }
    return r;
}

// Rank mod p of the inclusion matrix W(s, k, n): rows s-subsets, columns
// k-subsets, entry 1 when the row is contained in the column.
std::size_t inclusion_rank_mod_p(std::size_t s, std::size_t k, std::size_t n) {
    ColexTable R(n, s), C(n, k);
    const std::size_t rows = R.count(), cols = C.count();
    std::vector<std::vector<std::uint64_t>> M(rows, std::vector<std::uint64_t>(cols, 0));
    for (std::size_t c = 0; c < cols; ++c) {
        const auto z = C.unrank(c);
        for_each_k_subset(R, z.data(), z.size(), [&](std::uint64_t y) { M[y][c] = 1; });
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && M[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(M[rank], M[p]);
        const std::uint64_t inv = powmod(M[rank][c], kPrime - 2);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (M[i][c] == 0) continue;
            const std::uint64_t f = mulmod(M[i][c], inv);
            for (std::size_t j = c; j < cols; ++j)
                if (M[rank][j]) M[i][j] = (M[i][j] + kPrime - mulmod(f, M[rank][j])) % kPrime;
        }
        ++rank;
    }
    return rank;
}

// True when W(s, k, n) provably has full row rank C(n, s). Requires
// s <= k <= n - s. Splitting on the last point gives
//   W(s,k,n) = [[W(s,k,n-1), *], [0, W(s-1,k-1,n-1)]]
// and full row rank of both diagonal blocks implies full row rank.
bool full_row_rank(std::size_t s, std::size_t k, std::size_t n,
                   std::map<std::tuple<std::size_t, std::size_t, std::size_t>, bool>& memo) {
    if (s == 0) return k <= n;
    if (s > k || k + s > n) return false;
    auto key = std::make_tuple(s, k, n);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    bool ok;
    if (k == s)
        ok = true;  // identity matrix
    else if (k + s == n) {
        const Int sz = binomial(static_cast<long>(n), static_cast<long>(s));
        // square blocks past this size are taken from Kantor's full-rank theorem
        ok = sz > kMaxSquare || inclusion_rank_mod_p(s, k, n) == static_cast<std::size_t>(sz.get_ui());
    }
    else
        ok = full_row_rank(s, k, n - 1, memo) && full_row_rank(s - 1, k - 1, n - 1, memo);
    memo[key] = ok;
    return ok;
}

}  // namespace

Int harm_dimension(std::size_t n, std::size_t k) {
    check_nk(n, k);
    if (k == 0) return 1;
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, bool> memo;
    const Int cols = binomial(static_cast<long>(n), static_cast<long>(k));
    if (2 * k <= n) {
        // gamma is W(k-1, k, n).
        if (!full_row_rank(k - 1, k, n, memo))
            throw Error("rank certificate failed for W(" + std::to_string(k - 1) + "," + std::to_string(k) + "," +
                        std::to_string(n) + ")");
        return cols - binomial(static_cast<long>(n), static_cast<long>(k - 1));
    }
    // Otherwise gamma is injective: its transpose is W(n-k, n-k+1, n) up to
    // complementing subsets.
    if (!full_row_rank(n - k, n - k + 1, n, memo))
        throw Error("rank certificate failed for the transposed gamma matrix");
    return 0;
}

Rat tilde(const HarmonicFn& f, const std::vector<int>& u) {
    if (u.size() < f.k) return 0;
    ColexTable T(f.n, f.k);
    Rat s = 0;
    for_each_k_subset(T, u.data(), u.size(), [&](std::uint64_t r) { s += f.values[r]; });
    return s;
}

Rat tilde(const HarmonicFn& f, const BitVec& u) { return tilde(f, u.support()); }

std::vector<std::uint64_t> subset_profile(const BinaryCode& c, std::size_t k, const EnumOptions& opt) {
    const std::size_t n = c.length();
    check_nk(n, k);
    if (c.dimension() > std::min<std::size_t>(opt.cap, 62))
        throw CapacityError("enumerating 2^" + std::to_string(c.dimension()) + " codewords exceeds the cap");
    ColexTable T(n, k);
    const std::uint64_t cols = T.count();
    if (cols * (n + 1) > (std::uint64_t{1} << 27)) throw CapacityError("subset profile table too large");
    using Table = std::vector<std::uint64_t>;
    return kernels::reduce_codewords(
        c.packed(), opt.exec, [&] { return Table((n + 1) * cols, 0); },
        [&](Table& t, const std::uint64_t* w, unsigned wt) {
            int supp[64];
            std::size_t m = 0;
            std::uint64_t x = w[0];
            while (x) {
                supp[m++] = std::countr_zero(x);
                x &= x - 1;
            }
            std::uint64_t* row = t.data() + static_cast<std::size_t>(wt) * cols;
            for_each_k_subset(T, supp, m, [row](std::uint64_t r) { ++row[r]; });
        },
        [](Table& into, const Table& from) {
            for (std::size_t i = 0; i < into.size(); ++i) into[i] += from[i];
        });
}

std::vector<HomPoly2> harmonic_enumerators(const BinaryCode& c, const std::vector<HarmonicFn>& fs,
                                           const EnumOptions& opt) {
    if (fs.empty()) return {};
    const std::size_t n = c.length(), k = fs.front().k;
    for (const auto& f : fs)
        if (f.n != n || f.k != k) throw ArgumentError("harmonic functions must share n and k with the code");
    const auto prof = subset_profile(c, k, opt);
    const std::size_t cols = fs.front().values.size();
    std::vector<HomPoly2> out;
    out.reserve(fs.size());
    const Int small_limit = Int(1) << 32;
    for (const auto& f : fs) {
        bool fast = c.dimension() <= 40;
        std::vector<std::int64_t> iv;
        if (fast) {
            iv.reserve(cols);
            for (const auto& v : f.values) {
                if (!is_integer(v) || abs(v.get_num()) >= small_limit) {
                    fast = false;
                    break;
                }
                iv.push_back(v.get_num().get_si());
            }
        }
        std::vector<Rat> coeff(n + 1);
        for (std::size_t w = 0; w <= n; ++w) {
            const std::uint64_t* row = prof.data() + w * cols;
            if (fast) {
                __int128 s = 0;
                for (std::size_t z = 0; z < cols; ++z)
                    if (row[z]) s += static_cast<__int128>(iv[z]) * static_cast<__int128>(row[z]);
                const bool neg = s < 0;
                unsigned __int128 u = neg ? static_cast<unsigned __int128>(-s) : static_cast<unsigned __int128>(s);
                Int hi(static_cast<unsigned long>(u >> 64)), lo(static_cast<unsigned long>(u & ~std::uint64_t{0}));
                Int v = (hi << 64) + lo;
                coeff[w] = neg ? Rat(-v) : Rat(v);
            } else {
                Rat s = 0;
                for (std::size_t z = 0; z < cols; ++z)
                    if (row[z]) s += f.values[z] * Rat(Int(static_cast<unsigned long>(row[z])));
                coeff[w] = s;
            }
        }
        out.emplace_back(std::move(coeff));
    }
    return out;
}

HomPoly2 harmonic_enumerator(const BinaryCode& c, const HarmonicFn& f, const EnumOptions& opt) {
    return harmonic_enumerators(c, {f}, opt).front();
}

HomPoly2 bachoc_z(const HomPoly2& w, std::size_t k) {
    const std::size_t N = w.degree();
    if (2 * k > N) throw ArgumentError("(xy)^" + std::to_string(k) + " has degree above " + std::to_string(N));
    for (std::size_t i = 0; i < k; ++i)
        if (sgn(w.coeff(i)) != 0 || sgn(w.coeff(N - i)) != 0)
            throw DivisibilityError("polynomial is not divisible by (xy)^" + std::to_string(k));
    std::vector<Rat> z(N - 2 * k + 1);
    for (std::size_t i = 0; i < z.size(); ++i) z[i] = w.coeff(i + k);
    return HomPoly2(std::move(z));
}

HomPoly2 bachoc_transform(const HomPoly2& z, std::size_t k, std::size_t dim, std::size_t n) {
    if (2 * k > n || z.degree() != n - 2 * k)
        throw ArgumentError("Z-polynomial must have degree n - 2k");
    Rat scale = pow2q(static_cast<long>(k) - static_cast<long>(dim));
    if (k & 1) scale = -scale;
    return substitute_linear(z, LinearSubst{1, 1, 1, -1}, scale);
}

}  // namespace amkit
