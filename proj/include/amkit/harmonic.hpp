#pragma once

#include "amkit/bigint.hpp"
#include "amkit/bitvec.hpp"
#include "amkit/gf2code.hpp"
#include "amkit/poly.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace amkit {

/// Rational function on the k-subsets of {0..n-1}, values in colex order.
struct HarmonicFn {
    std::size_t n = 0;
    std::size_t k = 0;
    std::vector<Rat> values;

    const Rat& at_rank(std::uint64_t r) const { return values.at(r); }
    /// Value at a sorted k-subset.
    const Rat& operator()(const std::vector<int>& z) const;

    friend bool operator==(const HarmonicFn&, const HarmonicFn&) = default;
};

/// gamma(f) as a function on (k-1)-subsets (colex order).
std::vector<Rat> gamma(const HarmonicFn& f);
bool is_harmonic(const HarmonicFn& f);

/// Kernel basis of gamma on k-subsets: one integer vector with content 1 per
/// free column of the row-reduced gamma matrix, in increasing column order.
std::vector<HarmonicFn> harm_basis(std::size_t n, std::size_t k);

/// Same, memoized per (n, k). Thread-safe.
const std::vector<HarmonicFn>& cached_harm_basis(std::size_t n, std::size_t k);

/// dim Harm_k(n) = C(n,k) - rank(gamma), computed without building a basis:
/// the rank is certified full by a block-triangular recursion on inclusion
/// matrices with modular elimination at the square base cases (those above
/// 2500 rows rest on Kantor's full-rank theorem instead).
Int harm_dimension(std::size_t n, std::size_t k);

/// Sum of f over the k-subsets of u.
Rat tilde(const HarmonicFn& f, const std::vector<int>& u);
Rat tilde(const HarmonicFn& f, const BitVec& u);

/// For every weight w and k-subset z (colex), the number of codewords of
/// weight w whose support contains z. Row-major (n+1) x C(n,k).
std::vector<std::uint64_t> subset_profile(const BinaryCode& c, std::size_t k, const EnumOptions& opt = {});

/// W_{C,f}: coefficient of x^(n-w) y^w is the sum of f~ over weight-w codewords.
HomPoly2 harmonic_enumerator(const BinaryCode& c, const HarmonicFn& f, const EnumOptions& opt = {});

/// The same for many f of one degree, sharing one enumeration pass.
std::vector<HomPoly2> harmonic_enumerators(const BinaryCode& c, const std::vector<HarmonicFn>& fs,
                                           const EnumOptions& opt = {});

/// Z with W = (xy)^k Z.
HomPoly2 bachoc_z(const HomPoly2& w, std::size_t k);

/// Z_{C-perp,f} from Z_{C,f}: (-1)^k 2^(k - dim) Z(x + y, x - y).
HomPoly2 bachoc_transform(const HomPoly2& z, std::size_t k, std::size_t dim, std::size_t n);

}  // namespace amkit
