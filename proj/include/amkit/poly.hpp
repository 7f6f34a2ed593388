#pragma once

#include "amkit/bigint.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace amkit {

/// Homogeneous polynomial sum_i c_i x^(N-i) y^i in two variables with
/// exact rational coefficients. Weight enumerators and the Z-polynomials of
/// harmonic enumerators live here.
class HomPoly2 {
public:
    HomPoly2() : HomPoly2(std::size_t{0}) {}
    /// The zero polynomial of the given degree.
    explicit HomPoly2(std::size_t degree) : c_(degree + 1) {}
    /// coeffs[i] multiplies x^(N-i) y^i, N = coeffs.size() - 1.
    explicit HomPoly2(std::vector<Rat> coeffs);

    static HomPoly2 monomial(std::size_t degree, std::size_t y_exponent, Rat coeff = 1);
    static HomPoly2 from_counts(const std::vector<Int>& counts);

    std::size_t degree() const noexcept { return c_.size() - 1; }
    const Rat& coeff(std::size_t y_exponent) const { return c_.at(y_exponent); }
    void set_coeff(std::size_t y_exponent, Rat value) { c_.at(y_exponent) = std::move(value); }
    const std::vector<Rat>& coeffs() const noexcept { return c_; }

    bool is_zero() const;
    bool is_integral() const;
    Rat evaluate(const Rat& x, const Rat& y) const;

    HomPoly2& operator+=(const HomPoly2& o);
    HomPoly2& operator-=(const HomPoly2& o);
    HomPoly2& operator*=(const Rat& s);

    friend HomPoly2 operator+(HomPoly2 a, const HomPoly2& b) { return a += b; }
    friend HomPoly2 operator-(HomPoly2 a, const HomPoly2& b) { return a -= b; }
    friend HomPoly2 operator*(HomPoly2 a, const Rat& s) { return a *= s; }
    friend HomPoly2 operator*(const Rat& s, HomPoly2 a) { return a *= s; }
    friend HomPoly2 operator*(const HomPoly2& a, const HomPoly2& b);
    friend bool operator==(const HomPoly2& a, const HomPoly2& b) { return a.c_ == b.c_; }

    std::string to_string() const;

private:
    std::vector<Rat> c_;
};

/// x -> a*x + b*y, y -> c*x + e*y.
struct LinearSubst {
    Rat a = 1, b = 0, c = 0, e = 1;
};

/// scale * p(a x + b y, c x + e y), expanded exactly. Degree is preserved.
HomPoly2 substitute_linear(const HomPoly2& p, const LinearSubst& s, const Rat& scale = 1);

/// Binary MacWilliams transform: 2^-k * w(x + y, x - y). Throws
/// IntegralityError if the result is not a nonnegative integer polynomial
/// and ArgumentError if w(1,1) != 2^k.
HomPoly2 macwilliams(const HomPoly2& w, std::size_t k);

/// Sparse polynomial in two formal variables n and d with rational
/// coefficients. Zero coefficients are never stored, so equality is map
/// equality.
class RatPoly {
public:
    using Exponents = std::pair<unsigned, unsigned>;  // (power of n, power of d)
    using Terms = std::map<Exponents, Rat>;

    RatPoly() = default;
    RatPoly(const Rat& c);  // NOLINT: constants convert implicitly
    RatPoly(long c) : RatPoly(Rat(c)) {}  // NOLINT

    static RatPoly n();
    static RatPoly d();
    static RatPoly monomial(const Rat& c, unsigned n_exp, unsigned d_exp);

    const Terms& terms() const noexcept { return t_; }
    Rat coeff(unsigned n_exp, unsigned d_exp) const;
    bool is_zero() const noexcept { return t_.empty(); }
    unsigned total_degree() const;

    Rat evaluate_at(const Rat& n0, const Rat& d0) const;
    RatPoly pow(unsigned e) const;

    RatPoly& operator+=(const RatPoly& o);
    RatPoly& operator-=(const RatPoly& o);
    RatPoly& operator*=(const RatPoly& o);

    friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
    friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
    friend RatPoly operator*(RatPoly a, const RatPoly& b) { return a *= b; }
    friend RatPoly operator-(RatPoly a) { return RatPoly() - a; }
    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.t_ == b.t_; }

    std::string to_string() const;

private:
    void add_term(const Exponents& e, const Rat& c);
    Terms t_;
};

/// C(top, r) = top (top - 1) ... (top - r + 1) / r! as a polynomial.
RatPoly binomial(const RatPoly& top, unsigned r);

}  // namespace amkit
