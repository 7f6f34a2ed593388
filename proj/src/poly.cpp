#include "amkit/poly.hpp"

#include "amkit/error.hpp"

#include <sstream>

namespace amkit {

HomPoly2::HomPoly2(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_.resize(1);
}

HomPoly2 HomPoly2::monomial(std::size_t degree, std::size_t y_exponent, Rat coeff) {
    if (y_exponent > degree) throw ArgumentError("monomial exponent exceeds degree");
    HomPoly2 p(degree);
    p.c_[y_exponent] = std::move(coeff);
    return p;
}

HomPoly2 HomPoly2::from_counts(const std::vector<Int>& counts) {
    std::vector<Rat> c(counts.begin(), counts.end());
    return HomPoly2(std::move(c));
}

bool HomPoly2::is_zero() const {
    for (const auto& c : c_)
        if (sgn(c) != 0) return false;
    return true;
}

bool HomPoly2::is_integral() const {
    for (const auto& c : c_)
        if (!is_integer(c)) return false;
    return true;
}

Rat HomPoly2::evaluate(const Rat& x, const Rat& y) const {
    const std::size_t N = degree();
    std::vector<Rat> xp(N + 1), yp(N + 1);
    xp[0] = 1;
    yp[0] = 1;
    for (std::size_t i = 1; i <= N; ++i) {
        xp[i] = xp[i - 1] * x;
        yp[i] = yp[i - 1] * y;
    }
    Rat s = 0;
    for (std::size_t i = 0; i <= N; ++i)
        if (sgn(c_[i]) != 0) s += c_[i] * xp[N - i] * yp[i];
    return s;
}

HomPoly2& HomPoly2::operator+=(const HomPoly2& o) {
    if (o.degree() != degree()) throw ArgumentError("adding homogeneous polynomials of different degree");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

HomPoly2& HomPoly2::operator-=(const HomPoly2& o) {
    if (o.degree() != degree()) throw ArgumentError("subtracting homogeneous polynomials of different degree");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

HomPoly2& HomPoly2::operator*=(const Rat& s) {
    for (auto& c : c_) c *= s;
    return *this;
}

HomPoly2 operator*(const HomPoly2& a, const HomPoly2& b) {
    HomPoly2 r(a.degree() + b.degree());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (sgn(a.c_[i]) == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            if (sgn(b.c_[j]) != 0) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
}

std::string HomPoly2::to_string() const {
    std::ostringstream os;
    const std::size_t N = degree();
    bool first = true;
    for (std::size_t i = 0; i <= N; ++i) {
        if (sgn(c_[i]) == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << c_[i].get_str();
        if (N - i) os << "*x^" << (N - i);
        if (i) os << "*y^" << i;
    }
    if (first) os << "0";
    return os.str();
}

namespace {

// Coefficients of (p x + q y)^j, indexed by the power of y.
std::vector<Rat> linear_power(const Rat& p, const Rat& q, std::size_t j) {
    std::vector<Rat> out(j + 1);
    std::vector<Rat> pp(j + 1), qp(j + 1);
    pp[0] = 1;
    qp[0] = 1;
    for (std::size_t i = 1; i <= j; ++i) {
        pp[i] = pp[i - 1] * p;
        qp[i] = qp[i - 1] * q;
    }
    for (std::size_t m = 0; m <= j; ++m)
        out[m] = Rat(binomial(static_cast<long>(j), static_cast<long>(m))) * pp[j - m] * qp[m];
    return out;
}

}  // namespace

HomPoly2 substitute_linear(const HomPoly2& p, const LinearSubst& s, const Rat& scale) {
    const std::size_t N = p.degree();
    std::vector<std::vector<Rat>> xs(N + 1), ys(N + 1);
    for (std::size_t j = 0; j <= N; ++j) {
        xs[j] = linear_power(s.a, s.b, j);
        ys[j] = linear_power(s.c, s.e, j);
    }
    std::vector<Rat> out(N + 1);
    for (std::size_t i = 0; i <= N; ++i) {
        const Rat& ci = p.coeff(i);
        if (sgn(ci) == 0) continue;
        const auto& X = xs[N - i];
        const auto& Y = ys[i];
        for (std::size_t u = 0; u < X.size(); ++u) {
            if (sgn(X[u]) == 0) continue;
            const Rat cx = ci * X[u];
            for (std::size_t v = 0; v < Y.size(); ++v)
                if (sgn(Y[v]) != 0) out[u + v] += cx * Y[v];
        }
    }
    for (auto& c : out) c *= scale;
    return HomPoly2(std::move(out));
}

HomPoly2 macwilliams(const HomPoly2& w, std::size_t k) {
    if (w.evaluate(1, 1) != Rat(pow2(k)))
        throw ArgumentError("enumerator does not count 2^" + std::to_string(k) + " codewords");
    HomPoly2 r = substitute_linear(w, LinearSubst{1, 1, 1, -1}, pow2q(-static_cast<long>(k)));
    for (std::size_t i = 0; i <= r.degree(); ++i) {
        const Rat& c = r.coeff(i);
        if (!is_integer(c) || sgn(c) < 0)
            throw IntegralityError("MacWilliams transform gives coefficient " + c.get_str() + " at y^" +
                                   std::to_string(i) + "; input is not an enumerator of a code");
    }
    return r;
}

RatPoly::RatPoly(const Rat& c) {
    if (sgn(c) != 0) t_[{0, 0}] = c;
}

RatPoly RatPoly::n() { return monomial(1, 1, 0); }
RatPoly RatPoly::d() { return monomial(1, 0, 1); }

RatPoly RatPoly::monomial(const Rat& c, unsigned n_exp, unsigned d_exp) {
    RatPoly p;
    p.add_term({n_exp, d_exp}, c);
    return p;
}

Rat RatPoly::coeff(unsigned n_exp, unsigned d_exp) const {
    auto it = t_.find({n_exp, d_exp});
    return it == t_.end() ? Rat(0) : it->second;
}

unsigned RatPoly::total_degree() const {
    unsigned m = 0;
    for (const auto& [e, c] : t_) m = std::max(m, e.first + e.second);
    return m;
}

void RatPoly::add_term(const Exponents& e, const Rat& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = t_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) t_.erase(it);
    }
}

Rat RatPoly::evaluate_at(const Rat& n0, const Rat& d0) const {
    unsigned mn = 0, md = 0;
    for (const auto& [e, c] : t_) {
        mn = std::max(mn, e.first);
        md = std::max(md, e.second);
    }
    std::vector<Rat> np(mn + 1), dp(md + 1);
    np[0] = 1;
    dp[0] = 1;
    for (unsigned i = 1; i <= mn; ++i) np[i] = np[i - 1] * n0;
    for (unsigned i = 1; i <= md; ++i) dp[i] = dp[i - 1] * d0;
    Rat s = 0;
    for (const auto& [e, c] : t_) s += c * np[e.first] * dp[e.second];
    return s;
}

RatPoly RatPoly::pow(unsigned e) const {
    RatPoly r(1), base = *this;
    while (e) {
        if (e & 1u) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
    for (const auto& [e, c] : o.t_) add_term(e, c);
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
    for (const auto& [e, c] : o.t_) add_term(e, -c);
    return *this;
}

RatPoly& RatPoly::operator*=(const RatPoly& o) {
    RatPoly r;
    for (const auto& [e1, c1] : t_)
        for (const auto& [e2, c2] : o.t_) r.add_term({e1.first + e2.first, e1.second + e2.second}, c1 * c2);
    t_ = std::move(r.t_);
    return *this;
}

std::string RatPoly::to_string() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest total degree first reads more naturally.
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) os << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0) os << "-";
        first = false;
        const Rat a = abs(c);
        const bool bare = e.first + e.second > 0;
        if (!(bare && a == 1)) os << a.get_str();
        if (e.first) os << (bare && a == 1 ? "" : "*") << "n" << (e.first > 1 ? "^" + std::to_string(e.first) : "");
        if (e.second)
            os << ((e.first || !(a == 1)) ? "*" : "") << "d"
               << (e.second > 1 ? "^" + std::to_string(e.second) : "");
    }
    return os.str();
}

RatPoly binomial(const RatPoly& top, unsigned r) {
    RatPoly p(1);
    Int fact = 1;
    for (unsigned i = 0; i < r; ++i) {
        p *= top - RatPoly(static_cast<long>(i));
        fact *= i + 1;
    }
    return p * RatPoly(Rat(Int(1), fact));
}

}  // namespace amkit
