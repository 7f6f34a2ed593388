#include "amkit/amcore.hpp"

#include "amkit/error.hpp"

#include <random>

namespace amkit {

std::size_t weights_up_to(const WeightDistribution& wd, std::size_t t) {
    const std::size_t n = wd.length();
    std::size_t c = 0;
    for (std::size_t u = 1; u + t <= n; ++u)
        if (sgn(wd[u]) != 0) ++c;
    return c;
}

AmStatus am_status(const WeightDistribution& wd, std::size_t d_perp) {
    AmStatus st;
    st.d_perp = d_perp;
    for (std::size_t t = d_perp; t-- > 1;) {
        if (weights_up_to(wd, t) <= d_perp - t) {
            st.t_inequality = t;
            break;
        }
    }
    for (std::size_t t = d_perp; t-- > 1;) {
        if (weights_up_to(wd, t) == d_perp - t) {
            st.t_equality = t;
            st.gap = d_perp - t;
            break;
        }
    }
    if (st.gap && *st.gap >= 1 && *st.gap <= 3)
        st.case_label = classify_main1(static_cast<long>(d_perp), static_cast<long>(*st.t_equality));
    return st;
}

AmStatus am_applicability(const BinaryCode& c, const EnumOptions& opt) {
    if (c.dimension() == 0) throw ArgumentError("zero code has no nonzero codeword");
    if (c.dimension() == c.length()) throw ArgumentError("full space has zero dual; d_perp undefined");
    const auto wd = weight_distribution(c, opt);
    const auto dual = macwilliams(wd.enumerator(), c.dimension());
    std::size_t d_perp = 0;
    for (std::size_t i = 1; i <= dual.degree(); ++i)
        if (sgn(dual.coeff(i)) != 0) {
            d_perp = i;
            break;
        }
    return am_status(wd, d_perp);
}

std::string classify_main1(long d_perp, long t) {
    const long gap = d_perp - t;
    if (gap < 1 || gap > 3)
        throw OutOfScopeError("d_perp - t = " + std::to_string(gap) + " is not covered (only 1, 2, 3)");
    static const std::vector<std::pair<long, long>> ok = {{2, 1}, {4, 3}, {4, 2}, {4, 1}, {6, 3}, {8, 5}};
    for (const auto& [a, b] : ok)
        if (a == d_perp && b == t) return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    return "excluded-by-theorem";
}

Rat constraint_residual(int i, long n, long d, const Rat& alpha, const Rat& beta) {
    if (i < 1) throw ArgumentError("equation index must be positive");
    if (n % 2 != 0 || d <= 0 || 2 * d >= n) throw ArgumentError("need n even and 0 < d < n/2");
    const long m = n - 2 * d;
    Int s = 0;
    for (int j = 0; j <= i; ++j) {
        Int term = binomial(d, i - j) * binomial(m, 2 * j);
        if ((i - j) & 1)
            s -= term;
        else
            s += term;
    }
    Rat r = 2 * alpha * Rat(s);
    const Rat b = beta * Rat(binomial(n / 2, i));
    r += (i & 1) ? -b : b;
    r += Rat(2 * binomial(n, 2 * i));
    return r;
}

ConstraintSystem constraint_system(long n, long d, const Rat& alpha, const Rat& beta) {
    ConstraintSystem cs;
    cs.n = n;
    cs.d = d;
    cs.alpha = alpha;
    cs.beta = beta;
    for (int i = 1; i <= 4; ++i) cs.residuals[static_cast<std::size_t>(i - 1)] = constraint_residual(i, n, d, alpha, beta);
    const Rat total = 2 * alpha + beta + 2;
    if (is_integer(total) && sgn(total) > 0) {
        const Int v = total.get_num();
        if ((v & (v - 1)) == 0) cs.k = mpz_sizeinbase(v.get_mpz_t(), 2) - 1;
    }
    return cs;
}

namespace {

bool positive_integer(const Rat& q) { return is_integer(q) && sgn(q) > 0; }

}  // namespace

std::optional<long> dimension_for_alpha(long n, long d) {
    const long m = n - 2 * d;
    if (m == 0) throw ArgumentError("n = 2d");
    const __int128 D = static_cast<__int128>(m) * m;
    // r = 2^(k-1) mod D
    __int128 r = 2 % D;
    __int128 exact = 2;  // 2^(k-1) while it is small, for the positivity test
    bool big = false;
    for (long k = 2; k <= n - 1; ++k) {
        const bool pos = big || exact > n;
        if (pos) {
            __int128 x = (static_cast<__int128>(n) * ((r - n % D + D) % D)) % D;
            if (x == 0) return k;
        }
        r = (r * 2) % D;
        if (!big) {
            exact *= 2;
            if (exact > (static_cast<__int128>(1) << 100)) big = true;
        }
    }
    return std::nullopt;
}

std::optional<Rat> alpha_dperp6(long n, long d) {
    const Int N = n, Dd = d;
    const Int m = N - 2 * Dd;
    const Int q = N * N - (4 * Dd + 3) * N + 4 * Dd * Dd + 2;
    if (m == 0 || q == 0) return std::nullopt;
    return ratio(-N * N * (N - 1) * (N - 2), m * m * q);
}

WeightParams solve_weight_params(long n, long d, int d_perp_min, std::optional<long> k) {
    WeightParams p;
    p.d_perp_min = d_perp_min;
    p.n = n;
    p.k = k;
    if (d_perp_min == 8) {
        const auto s = exact_sqrt(static_cast<__int128>(3) * n - 8);
        if (!s || (n - *s) % 2 != 0 || n - *s <= 0) {
            p.note = "no valid d";
            return p;
        }
        p.d = (n - *s) / 2;
        const Int N = n;
        p.alpha = ratio(N * N * (N * N - 3 * N + 2), 6 * (3 * N - 8));
        p.beta = ratio(2 * (N * N * N * N - 7 * N * N * N + 23 * N * N - 41 * N + 24), 3 * (3 * N - 8));
        p.alpha_ok = positive_integer(*p.alpha);
        p.beta_ok = positive_integer(*p.beta);
        if (p.alpha_ok && p.beta_ok) {
            const Int total = 2 * p.alpha->get_num() + p.beta->get_num() + 2;
            if ((total & (total - 1)) == 0) p.k = static_cast<long>(mpz_sizeinbase(total.get_mpz_t(), 2) - 1);
        }
        p.valid = p.alpha_ok && p.beta_ok;
        if (!p.valid) p.note = !p.alpha_ok ? "alpha not a positive integer" : "beta not a positive integer";
        return p;
    }
    if (n % 2 != 0 || d <= 0 || 2 * d >= n) throw ArgumentError("need n even and 0 < d < n/2");
    p.d = d;
    if (d_perp_min == 4) {
        if (!k) k = dimension_for_alpha(n, d);
        if (!k) {
            p.note = "no k in [2, n-1] makes alpha a positive integer";
            return p;
        }
        if (*k < 2 || *k > n - 1) throw ArgumentError("k must satisfy 2 <= k <= n-1");
        p.k = k;
        const Int m = n - 2 * d;
        p.alpha = ratio(Int(n) * (pow2(static_cast<unsigned long>(*k - 1)) - n), m * m);
        p.alpha_ok = positive_integer(*p.alpha);
        p.valid = p.alpha_ok;
        if (!p.valid) p.note = "alpha not a positive integer";
        return p;
    }
    if (d_perp_min == 6) {
        p.alpha = alpha_dperp6(n, d);
        if (!p.alpha) {
            p.note = "alpha undefined (vanishing denominator)";
            return p;
        }
        p.alpha_ok = positive_integer(*p.alpha);
        p.valid = p.alpha_ok;
        if (!p.valid) p.note = "alpha not a positive integer";
        return p;
    }
    throw ArgumentError("d_perp_min must be 4, 6 or 8");
}

namespace {

RatPoly N() { return RatPoly::n(); }
RatPoly D() { return RatPoly::d(); }
RatPoly Q(long a, long b = 1) { return RatPoly(ratio(a, b)); }

XTable build_appendix() {
    const RatPoly n = N(), d = D();
    const RatPoly c6 = binomial(n, 6), c8 = binomial(n, 8);
    const RatPoly m = n - Q(2) * d;
    const RatPoly m6 = binomial(m, 6), m8 = binomial(m, 8);
    auto P = [](const RatPoly& x, unsigned e) { return x.pow(e); };
    XTable t;
    t(1, 1) = Q(-2) * d * (d - n) * (P(m, 2) - n + Q(2));
    t(1, 2) = Q(-1, 4) * (n - Q(2)) * P(n, 2);
    t(2, 1) = Q(8) * P(d, 2) * c6 +
              Q(1, 12) * (n - Q(1)) * n *
                  (Q(-24) * m6 + Q(16) * P(d, 5) - Q(32) * P(d, 4) * n + Q(24) * P(d, 4) +
                   Q(24) * P(d, 3) * P(n, 2) - Q(48) * P(d, 3) * n + Q(60) * P(d, 3) - Q(8) * P(d, 2) * P(n, 3) +
                   Q(30) * P(d, 2) * P(n, 2) - Q(62) * P(d, 2) * n + Q(12) * P(d, 2) + d * P(n, 4) -
                   Q(6) * d * P(n, 3) + Q(17) * d * P(n, 2) - Q(12) * d * n + Q(8) * d) -
              Q(8) * d * n * c6 + Q(2) * P(n, 2) * c6 - Q(2) * n * c6;
    t(2, 2) = Q(1, 48) * (n - Q(1)) * n * (P(n, 3) - Q(6) * P(n, 2) + Q(8) * n) - n * c6;
    t(3, 1) = Q(1, 12) *
              (Q(-16) * P(d, 6) * c6 + Q(32) * P(d, 5) * n * c6 - Q(16) * P(d, 5) * c6 - Q(32) * P(d, 5) * c8 -
               Q(24) * P(d, 4) * P(n, 2) * c6 + Q(24) * P(d, 4) * n * c6 - Q(38) * P(d, 4) * c6 +
               Q(64) * P(d, 4) * n * c8 - Q(48) * P(d, 4) * c8 + Q(8) * P(d, 3) * P(n, 3) * c6 -
               Q(8) * P(d, 3) * P(n, 2) * c6 - Q(48) * P(d, 3) * P(n, 2) * c8 + Q(16) * P(d, 3) * n * c6 +
               Q(52) * P(d, 3) * c6 + Q(96) * P(d, 3) * n * c8 - Q(120) * P(d, 3) * c8 -
               P(d, 2) * P(n, 4) * c6 - Q(2) * P(d, 2) * P(n, 3) * c6 + Q(16) * P(d, 2) * P(n, 3) * c8 +
               Q(13) * P(d, 2) * P(n, 2) * c6 - Q(60) * P(d, 2) * P(n, 2) * c8 - Q(58) * P(d, 2) * n * c6 +
               Q(6) * P(d, 2) * c6 + Q(124) * P(d, 2) * n * c8 - Q(24) * P(d, 2) * c8 + d * P(n, 4) * c6 -
               Q(2) * d * P(n, 4) * c8 - Q(6) * d * P(n, 3) * c6 + Q(12) * d * P(n, 3) * c8 +
               Q(19) * d * P(n, 2) * c6 - Q(34) * d * P(n, 2) * c8 - Q(14) * d * n * c6 + Q(12) * d * c6 +
               Q(24) * d * n * c8 - Q(16) * d * c8 + Q(48) * d * c6 * m6 + Q(48) * c8 * m6 - Q(48) * c6 * m8);
    t(3, 2) = Q(1, 192) * (-P(n, 4) * c6 + Q(12) * P(n, 3) * c6 - Q(8) * P(n, 3) * c8 - Q(44) * P(n, 2) * c6 +
                           Q(48) * P(n, 2) * c8 + Q(48) * n * c6 - Q(64) * n * c8);
    return t;
}

}  // namespace

const XTable& tabulated_x_table() {
    static const XTable t = build_appendix();
    return t;
}

RatPoly xij(int i, int j) {
    if (i < 1 || i > 3 || j < 1 || j > 2) throw ArgumentError("X_ij needs 1 <= i <= 3, 1 <= j <= 2");
    return tabulated_x_table()(i, j);
}

std::array<RatPoly, 3> constraint_lhs(int i) {
    if (i < 1 || i > 4) throw ArgumentError("equation index must be 1..4");
    const RatPoly n = N(), d = D();
    const RatPoly m = n - Q(2) * d;
    const RatPoly half = Q(1, 2) * n;
    RatPoly a;
    for (int j = 0; j <= i; ++j) {
        RatPoly term = binomial(d, static_cast<unsigned>(i - j)) * binomial(m, static_cast<unsigned>(2 * j));
        if ((i - j) & 1)
            a -= term;
        else
            a += term;
    }
    RatPoly b = binomial(half, static_cast<unsigned>(i));
    if (i & 1) b = -b;
    return {Q(2) * a, b, Q(2) * binomial(n, static_cast<unsigned>(2 * i))};
}

XTable elimination_x_table() {
    const RatPoly n = N();
    const auto L1 = constraint_lhs(1), L2 = constraint_lhs(2), L3 = constraint_lhs(3), L4 = constraint_lhs(4);
    const RatPoly c6 = binomial(n, 6), c8 = binomial(n, 8);
    auto combine = [](const RatPoly& p, const std::array<RatPoly, 3>& A, const RatPoly& q,
                      const std::array<RatPoly, 3>& B) {
        return std::array<RatPoly, 3>{p * A[0] - q * B[0], p * A[1] - q * B[1], p * A[2] - q * B[2]};
    };
    const auto r1 = combine(Q(1, 2) * (n - Q(2)) * (n - Q(3)), L1, Q(6), L2);
    const auto r2 = combine(Q(2) * c6, L1, n * (n - Q(1)), L3);
    const auto r3 = combine(c8, L3, c6, L4);
    for (const auto* r : {&r1, &r2, &r3})
        if (!(*r)[2].is_zero()) throw Error("elimination left a constant term");
    XTable t;
    t(1, 1) = r1[0];
    t(1, 2) = r1[1];
    t(2, 1) = r2[0];
    t(2, 2) = r2[1];
    t(3, 1) = r3[0];
    t(3, 2) = r3[1];
    return t;
}

RatPoly det1_product() {
    const RatPoly n = N(), d = D();
    return d * (n - d) * (n - Q(2)) * (n - Q(1)) * n.pow(3) * (n - Q(2) * d).pow(2) *
           (n.pow(2) - (Q(4) * d + Q(3)) * n + Q(4) * d.pow(2) + Q(8));
}

RatPoly det2_product() {
    const RatPoly n = N(), d = D();
    const RatPoly quartic = n.pow(4) - (Q(15) + Q(8) * d) * n.pow(3) +
                            Q(4) * (Q(25) + Q(3) * d * (Q(5) + Q(2) * d)) * n.pow(2) -
                            Q(4) * (Q(60) + d * (Q(70) + d * (Q(15) + Q(8) * d))) * n +
                            Q(8) * (Q(53) + Q(35) * d.pow(2) + Q(2) * d.pow(4));
    return d * (n - d) * (n - Q(5)) * (n - Q(4)) * (n - Q(3)) * (n - Q(2)).pow(2) * (n - Q(1)) * n.pow(3) *
           (n - Q(2) * d).pow(2) * quartic;
}

namespace {

IdentityCheck check_identity(std::string name, const RatPoly& det, const RatPoly& product) {
    IdentityCheck r;
    r.name = std::move(name);
    const auto& [e, c] = *product.terms().rbegin();
    r.constant = det.coeff(e.first, e.second) / c;
    r.difference = det - product * RatPoly(r.constant);
    r.pass = sgn(r.constant) != 0 && r.difference.is_zero();
    std::mt19937_64 rng(20240521);
    std::uniform_int_distribution<long> dist(-1000, 1000);
    r.spot_check = sgn(r.constant) != 0;
    for (int i = 0; i < 50 && r.spot_check; ++i) {
        const Rat n0 = dist(rng), d0 = dist(rng);
        if (det.evaluate_at(n0, d0) != r.constant * product.evaluate_at(n0, d0)) r.spot_check = false;
    }
    return r;
}

// Constant lambda with a = lambda * b for both entries of a row, if any.
std::optional<Rat> row_ratio(const RatPoly& a1, const RatPoly& a2, const RatPoly& b1, const RatPoly& b2) {
    if (b1.is_zero()) return std::nullopt;
    const auto& [e, c] = *b1.terms().begin();
    const Rat lambda = a1.coeff(e.first, e.second) / c;
    const RatPoly L(lambda);
    if (a1 == b1 * L && a2 == b2 * L) return lambda;
    return std::nullopt;
}

}  // namespace

bool DetReport::all_pass() const {
    for (const auto& i : identities)
        if (!i.pass || !i.spot_check) return false;
    for (const auto& r : elimination_ratio)
        if (!r) return false;
    return true;
}

DetReport verify_det_identities(const XTable& t) {
    DetReport rep;
    const RatPoly det1 = t(1, 1) * t(2, 2) - t(1, 2) * t(2, 1);
    const RatPoly det2 = t(1, 1) * t(3, 2) - t(1, 2) * t(3, 1);
    rep.identities.push_back(check_identity("det(X11,X12;X21,X22) ~ d(n-d)(n-2)(n-1)n^3(n-2d)^2(n^2-(4d+3)n+4d^2+8)",
                                            det1, det1_product()));
    rep.identities.push_back(check_identity(
        "det(X11,X12;X31,X32) ~ d(n-d)(n-5)(n-4)(n-3)(n-2)^2(n-1)n^3(n-2d)^2*quartic", det2, det2_product()));
    const XTable e = elimination_x_table();
    for (int i = 1; i <= 3; ++i)
        rep.elimination_ratio[static_cast<std::size_t>(i - 1)] = row_ratio(e(i, 1), e(i, 2), t(i, 1), t(i, 2));
    return rep;
}

Int quad_d_perp8(const Int& n, const Int& d) { return n * n - (4 * d + 3) * n + 4 * d * d + 8; }

}  // namespace amkit
