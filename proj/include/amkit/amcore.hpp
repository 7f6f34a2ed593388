#pragma once

#include "amkit/bigint.hpp"
#include "amkit/gf2code.hpp"
#include "amkit/poly.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace amkit {

struct AmStatus {
    std::size_t d_perp = 0;
    std::size_t t_inequality = 0;  // 0 when no positive t satisfies the bound
    std::optional<std::size_t> t_equality;
    std::optional<std::size_t> gap;  // d_perp - t_equality
    std::optional<std::string> case_label;

    friend bool operator==(const AmStatus&, const AmStatus&) = default;
};

/// Number of nonzero weights u <= n - t with A_u > 0.
std::size_t weights_up_to(const WeightDistribution& wd, std::size_t t);

AmStatus am_applicability(const BinaryCode& c, const EnumOptions& opt = {});
/// Same, from already computed data.
AmStatus am_status(const WeightDistribution& wd, std::size_t d_perp);

/// "(d_perp,t)" for the admissible pairs, "excluded-by-theorem" otherwise.
/// Throws OutOfScopeError unless d_perp - t is 1, 2 or 3.
std::string classify_main1(long d_perp, long t);

/// Coefficient constraint i for a code with distribution 0, d, n/2, n-d, n:
/// 2a sum_j (-1)^(i-j) C(d,i-j) C(n-2d,2j) + (-1)^i b C(n/2,i) + 2 C(n,2i).
Rat constraint_residual(int i, long n, long d, const Rat& alpha, const Rat& beta);

struct ConstraintSystem {
    long n = 0, d = 0;
    Rat alpha, beta;
    std::array<Rat, 4> residuals;            // i = 1..4
    std::optional<std::size_t> k;            // when 2a + b + 2 = 2^k
};

ConstraintSystem constraint_system(long n, long d, const Rat& alpha, const Rat& beta);

struct WeightParams {
    int d_perp_min = 0;
    long n = 0;
    std::optional<long> d;        // derived for d_perp_min = 8
    std::optional<long> k;
    std::optional<Rat> alpha;
    bool alpha_ok = false;        // positive integer
    std::optional<Rat> beta;
    bool beta_ok = false;
    bool valid = false;           // every verdict that applies holds
    std::string note;
};

/// Integrality checks on alpha (and beta) for d_perp >= 4, 6 or 8. For
/// d_perp_min = 4 without k, the smallest admissible 2 <= k <= n-1 is used.
WeightParams solve_weight_params(long n, long d, int d_perp_min, std::optional<long> k = std::nullopt);

/// Smallest k in [2, n-1] with n(2^(k-1) - n) / (n-2d)^2 a positive integer.
std::optional<long> dimension_for_alpha(long n, long d);

/// alpha = -n^2(n-1)(n-2) / ((n-2d)^2 (n^2-(4d+3)n+4d^2+2)), forced when
/// d_perp >= 6; nullopt when the denominator vanishes.
std::optional<Rat> alpha_dperp6(long n, long d);

struct XTable {
    std::array<std::array<RatPoly, 2>, 3> x;
    const RatPoly& operator()(int i, int j) const { return x.at(i - 1).at(j - 1); }
    RatPoly& operator()(int i, int j) { return x.at(i - 1).at(j - 1); }
};

/// X_ij as tabulated (binomials expanded).
const XTable& tabulated_x_table();
RatPoly xij(int i, int j);

/// Rows obtained by eliminating constant terms from the coefficient
/// equations directly.
XTable elimination_x_table();

/// Left-hand side of equation i (1..4) as alpha-, beta- and constant parts.
std::array<RatPoly, 3> constraint_lhs(int i);

RatPoly det1_product();
RatPoly det2_product();

struct IdentityCheck {
    std::string name;
    bool pass = false;
    Rat constant;             // det = constant * product
    RatPoly difference;       // det - constant * product
    bool spot_check = false;  // 50 random integer points agree
};

struct DetReport {
    std::vector<IdentityCheck> identities;
    std::array<std::optional<Rat>, 3> elimination_ratio;  // elimination row = ratio * table row
    bool all_pass() const;
};

DetReport verify_det_identities(const XTable& table = tabulated_x_table());

Int quad_d_perp8(const Int& n, const Int& d);

}  // namespace amkit
