#include "amkit/amcore.hpp"
#include "amkit/error.hpp"
#include "amkit/gf2code.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace amkit;

namespace {

// Krawtchouk K_j(w) for length n.
Int kraw(long n, long j, long w) {
    Int s = 0;
    for (long i = 0; i <= j; ++i) {
        const Int t = binomial(w, i) * binomial(n - w, j - i);
        if (i & 1)
            s -= t;
        else
            s += t;
    }
    return s;
}

// 2^k A-perp_{2i} for the distribution 0, d, n/2, n-d, n.
Rat dual_coeff(int i, long n, long d, const Rat& a, const Rat& b) {
    const long j = 2 * i;
    return Rat(kraw(n, j, 0) + kraw(n, j, n)) + a * Rat(kraw(n, j, d) + kraw(n, j, n - d)) + b * Rat(kraw(n, j, n / 2));
}

}  // namespace

TEST_CASE("am_applicability examples") {
    const auto g = am_applicability(read_code_file(oracle::data_path("golay24.gen")));
    CHECK(g.d_perp == 8);
    CHECK(g.t_equality == 5);
    CHECK(g.gap == 3);
    CHECK(g.case_label == "(8,5)");
    CHECK(g.t_inequality == 5);

    const auto h = am_applicability(read_code_file(oracle::data_path("hamming8.gen")));
    CHECK(h.d_perp == 4);
    CHECK(h.t_equality == 3);
    CHECK(h.gap == 1);
    CHECK(h.case_label == "(4,3)");

    const auto toy = am_applicability(read_code_file(oracle::data_path("toy4.gen")));
    CHECK(toy.d_perp == 2);
    CHECK(toy.t_equality == 1);
    CHECK(toy.case_label == "(2,1)");

    const auto rep = am_applicability(parse_code("111"));
    CHECK(rep.d_perp == 2);
    CHECK(rep.t_inequality == 1);
    CHECK_FALSE(rep.t_equality);
    CHECK_FALSE(rep.case_label);

    CHECK_THROWS_AS(am_applicability(BinaryCode::zero(4)), ArgumentError);
    CHECK_THROWS_AS(am_applicability(BinaryCode::full(4)), ArgumentError);
}

TEST_CASE("am_status against the counting definition") {
    std::mt19937_64 rng(71);
    for (int it = 0; it < 100; ++it) {
        const std::size_t n = 3 + rng() % 10;
        const auto c = oracle::random_code(rng, n, 1 + rng() % (n - 1));
        if (c.dimension() == 0 || c.dimension() == n) continue;
        const auto words = oracle::span(c);
        const auto dist = oracle::distribution(words, n);
        const auto dual = oracle::distribution(oracle::dual_span(words, n), n);
        std::size_t dp = 1;
        while (dual[dp] == 0) ++dp;
        const auto st = am_applicability(c);
        CHECK(st.d_perp == dp);
        auto count = [&](std::size_t t) {
            std::size_t k = 0;
            for (std::size_t u = 1; u + t <= n; ++u) k += dist[u] != 0;
            return k;
        };
        std::optional<std::size_t> eq;
        std::size_t ineq = 0;
        for (std::size_t t = 1; t < dp; ++t) {
            if (count(t) <= dp - t) ineq = t;
            if (count(t) == dp - t) eq = t;
        }
        CHECK(st.t_inequality == ineq);
        CHECK(st.t_equality == eq);
        if (eq) CHECK(st.gap == dp - *eq);
    }
}

TEST_CASE("classify_main1") {
    CHECK(classify_main1(4, 3) == "(4,3)");
    CHECK(classify_main1(2, 1) == "(2,1)");
    CHECK(classify_main1(6, 4) == "excluded-by-theorem");
    CHECK(classify_main1(8, 5) == "(8,5)");
    CHECK(classify_main1(10, 7) == "excluded-by-theorem");
    CHECK_THROWS_AS(classify_main1(8, 4), OutOfScopeError);
    CHECK_THROWS_AS(classify_main1(3, 3), OutOfScopeError);
    const std::set<std::pair<long, long>> ok = {{2, 1}, {4, 3}, {4, 2}, {4, 1}, {6, 3}, {8, 5}};
    for (long dp = 1; dp <= 20; ++dp)
        for (long t = 0; t <= dp + 1; ++t) {
            const long g = dp - t;
            if (g < 1 || g > 3) {
                CHECK_THROWS_AS(classify_main1(dp, t), OutOfScopeError);
                continue;
            }
            const auto s = classify_main1(dp, t);
            CHECK((s != "excluded-by-theorem") == ok.count({dp, t}));
        }
}

TEST_CASE("constraint residuals") {
    CHECK(constraint_residual(1, 24, 8, 759, 2576) == 0);
    CHECK(constraint_residual(2, 24, 8, 759, 2576) == 0);
    CHECK(constraint_residual(3, 24, 8, 759, 2576) == 0);
    CHECK(constraint_residual(4, 24, 8, 759, 2576) != 0);
    CHECK(constraint_residual(1, 24, 8, 1, 1) != 0);
    CHECK_THROWS_AS(constraint_residual(1, 24, 12, 1, 1), ArgumentError);

    std::mt19937_64 rng(72);
    for (int it = 0; it < 200; ++it) {
        const long n = 2 * (3 + static_cast<long>(rng() % 40));
        const long d = 1 + static_cast<long>(rng() % static_cast<unsigned long>(n / 2 - 1));
        const Rat a = ratio(static_cast<long>(rng() % 1000) - 500, 1 + static_cast<long>(rng() % 5));
        const Rat b = ratio(static_cast<long>(rng() % 1000) - 500, 1 + static_cast<long>(rng() % 5));
        for (int i = 1; i <= 4; ++i) CHECK(constraint_residual(i, n, d, a, b) == dual_coeff(i, n, d, a, b));
    }

    const auto cs = constraint_system(24, 8, 759, 2576);
    CHECK(cs.k == 12);
    CHECK(cs.residuals[0] == 0);
    CHECK(cs.residuals[2] == 0);
}

TEST_CASE("five-weight distributions of real codes satisfy the constraints") {
    // [8,7] even-weight code: 0,2,4,6,8 with alpha = 28, beta = 70 and
    // dual {0, 1}, so the first three dual coefficients vanish.
    CHECK(constraint_residual(1, 8, 2, 28, 70) == 0);
    CHECK(constraint_residual(2, 8, 2, 28, 70) == 0);
    CHECK(constraint_residual(3, 8, 2, 28, 70) == 0);
    CHECK(constraint_residual(4, 8, 2, 28, 70) == Rat(pow2(7)));
}

TEST_CASE("solve_weight_params") {
    const auto g = solve_weight_params(24, 0, 8);
    CHECK(g.d == 8);
    CHECK(g.alpha == Rat(759));
    CHECK(g.beta == Rat(2576));
    CHECK(g.valid);
    CHECK(g.k == 12);

    const auto e = solve_weight_params(8, 0, 8);
    CHECK(e.d == 2);
    CHECK(e.alpha == Rat(28));
    CHECK(e.beta == Rat(70));

    CHECK(solve_weight_params(10, 0, 8).note == "no valid d");

    const auto six = solve_weight_params(24, 8, 6);
    CHECK(six.alpha == Rat(759));
    CHECK(six.valid);
    CHECK(alpha_dperp6(24, 8) == ratio(Int(-576 * 23 * 22), Int(64 * (576 - 35 * 24 + 256 + 2))));
    CHECK(alpha_dperp6(10, 2) == ratio(Int(-100 * 9 * 8), Int(36 * (100 - 110 + 16 + 2))));

    const auto four = solve_weight_params(24, 8, 4, 12);
    CHECK(four.alpha == Rat(759));
    CHECK(four.valid);
    CHECK_THROWS_AS(solve_weight_params(24, 12, 4), ArgumentError);
    CHECK_THROWS_AS(solve_weight_params(24, 8, 5), ArgumentError);
}

TEST_CASE("dimension_for_alpha by direct search") {
    for (long n = 6; n <= 120; n += 2)
        for (long d = 1; 2 * d < n; ++d) {
            std::optional<long> want;
            const Int m = n - 2 * d;
            for (long k = 2; k <= n - 1 && !want; ++k) {
                const Int num = Int(n) * (pow2(static_cast<unsigned long>(k - 1)) - n);
                if (num > 0 && num % (m * m) == 0) want = k;
            }
            CHECK(dimension_for_alpha(n, d) == want);
        }
    CHECK(dimension_for_alpha(24, 8) == 6);
}

TEST_CASE("X table values") {
    CHECK(xij(1, 1).evaluate_at(24, 8) == 10752);
    CHECK(xij(1, 2).evaluate_at(24, 8) == -3168);
    CHECK(xij(1, 1).evaluate_at(24, 8) * 759 + xij(1, 2).evaluate_at(24, 8) * 2576 == 0);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 2; ++j) {
            CHECK(xij(i, j) == tabulated_x_table()(i, j));
        }
    CHECK_THROWS(xij(4, 1));
}

TEST_CASE("determinant identities") {
    const auto r = verify_det_identities();
    REQUIRE(r.identities.size() == 2);
    CHECK(r.all_pass());
    CHECK(r.identities[0].constant == Rat(1, 360));
    CHECK(r.identities[1].constant == Rat(1, 7257600));
    for (const auto& id : r.identities) {
        CHECK(id.difference.is_zero());
        CHECK(id.spot_check);
    }
    CHECK(r.elimination_ratio[0] == Rat(1));
    CHECK(r.elimination_ratio[1] == Rat(1));
    CHECK(r.elimination_ratio[2] == Rat(1, 2));

    auto bad = tabulated_x_table();
    bad(1, 1) += RatPoly::n();
    const auto m = verify_det_identities(bad);
    CHECK_FALSE(m.all_pass());
    bool some_nonzero = false;
    for (const auto& id : m.identities) some_nonzero |= !id.difference.is_zero();
    CHECK(some_nonzero);
}

TEST_CASE("quad_d_perp8") {
    CHECK(quad_d_perp8(24, 8) == 0);
    CHECK(quad_d_perp8(16, 4) == 24);
    CHECK(quad_d_perp8(0, 0) == 8);
    for (long n = 1; n < 50; ++n)
        for (long d = 0; d < n; ++d) CHECK(quad_d_perp8(n, d) == Int(n * n - (4 * d + 3) * n + 4 * d * d + 8));
}
