#include "amkit/error.hpp"
#include "amkit/gf2code.hpp"
#include "amkit/poly.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace amkit;

namespace {

HomPoly2 P(std::vector<long> c) {
    std::vector<Rat> r(c.begin(), c.end());
    return HomPoly2(r);
}

// (a x + b y)^j by repeated convolution, independent of substitute_linear.
HomPoly2 lin_pow(long a, long b, std::size_t j) {
    HomPoly2 r = P({1});
    for (std::size_t i = 0; i < j; ++i) r = r * P({a, b});
    return r;
}

}  // namespace

TEST_CASE("substitute_linear examples") {
    const HomPoly2 p = P({1, 0, 0, 1});  // x^3 + y^3
    // dual of the [3,1] repetition code, read off by enumeration
    const auto dual = dual_code(parse_code("111"));
    const auto want = HomPoly2::from_counts(weight_distribution(dual).counts);
    CHECK(substitute_linear(p, {1, 1, 1, -1}, Rat(1, 2)) == want);
    CHECK(want == P({1, 0, 3, 0}));

    CHECK(substitute_linear(p, {1, 0, 0, 1}) == p);

    // x^2 y^2 -> (x+y)^2 (x-y)^2, expanded by convolution
    const HomPoly2 q = HomPoly2::monomial(4, 2);
    CHECK(substitute_linear(q, {1, 1, 1, -1}) == lin_pow(1, 1, 2) * lin_pow(1, -1, 2));
    CHECK(substitute_linear(q, {1, 1, 1, -1}) == P({1, 0, -2, 0, 1}));
}

TEST_CASE("substitute_linear against convolution on random inputs") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> c(-5, 5);
    for (int it = 0; it < 40; ++it) {
        const std::size_t N = rng() % 7;
        std::vector<long> co(N + 1);
        for (auto& x : co) x = c(rng);
        const long a = c(rng), b = c(rng), cc = c(rng), e = c(rng);
        HomPoly2 want(N);
        for (std::size_t i = 0; i <= N; ++i) want += (lin_pow(a, b, N - i) * lin_pow(cc, e, i)) * Rat(co[i]);
        CHECK(substitute_linear(P(co), {a, b, cc, e}, 1) == want);
        CHECK(substitute_linear(P(co), {a, b, cc, e}, Rat(3, 7)) == want * Rat(3, 7));
    }
}

TEST_CASE("macwilliams examples") {
    CHECK(macwilliams(P({1, 0, 0, 1}), 1) == P({1, 0, 3, 0}));
    const auto g = read_code_file(oracle::data_path("golay24.gen"));
    const auto w = weight_distribution(g).enumerator();
    CHECK(macwilliams(w, 12) == w);
    for (std::size_t n : {1u, 5u, 9u}) {
        const auto full = lin_pow(1, 1, n);
        CHECK(macwilliams(full, n) == HomPoly2::monomial(n, 0));
    }
}

TEST_CASE("macwilliams rejects inconsistent input") {
    // right total, but the transform has a negative coefficient
    CHECK_THROWS_AS(macwilliams(P({0, 1, 1}), 1), IntegralityError);
    // right total, fractional transform
    CHECK_THROWS_AS(macwilliams(P({1, 3, 0}), 2), IntegralityError);
    CHECK_THROWS_AS(macwilliams(P({1, 0, 1}), 2), ArgumentError);
}

TEST_CASE("macwilliams involution on random codes") {
    std::mt19937_64 rng(37);
    for (int it = 0; it < 60; ++it) {
        const std::size_t n = 1 + rng() % 14;
        const auto c = oracle::random_code(rng, n, rng() % (n + 1));
        const std::size_t k = c.dimension();
        const auto w = weight_distribution(c).enumerator();
        const auto wd = macwilliams(w, k);
        CHECK(wd.evaluate(1, 1) == Rat(pow2(n - k)));
        CHECK(macwilliams(wd, n - k) == w);
        const auto brute = oracle::distribution(oracle::dual_span(oracle::span(c), n), n);
        for (std::size_t i = 0; i <= n; ++i) CHECK(wd.coeff(i) == Rat(Int(static_cast<unsigned long>(brute[i]))));
    }
}

TEST_CASE("HomPoly2 arithmetic") {
    CHECK_THROWS_AS(P({1, 2}) + P({1, 2, 3}), ArgumentError);
    CHECK((P({1, 1}) * P({1, -1})) == P({1, 0, -1}));
    CHECK(P({0, 0}).is_zero());
    CHECK(P({1, 2, 3}).evaluate(2, 3) == 4 + 2 * 6 + 3 * 9);
    CHECK(P({1, 0, 3}).to_string() == "1*x^2 + 3*y^2");
    CHECK(HomPoly2(std::vector<Rat>{Rat(1, 2)}).is_integral() == false);
}

TEST_CASE("RatPoly evaluation of the tabulated X11, X12") {
    const RatPoly n = RatPoly::n(), d = RatPoly::d();
    const RatPoly x11 = RatPoly(-2) * d * (d - n) * ((n - RatPoly(2) * d).pow(2) - n + RatPoly(2));
    const RatPoly x12 = RatPoly(Rat(-1, 4)) * (n - RatPoly(2)) * n.pow(2);
    CHECK(x11.evaluate_at(24, 8) == 10752);
    CHECK(x12.evaluate_at(24, 8) == -3168);
    CHECK((x11 - x11).is_zero());
    CHECK(x11 - x11 == RatPoly());
}

TEST_CASE("RatPoly ring laws on random polynomials") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<long> c(-9, 9);
    auto rnd = [&] {
        RatPoly p;
        for (int i = 0; i < 6; ++i)
            p += RatPoly::monomial(ratio(c(rng), static_cast<long>(1 + rng() % 4)), static_cast<unsigned>(rng() % 4), static_cast<unsigned>(rng() % 4));
        return p;
    };
    for (int it = 0; it < 50; ++it) {
        const RatPoly a = rnd(), b = rnd(), e = rnd();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + e == a + (b + e));
        CHECK((a * b) * e == a * (b * e));
        CHECK(a * (b + e) == a * b + a * e);
        CHECK((a - a).is_zero());
        const Rat n0(c(rng)), d0 = ratio(c(rng), 3);
        CHECK((a * b).evaluate_at(n0, d0) == a.evaluate_at(n0, d0) * b.evaluate_at(n0, d0));
        const RatPoly ab = a * b;
        for (const auto& [ex, co] : ab.terms()) CHECK(sgn(co) != 0);
    }
}

TEST_CASE("RatPoly binomial matches integer binomials") {
    const RatPoly n = RatPoly::n();
    for (unsigned r : {0u, 1u, 4u, 8u}) {
        const RatPoly b = binomial(n, r);
        for (long v = 0; v < 30; ++v) CHECK(b.evaluate_at(v, 0) == Rat(binomial(v, static_cast<long>(r))));
    }
    CHECK(RatPoly::n().to_string() == "n");
    CHECK(RatPoly(Rat(-1, 2)).to_string() == "-1/2");
}
