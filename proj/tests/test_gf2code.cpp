#include "amkit/error.hpp"
#include "amkit/gf2code.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace amkit;

TEST_CASE("parse single row") {
    const auto c = parse_code("111");
    CHECK(c.length() == 3);
    CHECK(c.dimension() == 1);
    CHECK(c.contains_all_ones());
}

TEST_CASE("parse [4,2] code and compare with brute-force span") {
    const auto c = parse_code("1100\n1111");
    CHECK(c.dimension() == 2);
    const auto s = oracle::span(c);
    CHECK(s == std::set<std::uint32_t>{0b0000, 0b0011, 0b1100, 0b1111});
}

TEST_CASE("dependent rows reduce the dimension") {
    const auto c = parse_code("110\n011\n101");
    CHECK(c.dimension() == oracle::rank({0b011, 0b110, 0b101}));
    CHECK(c.dimension() == 2);
    CHECK(c == parse_code("110\n011"));
}

TEST_CASE("parse errors carry line numbers") {
    try {
        parse_code("# header\n1100\n\n110\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
    }
    try {
        parse_code("1100\n1x00\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_code(""), ParseError);
    CHECK_THROWS_AS(parse_code("# only a comment\n\n"), ParseError);
    CHECK(parse_code("1100\r\n0011  \r\n").dimension() == 2);
}

TEST_CASE("dual code examples") {
    const auto rep = parse_code("111");
    const auto d = dual_code(rep);
    CHECK(d.dimension() == 2);
    // x1 + x2 + x3 = 0 by enumeration
    CHECK(oracle::span(d) == oracle::dual_span(oracle::span(rep), 3));

    const auto toy = parse_code("1100\n1111");
    CHECK(dual_code(toy) == toy);
    CHECK(oracle::dual_span(oracle::span(toy), 4) == oracle::span(toy));

    const auto z = BinaryCode::zero(5);
    CHECK(dual_code(z) == BinaryCode::full(5));
    CHECK(dual_code(BinaryCode::full(5)) == z);
}

TEST_CASE("random codes: dual, double dual, orthogonality") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 60; ++it) {
        const std::size_t n = 2 + rng() % 11;
        const std::size_t r = rng() % (n + 1);
        const auto c = oracle::random_code(rng, n, r);
        std::vector<std::uint32_t> rows;
        for (const auto& g : c.generator()) rows.push_back(oracle::mask(g));
        CHECK(oracle::rank(rows) == c.dimension());
        const auto d = dual_code(c);
        CHECK(d.dimension() == n - c.dimension());
        CHECK(dual_code(d) == c);
        const auto sc = oracle::span(c);
        const auto sd = oracle::span(d);
        CHECK(sd == oracle::dual_span(sc, n));
        for (auto x : sc)
            for (auto y : sd) CHECK((std::popcount(x & y) % 2) == 0);
    }
}

TEST_CASE("weight distributions of the fixtures") {
    const auto g = read_code_file(oracle::data_path("golay24.gen"));
    CHECK(g.length() == 24);
    CHECK(g.dimension() == 12);
    const auto wd = weight_distribution(g);
    std::vector<Int> want(25, 0);
    want[0] = 1;
    want[8] = 759;
    want[12] = 2576;
    want[16] = 759;
    want[24] = 1;
    CHECK(wd.counts == want);
    CHECK(minimum_distance(g) == 8);
    CHECK(dual_code(g) == g);

    CHECK(weight_distribution(parse_code("111")).counts == std::vector<Int>{1, 0, 0, 1});
    CHECK(minimum_distance(parse_code("111")) == 3);

    const auto h = read_code_file(oracle::data_path("hamming8.gen"));
    CHECK(weight_distribution(h).counts == std::vector<Int>{1, 0, 0, 0, 14, 0, 0, 0, 1});
    CHECK(minimum_distance(parse_code("1100\n1111")) == 2);
}

TEST_CASE("direct and dual-side enumeration agree on random codes") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 80; ++it) {
        const std::size_t n = 1 + rng() % 14;
        const auto c = oracle::random_code(rng, n, rng() % (n + 1));
        EnumOptions direct, dual;
        direct.method = WdMethod::direct;
        dual.method = WdMethod::dual;
        const auto a = weight_distribution(c, direct);
        const auto b = weight_distribution(c, dual);
        CHECK(a == b);
        CHECK(a == weight_distribution(c));
        const auto brute = oracle::distribution(oracle::span(c), n);
        for (std::size_t i = 0; i <= n; ++i) CHECK(a[i] == Int(static_cast<unsigned long>(brute[i])));
    }
}

TEST_CASE("codes containing the all-ones word are symmetric with even dual distance") {
    std::mt19937_64 rng(13);
    int seen = 0;
    for (int it = 0; it < 200 && seen < 30; ++it) {
        const std::size_t n = 4 + rng() % 10;
        auto c = oracle::random_code(rng, n, 1 + rng() % (n - 2));
        auto rows = c.generator();
        rows.push_back(BitVec::ones(n));
        c = BinaryCode(n, rows);
        REQUIRE(c.contains_all_ones());
        if (c.dimension() == n) continue;
        ++seen;
        const auto wd = weight_distribution(c);
        for (std::size_t i = 0; i <= n; ++i) CHECK(wd[i] == wd[n - i]);
        CHECK(minimum_distance(dual_code(c)) % 2 == 0);
    }
    CHECK(seen > 10);
}

TEST_CASE("codewords of a given weight") {
    const auto toy = parse_code("1100\n1111");
    const auto w2 = codewords_of_weight(toy, 2);
    REQUIRE(w2.size() == 2);
    CHECK(w2[0].support() == std::vector<int>{0, 1});
    CHECK(w2[1].support() == std::vector<int>{2, 3});
    const auto w0 = codewords_of_weight(toy, 0);
    REQUIRE(w0.size() == 1);
    CHECK(w0[0].none());
    const auto g = read_code_file(oracle::data_path("golay24.gen"));
    const auto w8 = codewords_of_weight(g, 8);
    CHECK(w8.size() == 759);
    CHECK(std::adjacent_find(w8.begin(), w8.end()) == w8.end());
    CHECK_THROWS_AS(codewords_of_weight(toy, 5), ArgumentError);
}

TEST_CASE("enumeration cap") {
    std::mt19937_64 rng(3);
    const auto c = oracle::random_code(rng, 40, 20);
    EnumOptions small;
    small.cap = 10;
    CHECK_THROWS_AS(weight_distribution(c, small), CapacityError);
    CHECK_THROWS_AS(codewords_of_weight(c, 3, small), CapacityError);
    // a [30,25] code goes through the 5-dimensional dual
    const auto big = oracle::random_code(rng, 30, 25);
    CHECK_NOTHROW(weight_distribution(big, small));
    CHECK_THROWS_AS(minimum_distance(BinaryCode::zero(4)), ArgumentError);
}

TEST_CASE("zero code and trivial codes") {
    const auto z = BinaryCode::zero(6);
    CHECK(weight_distribution(z).counts == std::vector<Int>{1, 0, 0, 0, 0, 0, 0});
    CHECK(z.contains_all_ones() == false);
    const auto f = BinaryCode::full(6);
    CHECK(weight_distribution(f).counts == std::vector<Int>{1, 6, 15, 20, 15, 6, 1});
    CHECK(parse_code(f.to_text()) == f);
}
