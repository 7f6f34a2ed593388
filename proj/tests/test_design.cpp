#include "amkit/design.hpp"
#include "amkit/error.hpp"
#include "amkit/gf2code.hpp"
#include "amkit/subsets.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace amkit;

namespace {

BlockDesign fano() { return read_design_file(oracle::data_path("fano.blocks")); }
BlockDesign two_pairs() { return BlockDesign(4, {{0, 1}, {2, 3}}); }
const BinaryCode& golay() {
    static const BinaryCode g = read_code_file(oracle::data_path("golay24.gen"));
    return g;
}

BlockDesign complete(std::size_t v, std::size_t k) {
    std::vector<int> all(v);
    for (std::size_t i = 0; i < v; ++i) all[i] = static_cast<int>(i);
    return BlockDesign(v, oracle::k_subsets(all, k));
}

// Support designs of random codes with n <= 10, plus the fixed examples.
std::vector<BlockDesign> corpus() {
    std::vector<BlockDesign> out = {fano(), two_pairs(), complete(6, 3), complete(5, 2), complete(7, 1)};
    std::mt19937_64 rng(61);
    for (int it = 0; it < 80; ++it) {
        const std::size_t n = 3 + rng() % 8;
        const auto c = oracle::random_code(rng, n, 1 + rng() % (n - 1));
        const auto wd = weight_distribution(c);
        for (auto w : wd.nonzero_weights())
            if (w > 0) out.push_back(support_design(c, w));
    }
    return out;
}

std::size_t brute_lambda(const BlockDesign& d, std::size_t t) {
    return oracle::lambda_table(d.points(), d.blocks(), t).front().second;
}

}  // namespace

TEST_CASE("parse_design") {
    const auto f = fano();
    CHECK(f.points() == 7);
    CHECK(f.block_count() == 7);
    CHECK(f.block_size() == 3);
    CHECK(parse_design("v=4\n1 2\n3 4\n") == two_pairs());
    CHECK(parse_design("v=4\n3 4\n1 2\n") == two_pairs());
    CHECK_THROWS_AS(parse_design(""), ParseError);
    CHECK_THROWS_AS(parse_design("v=4\n1 5\n"), ParseError);
    CHECK_THROWS_AS(parse_design("v=4\n1 2\n1 x\n"), ParseError);
    CHECK_THROWS_AS(parse_design("v=4\n"), ParseError);
    CHECK_THROWS_AS(BlockDesign(4, {{0, 1}, {1, 2, 3}}), ArgumentError);
    try {
        parse_design("v=4\n1 2\n1 x\n");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("is_t_design_direct examples") {
    const auto f = is_t_design_direct(fano(), 2);
    CHECK(f.is_design);
    CHECK(f.lambda == 1);
    CHECK_FALSE(is_t_design_direct(fano(), 3).is_design);

    const auto d8 = support_design(golay(), 8);
    CHECK(d8.block_count() == 759);
    const auto g = is_t_design_direct(d8, 5);
    CHECK(g.is_design);
    CHECK(g.lambda == 1);
    CHECK(Int(759) * binomial(8, 5) == g.lambda * binomial(24, 5));
    CHECK_FALSE(is_t_design_direct(d8, 6).is_design);

    const auto p = is_t_design_direct(two_pairs(), 2);
    CHECK_FALSE(p.is_design);
    REQUIRE(p.witness);
    CHECK(p.witness->a == std::vector<int>{0, 1});
    CHECK(p.witness->count_a == 1);
    CHECK(p.witness->b == std::vector<int>{0, 2});
    CHECK(p.witness->count_b == 0);
    CHECK(is_t_design_direct(two_pairs(), 1).lambda == 1);
    CHECK(is_t_design_direct(two_pairs(), 0).lambda == 2);
    CHECK_THROWS_AS(is_t_design_direct(two_pairs(), 3), ArgumentError);
}

TEST_CASE("t-subset counts match brute force") {
    for (const auto& d : corpus())
        for (std::size_t t = 0; t <= d.block_size(); ++t) {
            const auto tab = oracle::lambda_table(d.points(), d.blocks(), t);
            const auto counts = count_t_subsets(d, t);
            ColexTable T(d.points(), t);
            for (const auto& [s, c] : tab) CHECK(counts.at(T.rank(s)) == c);
            const auto chk = is_t_design_direct(d, t);
            CHECK(chk.is_design == oracle::is_design_brute(d.points(), d.blocks(), t));
            if (chk.is_design) CHECK(chk.lambda == Int(static_cast<unsigned long>(brute_lambda(d, t))));
        }
}

TEST_CASE("is_t_design_harmonic agrees with direct counting") {
    CHECK(is_t_design_harmonic(fano(), 2));
    CHECK(is_t_design_harmonic(two_pairs(), 1));
    CHECK_FALSE(is_t_design_harmonic(two_pairs(), 2));
    for (std::size_t k = 1; k <= 3; ++k) CHECK(is_t_design_harmonic(complete(7, 3), k));
    for (const auto& d : corpus())
        for (std::size_t t = 0; t <= d.block_size(); ++t)
            CHECK(is_t_design_harmonic(d, t) == is_t_design_direct(d, t).is_design);
}

TEST_CASE("design_strength") {
    CHECK(design_strength(support_design(golay(), 8)) == 5);
    CHECK(design_strength(two_pairs()) == 1);
    CHECK(design_strength(BlockDesign(5, {{0, 1, 2, 3, 4}})) == 5);
    CHECK(design_strength(fano()) == 2);
    CHECK(design_strength(fano(), 1) == 1);
    for (const auto& d : corpus()) CHECK(design_strength(d) == oracle::strength_brute(d.points(), d.blocks()));
}

TEST_CASE("support_design") {
    const auto toy = read_code_file(oracle::data_path("toy4.gen"));
    CHECK(support_design(toy, 2) == two_pairs());
    CHECK(support_design(toy, 4) == BlockDesign(4, {{0, 1, 2, 3}}));
    CHECK_THROWS_AS(support_design(toy, 3), EmptyDesignError);
    CHECK(support_design(golay(), 24).block_count() == 1);
}

TEST_CASE("delta_s") {
    const auto g = delta_s(golay());
    CHECK(g.delta == 5);
    CHECK(g.s == 5);
    CHECK(g.strength.at(8) == 5);
    CHECK(g.strength.at(12) == 5);
    CHECK(g.strength.at(16) == 5);
    CHECK(g.strength.at(24) == 24);

    const auto h = delta_s(read_code_file(oracle::data_path("hamming8.gen")));
    CHECK(h.delta == 3);
    CHECK(h.s == 3);

    const auto t = delta_s(read_code_file(oracle::data_path("toy4.gen")));
    CHECK(t.delta == 1);
    CHECK(t.s == 1);

    CHECK_THROWS_AS(delta_s(parse_code("1111")), ArgumentError);
}

TEST_CASE("complementary designs") {
    CHECK(complementary_design(two_pairs()) == two_pairs());
    CHECK(is_self_complementary(two_pairs()));
    const auto d12 = support_design(golay(), 12);
    CHECK(complementary_design(d12) == d12);
    CHECK(complementary_design(support_design(golay(), 8)) == support_design(golay(), 16));
    CHECK_FALSE(is_self_complementary(fano()));
    CHECK_THROWS_AS(complementary_design(BlockDesign(3, {{0, 1, 2}})), EmptyDesignError);
}

TEST_CASE("derived designs") {
    const auto f = derived_design(fano(), 0);
    CHECK(f.points() == 6);
    CHECK(f.block_count() == 3);
    CHECK(f.block_size() == 2);
    const auto fc = is_t_design_direct(f, 1);
    CHECK(fc.is_design);
    CHECK(fc.lambda == 1);

    CHECK(derived_design(BlockDesign(5, {{0, 1, 2, 3, 4}}), 2) == BlockDesign(4, {{0, 1, 2, 3}}));

    const auto g = derived_design(support_design(golay(), 8), 0);
    CHECK(g.block_count() == 253);
    CHECK(g.points() == 23);
    const auto gc = is_t_design_direct(g, 4);
    CHECK(gc.is_design);
    CHECK(gc.lambda == 1);

    CHECK_THROWS_AS(derived_design(BlockDesign(4, {{0, 1}}), 3), EmptyDesignError);
}

TEST_CASE("intersection numbers") {
    CHECK(intersection_numbers(two_pairs()) == std::set<std::size_t>{0});
    CHECK(intersection_numbers(fano()) == std::set<std::size_t>{1});
    CHECK(intersection_numbers(support_design(golay(), 8)) == std::set<std::size_t>{0, 2, 4});
    CHECK(intersection_numbers(derived_design(support_design(golay(), 8), 0)) == std::set<std::size_t>{1, 3});
    CHECK_THROWS_AS(intersection_numbers(BlockDesign(4, {{0, 1}})), ArgumentError);
}

TEST_CASE("property: a derived t-design is a (t-1)-design") {
    for (const auto& d : corpus()) {
        const auto t = design_strength(d);
        if (t == 0 || d.block_size() < 2) continue;
        for (int p = 0; p < static_cast<int>(d.points()); ++p) {
            bool hit = false;
            for (const auto& b : d.blocks()) hit |= std::binary_search(b.begin(), b.end(), p);
            if (!hit) continue;
            CHECK(design_strength(derived_design(d, p)) >= t - 1);
        }
    }
}

TEST_CASE("property: lambda counts are consistent across t") {
    // lambda_s = lambda_t C(v-s, t-s) / C(kB-s, t-s)
    for (const auto& d : corpus()) {
        const auto t = design_strength(d);
        const auto lt = is_t_design_direct(d, t).lambda;
        for (std::size_t s = 0; s < t; ++s) {
            const auto ls = is_t_design_direct(d, s).lambda;
            const long v = static_cast<long>(d.points()), k = static_cast<long>(d.block_size());
            CHECK(ls * binomial(k - static_cast<long>(s), static_cast<long>(t - s)) ==
                  lt * binomial(v - static_cast<long>(s), static_cast<long>(t - s)));
        }
    }
}

TEST_CASE("property: self-complementary designs of even strength") {
    // A non-complete self-complementary 2s-design is a (2s+1)-design, so the
    // observed strength is odd.
    std::size_t seen = 0;
    for (const auto& d : corpus()) {
        if (d.is_complete() || !is_self_complementary(d)) continue;
        ++seen;
        CHECK(design_strength(d) % 2 == 1);
    }
    CHECK(seen > 0);
}

TEST_CASE("property: few intersection numbers bound the strength") {
    std::size_t one = 0, two = 0;
    for (const auto& d : corpus()) {
        if (d.is_complete() || d.block_count() < 2) continue;
        const auto s = intersection_numbers(d).size();
        if (s == 1) {
            ++one;
            CHECK(design_strength(d) <= 2);
        } else if (s == 2) {
            ++two;
            CHECK(design_strength(d) <= 4);
        }
    }
    CHECK(one > 0);
    CHECK(two > 0);
}

TEST_CASE("property: two-weight codes 0, n/2, n") {
    // If D_{n/2} is not a (t+1)-design then no inner dual design is either.
    std::vector<BinaryCode> codes = {read_code_file(oracle::data_path("toy4.gen")),
                                     read_code_file(oracle::data_path("hamming8.gen")),
                                     parse_code("0101010101010101\n0011001100110011\n0000111100001111\n"
                                                "0000000011111111\n1111111111111111\n")};
    for (const auto& c : codes) {
        const std::size_t n = c.length();
        CHECK(weight_distribution(c).nonzero_weights() == std::vector<std::size_t>{0, n / 2, n});
        const auto mid = support_design(c, n / 2);
        const auto t = design_strength(mid);
        CHECK((t == 1 || t == 3));
        const auto dual = dual_code(c);
        const auto dwd = weight_distribution(dual);
        for (std::size_t w = 1; w < n; ++w) {
            if (sgn(dwd[w]) == 0) continue;
            const auto dw = support_design(dual, w);
            if (t + 1 <= dw.block_size()) CHECK_FALSE(is_t_design_direct(dw, t + 1).is_design);
        }
    }
}
