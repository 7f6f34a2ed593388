#include "amkit/design.hpp"
#include "amkit/gf2code.hpp"
#include "amkit/harmonic.hpp"
#include "amkit/kernels.hpp"
#include "amkit/search.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace amkit;

namespace {

BinaryCode random_code(std::size_t n, std::size_t k, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::vector<BitVec> rows;
    for (std::size_t i = 0; i < k; ++i) {
        BitVec v(n);
        for (std::size_t j = 0; j < n; ++j)
            if (rng() & 1) v.set(j);
        rows.push_back(v);
    }
    return BinaryCode(n, rows);
}

Exec exec_of(const benchmark::State& s) { return s.range(0) ? Exec::parallel : Exec::serial; }

void BM_weight_counts(benchmark::State& s) {
    const auto p = random_code(96, 22, 1).packed();
    for (auto _ : s) benchmark::DoNotOptimize(kernels::weight_counts(p, exec_of(s)));
    s.SetItemsProcessed(s.iterations() * (std::int64_t{1} << 22));
}
BENCHMARK(BM_weight_counts)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_subset_profile(benchmark::State& s) {
    const auto c = random_code(24, 18, 2);
    EnumOptions opt;
    opt.exec = exec_of(s);
    for (auto _ : s) benchmark::DoNotOptimize(subset_profile(c, 3, opt));
}
BENCHMARK(BM_subset_profile)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_count_t_subsets(benchmark::State& s) {
    const auto g = random_code(24, 12, 3);
    // the middle-weight design of a random [24,12] code
    const auto d = support_design(g, 12);
    for (auto _ : s) benchmark::DoNotOptimize(count_t_subsets(d, 5, exec_of(s)));
}
BENCHMARK(BM_count_t_subsets)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_scan_41(benchmark::State& s) {
    ScanOptions opt;
    opt.exec = exec_of(s);
    for (auto _ : s) benchmark::DoNotOptimize(scan(Case::c41, 10000, opt));
}
BENCHMARK(BM_scan_41)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
