#pragma once

// Data-parallel inner loops. Every kernel has a serial reference path and an
// OpenMP path selected by `Exec`; the two must agree exactly, and the tests
// hold them to that.

#include "amkit/bitvec.hpp"

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include <omp.h>

namespace amkit {

enum class Exec { serial, parallel };

/// Generator rows stored contiguously, `words` 64-bit words per row.
struct PackedRows {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t words = 0;
    std::vector<std::uint64_t> data;

    const std::uint64_t* row(std::size_t i) const noexcept { return data.data() + i * words; }
};

PackedRows pack_rows(std::size_t n, const std::vector<BitVec>& rows);

namespace kernels {

inline constexpr unsigned kChunkBits = 14;

/// Walks codewords with index in [first, last) in Gray-code order, calling
/// visit(state, word_ptr, weight). Successive words differ by one row XOR.
template <class State, class Visit>
void walk_gray_range(const PackedRows& g, std::uint64_t first, std::uint64_t last, State& st,
                     Visit& visit) {
    if (first >= last) return;
    const std::size_t W = g.words;
    std::vector<std::uint64_t> acc(W, 0);
    const std::uint64_t gray = first ^ (first >> 1);
    for (std::size_t j = 0; j < g.k; ++j) {
        if ((gray >> j) & 1u) {
            const auto* r = g.row(j);
            for (std::size_t w = 0; w < W; ++w) acc[w] ^= r[w];
        }
    }
    auto weight = [&] {
        unsigned c = 0;
        for (std::size_t w = 0; w < W; ++w) c += static_cast<unsigned>(std::popcount(acc[w]));
        return c;
    };
    visit(st, acc.data(), weight());
    if (W == 1) {
        std::uint64_t a = acc[0];
        for (std::uint64_t i = first + 1; i < last; ++i) {
            a ^= g.row(static_cast<std::size_t>(std::countr_zero(i)))[0];
            visit(st, &a, static_cast<unsigned>(std::popcount(a)));
        }
        return;
    }
    for (std::uint64_t i = first + 1; i < last; ++i) {
        const auto* r = g.row(static_cast<std::size_t>(std::countr_zero(i)));
        for (std::size_t w = 0; w < W; ++w) acc[w] ^= r[w];
        visit(st, acc.data(), weight());
    }
}

/// Order-independent reduction over all 2^k codewords spanned by `g`.
/// `init()` makes an empty state, `visit(state, words, weight)` folds one
/// codeword in, `merge(into, from)` combines per-thread states.
template <class Init, class Visit, class Merge>
auto reduce_codewords(const PackedRows& g, Exec exec, Init init, Visit visit, Merge merge) {
    using State = decltype(init());
    const std::uint64_t total = std::uint64_t{1} << g.k;
    State result = init();
    if (exec == Exec::serial || g.k <= kChunkBits) {
        walk_gray_range(g, 0, total, result, visit);
        return result;
    }
    const std::uint64_t chunk = std::uint64_t{1} << kChunkBits;
    const std::int64_t chunks = static_cast<std::int64_t>(total / chunk);
#pragma omp parallel
    {
        State local = init();
#pragma omp for schedule(dynamic, 4)
        for (std::int64_t c = 0; c < chunks; ++c) {
            const auto first = static_cast<std::uint64_t>(c) * chunk;
            walk_gray_range(g, first, first + chunk, local, visit);
        }
#pragma omp critical(amkit_reduce_codewords)
        merge(result, local);
    }
    return result;
}

/// A_0..A_n as machine counts (exact for k < 64).
std::vector<std::uint64_t> weight_counts(const PackedRows& g, Exec exec);

/// All codewords of weight w, sorted.
std::vector<BitVec> words_of_weight(const PackedRows& g, std::size_t w, Exec exec);

}  // namespace kernels
}  // namespace amkit
