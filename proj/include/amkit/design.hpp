#pragma once

#include "amkit/bigint.hpp"
#include "amkit/gf2code.hpp"
#include "amkit/harmonic.hpp"
#include "amkit/kernels.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace amkit {

/// Points are 0..v-1. Blocks are sorted point lists, kept in sorted order,
/// pairwise distinct, all of the same positive size.
class BlockDesign {
public:
    BlockDesign(std::size_t v, std::vector<std::vector<int>> blocks);

    std::size_t points() const noexcept { return v_; }
    std::size_t block_size() const noexcept { return kb_; }
    std::size_t block_count() const noexcept { return blocks_.size(); }
    const std::vector<std::vector<int>>& blocks() const noexcept { return blocks_; }

    bool is_complete() const;  // all kB-subsets present

    friend bool operator==(const BlockDesign&, const BlockDesign&) = default;

private:
    std::size_t v_, kb_;
    std::vector<std::vector<int>> blocks_;
};

/// "v=<int>" then one block per line, 1-based points.
BlockDesign parse_design(const std::string& text);
BlockDesign read_design_file(const std::string& path);

/// Number of blocks containing each t-subset. Dense (colex-indexed) when
/// C(v,t) is small enough, else a sparse map of the nonzero entries.
struct SubsetCounts {
    std::size_t v = 0, t = 0;
    std::uint64_t total = 0;  // C(v, t)
    std::vector<std::uint64_t> dense;
    std::map<std::uint64_t, std::uint64_t> sparse;
    bool is_dense() const noexcept { return !dense.empty() || total == 0; }
    std::uint64_t at(std::uint64_t rank) const;
};

SubsetCounts count_t_subsets(const BlockDesign& d, std::size_t t, Exec exec = Exec::parallel);

struct DesignCheck {
    struct Witness {
        std::vector<int> a;
        std::uint64_t count_a;
        std::vector<int> b;
        std::uint64_t count_b;
    };
    bool is_design = false;
    Int lambda = 0;  // valid when is_design
    std::optional<Witness> witness;
};

DesignCheck is_t_design_direct(const BlockDesign& d, std::size_t t, Exec exec = Exec::parallel);

using BasisProvider = std::function<const std::vector<HarmonicFn>&(std::size_t n, std::size_t k)>;

/// Delsarte's criterion: sum over blocks of f~ vanishes for every f in a
/// basis of Harm_k, 1 <= k <= t.
bool is_t_design_harmonic(const BlockDesign& d, std::size_t t, const BasisProvider& basis = cached_harm_basis);

/// Largest t <= min(kB, max_t) such that d is a t-design.
std::size_t design_strength(const BlockDesign& d, std::size_t max_t = SIZE_MAX, Exec exec = Exec::parallel);

/// Blocks = supports of the weight-w codewords.
BlockDesign support_design(const BinaryCode& c, std::size_t w, const EnumOptions& opt = {});

struct DesignReport {
    std::map<std::size_t, std::size_t> strength;  // every w > 0 with A_w > 0
    std::size_t delta = 0;                        // min over 0 < w < n
    std::size_t s = 0;                            // max over 0 < w < n

    friend bool operator==(const DesignReport&, const DesignReport&) = default;
};

DesignReport delta_s(const BinaryCode& c, const EnumOptions& opt = {}, std::size_t max_t = SIZE_MAX);

BlockDesign complementary_design(const BlockDesign& d);
bool is_self_complementary(const BlockDesign& d);

/// Blocks through p with p removed; points above p shift down by one.
BlockDesign derived_design(const BlockDesign& d, int p);

std::set<std::size_t> intersection_numbers(const BlockDesign& d, Exec exec = Exec::parallel);

}  // namespace amkit
