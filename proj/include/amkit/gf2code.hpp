#pragma once

#include "amkit/bigint.hpp"
#include "amkit/bitvec.hpp"
#include "amkit/kernels.hpp"
#include "amkit/poly.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace amkit {

/// Binary [n,k] linear code. The generator is kept in reduced row echelon
/// form with increasing pivot columns, so two codes are equal iff their
/// generators are.
class BinaryCode {
public:
    /// Row-reduces `rows`; dependent rows drop out. All rows must have length n.
    BinaryCode(std::size_t n, std::vector<BitVec> rows);

    static BinaryCode zero(std::size_t n) { return BinaryCode(n, {}); }
    static BinaryCode full(std::size_t n);

    std::size_t length() const noexcept { return n_; }
    std::size_t dimension() const noexcept { return rows_.size(); }
    const std::vector<BitVec>& generator() const noexcept { return rows_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
    bool contains_all_ones() const noexcept { return has_ones_; }

    bool contains(const BitVec& v) const;
    PackedRows packed() const { return pack_rows(n_, rows_); }

    /// One '0'/'1' line per generator row.
    std::string to_text() const;

    friend bool operator==(const BinaryCode& a, const BinaryCode& b) {
        return a.n_ == b.n_ && a.rows_ == b.rows_;
    }

private:
    std::size_t n_;
    std::vector<BitVec> rows_;
    std::vector<std::size_t> pivots_;
    bool has_ones_ = false;
};

/// Generator-matrix text: one row of '0'/'1' per line; blank lines and lines
/// starting with '#' are skipped.
BinaryCode parse_code(const std::string& text);
BinaryCode read_code_file(const std::string& path);

BinaryCode dual_code(const BinaryCode& c);

enum class WdMethod { automatic, direct, dual };

struct EnumOptions {
    std::size_t cap = 28;  // largest dimension we are willing to enumerate
    Exec exec = Exec::parallel;
    WdMethod method = WdMethod::automatic;
};

struct WeightDistribution {
    std::vector<Int> counts;  // A_0 .. A_n

    std::size_t length() const noexcept { return counts.size() - 1; }
    const Int& operator[](std::size_t w) const { return counts.at(w); }
    HomPoly2 enumerator() const { return HomPoly2::from_counts(counts); }
    std::vector<std::size_t> nonzero_weights() const;

    friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

/// Enumerates whichever of C, C-perp is smaller (MacWilliams for the dual
/// side) unless `opt.method` forces one.
WeightDistribution weight_distribution(const BinaryCode& c, const EnumOptions& opt = {});

std::size_t minimum_distance(const BinaryCode& c, const EnumOptions& opt = {});

/// Codewords of weight w, sorted (first coordinate most significant).
std::vector<BitVec> codewords_of_weight(const BinaryCode& c, std::size_t w, const EnumOptions& opt = {});

/// All 2^k codewords in Gray-code order. Test and small-code helper.
std::vector<BitVec> all_codewords(const BinaryCode& c, const EnumOptions& opt = {});

}  // namespace amkit
