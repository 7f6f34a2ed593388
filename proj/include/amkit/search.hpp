#pragma once

#include "amkit/amcore.hpp"
#include "amkit/bigint.hpp"
#include "amkit/design.hpp"
#include "amkit/gf2code.hpp"
#include "amkit/kernels.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace amkit {

/// sum_{i=0}^{w} (-1)^(w-i) C(d-3, w-i) C(n-2d, 2i+1). Zero certifies that
/// D-perp_{2w+4} is a 3-design when (d_perp, t) = (4, 2).
Int bracket_t13(long w, long n, long d);

/// sum_{i=0}^{w} (-1)^(w-i) C(d-t-1, w-i) C(n-2d, 2i) + (-1)^(w+1) C(n/2-t-1, w).
/// Zero certifies that D-perp_{2w+t+1} is a (t+1)-design for t = 1, 3.
Int bracket_t12(long w, long n, long d, long t);

enum class Case { c41, c63 };

std::string case_token(Case c);  // "4,1" / "6,3"
Case parse_case(const std::string& s);
inline long case_t(Case c) { return c == Case::c41 ? 1 : 3; }
inline long case_dperp(Case c) { return c == Case::c41 ? 4 : 6; }

struct CertifiedWeight {
    long weight;
    std::vector<std::string> clauses;  // e.g. "(1)(a)(i)"
    friend bool operator==(const CertifiedWeight&, const CertifiedWeight&) = default;
};

/// Dual weights certified by the closed-form clauses for this (n, d), in
/// increasing order, restricted to d_perp <= w <= n - d_perp.
std::vector<CertifiedWeight> prop52_closed_forms(long n, long d, Case c);

/// Closed forms for every d of one n at once, keyed by d.
std::vector<std::pair<long, std::vector<CertifiedWeight>>> prop52_all_d(long n, Case c);

struct SearchRecord {
    long n = 0;
    long d = 0;
    Case dperp_t = Case::c41;
    std::vector<long> weights;
    std::vector<std::string> provenance;  // per weight, clauses joined by '+'
    std::optional<long> k;                // dimension that passes the integrality filter

    friend bool operator==(const SearchRecord&, const SearchRecord&) = default;
};

struct ScanOptions {
    bool apply_filters = true;
    Exec exec = Exec::parallel;
};

struct ScanStats {
    std::size_t candidates = 0;  // (n, d) pairs with at least one certified weight
    std::size_t killed = 0;      // removed by the integrality filters
};

/// Integrality conditions on alpha. For (4,1) some 2 <= k <= n-1 must make
/// n(2^(k-1) - n)/(n-2d)^2 a positive integer; for (6,3) the forced alpha
/// must be a positive integer and come from such a k. Returns k.
std::optional<long> integrality_filter(long n, long d, Case c);

/// All even n <= max_n, d in [t+1, n/2).
std::vector<SearchRecord> scan(Case c, long max_n, const ScanOptions& opt = {}, ScanStats* stats = nullptr);

std::vector<SearchRecord> reproduce_table_b(long max_n, const ScanOptions& opt = {}, ScanStats* stats = nullptr);
std::vector<SearchRecord> search_case_63(long max_n, const ScanOptions& opt = {}, ScanStats* stats = nullptr);

struct TableRow {
    long n = 0, d = 0;
    std::vector<long> weights;
    friend bool operator==(const TableRow&, const TableRow&) = default;
    friend auto operator<=>(const TableRow&, const TableRow&) = default;
};

struct Erratum {
    long n = 0, d = 0;
    long published = 0, corrected = 0;
};

std::vector<TableRow> parse_table_b(const std::string& text);
std::vector<TableRow> read_table_b(const std::string& path);
std::vector<Erratum> parse_errata(const std::string& text);
std::vector<Erratum> read_errata(const std::string& path);

struct ErratumCheck {
    Erratum e;
    Int bracket_published;
    Int bracket_corrected;
    bool verified = false;  // published value fails, corrected value vanishes
};

ErratumCheck verify_erratum(const Erratum& e);

/// Applies every verified erratum; throws ArgumentError if one does not verify
/// or does not match a row.
std::vector<TableRow> apply_errata(std::vector<TableRow> rows, const std::vector<Erratum>& errata,
                                   std::vector<ErratumCheck>* checks = nullptr);

struct GoldenComparison {
    std::vector<TableRow> missing;          // golden rows (n <= max_n) absent or different
    std::vector<TableRow> extra_complete;   // output rows not in golden, n <= complete_to
    std::vector<TableRow> extra_beyond;     // output rows not in golden, n > complete_to
    bool pass() const { return missing.empty() && extra_complete.empty(); }
};

GoldenComparison compare_with_golden(const std::vector<SearchRecord>& out, const std::vector<TableRow>& golden,
                                     long max_n, long complete_to = 1000);

TableRow to_row(const SearchRecord& r);

struct GolayCandidate {
    long m = 0;
    std::optional<long> n;
    WeightParams params;
    std::vector<std::string> reasons;  // why rejected; empty for survivors
    bool survives() const { return reasons.empty(); }
};

struct GolayCertificate {
    std::vector<GolayCandidate> candidates;  // every m >= 1 with m^2 | 640
    std::vector<GolayCandidate> survivors;
};

GolayCertificate golay_uniqueness();

struct WeightCertification {
    long weight = 0;
    std::string criterion;        // "bracket_t12" / "bracket_t13"
    bool nonempty = false;        // A-perp_w > 0
    std::size_t strength = 0;     // of D-perp_w when nonempty
    bool confirmed = false;       // strength >= t + 1

    friend bool operator==(const WeightCertification&, const WeightCertification&) = default;
};

struct CertifyReport {
    AmStatus status;
    WeightDistribution wd, dual_wd;
    DesignReport designs, dual_designs;
    std::vector<WeightCertification> extras;
    bool predicts_gap = false;    // some certified dual design is nonempty
    bool dual_delta_lt_s = false; // observed delta(C-perp) < s(C-perp)
    bool consistent = true;       // every certified weight confirmed
    std::string note;
};

CertifyReport certify_with_code(const BinaryCode& c, const EnumOptions& opt = {}, std::size_t max_t = SIZE_MAX);

}  // namespace amkit
