#include "amkit/search.hpp"

#include "amkit/error.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <omp.h>

namespace amkit {

Int bracket_t13(long w, long n, long d) {
    Int s = 0;
    BinomialRows& B = binomial_rows();
    for (long i = 0; i <= w; ++i) {
        const long j = w - i;
        if (d - 3 < j) continue;
        const Int term = B.at(d - 3, j) * B.at(n - 2 * d, 2 * i + 1);
        if (j & 1)
            s -= term;
        else
            s += term;
    }
    return s;
}

Int bracket_t12(long w, long n, long d, long t) {
    Int s = 0;
    BinomialRows& B = binomial_rows();
    const long top = d - t - 1;
    for (long i = 0; i <= w; ++i) {
        const long j = w - i;
        if (top < j) continue;
        const Int term = B.at(top, j) * B.at(n - 2 * d, 2 * i);
        if (j & 1)
            s -= term;
        else
            s += term;
    }
    const Int last = n / 2 - t - 1 >= 0 ? B.at(n / 2 - t - 1, w) : Int(0);
    if ((w + 1) & 1)
        s -= last;
    else
        s += last;
    return s;
}

std::string case_token(Case c) { return c == Case::c41 ? "4,1" : "6,3"; }

Case parse_case(const std::string& s) {
    if (s == "4,1" || s == "(4,1)") return Case::c41;
    if (s == "6,3" || s == "(6,3)") return Case::c63;
    throw ArgumentError("unknown case '" + s + "' (expected 4,1 or 6,3)");
}

namespace {

using i128 = __int128;

std::optional<long> isq(i128 x) {
    auto r = exact_sqrt(x);
    if (!r) return std::nullopt;
    return static_cast<long>(*r);
}

i128 quartic41(i128 n, i128 d) {
    return n * n * n * n - (8 * d + 15) * n * n * n + (12 * d * (2 * d + 5) + 145) * n * n -
           2 * (2 * d * (d * (8 * d + 15) + 100) + 285) * n + 16 * (d * d * d * d + 25 * d * d + 109);
}

i128 quartic63(i128 n, i128 d) {
    return n * n * n * n - (8 * d + 15) * n * n * n + (12 * d * (2 * d + 5) + 205) * n * n -
           4 * d * (d * (8 * d + 15) + 160) * n - 930 * n + 16 * d * d * (d * d + 40) + 4744;
}

// d -> weight -> clauses
using ClauseMap = std::map<long, std::map<long, std::vector<std::string>>>;

void closed_forms(long n, Case c, std::optional<long> only_d, ClauseMap& out) {
    if (n % 2 != 0) return;
    const bool c41 = c == Case::c41;
    const long dp = case_dperp(c), t = case_t(c);
    const char* sub = c41 ? "a" : "b";
    auto clause = [&](const char* roman) { return std::string("(1)(") + sub + ")(" + roman + ")"; };
    auto add = [&](long d, long w, std::string tag) {
        if (only_d && d != *only_d) return;
        if (d < t + 1 || 2 * d >= n) return;
        if (w < dp || w > n - dp) return;
        out[d][w].push_back(std::move(tag));
    };
    const long c1 = c41 ? 32 : 56, c2 = c41 ? 8 : 16;
    const long w1 = c41 ? 6 : 8, w2 = c41 ? 4 : 6, w3 = c41 ? 8 : 10;
    // (i): 4d^2 - 4nd + n^2 - 6n + c1 = 0
    if (auto s = isq(6 * static_cast<i128>(n) - c1); s && (n - *s) % 2 == 0) {
        const long d = (n - *s) / 2;
        add(d, w1, clause("i"));
        if (n % 4 == 0) add(d, n - w1, clause("i"));
    }
    // (ii): 4d^2 - 4nd + n^2 - 2n + c2 = 0, n = 2 mod 4, d even
    if (n % 4 == 2) {
        if (auto s = isq(2 * static_cast<i128>(n) - c2); s && (n - *s) % 2 == 0) {
            const long d = (n - *s) / 2;
            if (d % 2 == 0) add(d, n - w2, clause("ii"));
        }
    }
    // (iii): quartic in n and d
    auto quartic_hits = [&](long d) {
        const i128 q = c41 ? quartic41(n, d) : quartic63(n, d);
        if (q == 0) {
            add(d, w3, clause("iii"));
            add(d, n - w3, clause("iii"));
        }
    };
    if (only_d)
        quartic_hits(*only_d);
    else
        for (long d = t + 1; 2 * d < n; ++d) quartic_hits(d);
    // (2): n - 2d = 6
    if (n > 6) {
        const long d = (n - 6) / 2;
        const long off = c41 ? 9 : 15, base = c41 ? 8 : 10;
        if (auto s = isq(c41 ? 3 * static_cast<i128>(d) + 1 : 3 * static_cast<i128>(d) - 5)) {
            for (long num : {3 * d - off + *s, 3 * d - off - *s})
                if (num > 0 && num % 4 == 0) add(d, 2 * (num / 4) + base, std::string("(2)(") + sub + ")");
        }
    }
    // (3): n - 2d = 8
    if (n > 8) {
        const long d = (n - 8) / 2;
        if (auto s = isq(c41 ? d : d - 2)) {
            add(d, d + 4 + *s, std::string("(3)(") + sub + ")");
            add(d, d + 4 - *s, std::string("(3)(") + sub + ")");
        }
    }
}

std::vector<CertifiedWeight> flatten(const std::map<long, std::vector<std::string>>& m) {
    std::vector<CertifiedWeight> v;
    for (const auto& [w, tags] : m) {
        auto t = tags;
        std::sort(t.begin(), t.end());
        t.erase(std::unique(t.begin(), t.end()), t.end());
        v.push_back({w, std::move(t)});
    }
    return v;
}

}  // namespace

std::vector<CertifiedWeight> prop52_closed_forms(long n, long d, Case c) {
    if (n % 2 != 0 || d <= 0 || 2 * d >= n) throw ArgumentError("need n even and 0 < d < n/2");
    ClauseMap m;
    closed_forms(n, c, d, m);
    auto it = m.find(d);
    return it == m.end() ? std::vector<CertifiedWeight>{} : flatten(it->second);
}

std::vector<std::pair<long, std::vector<CertifiedWeight>>> prop52_all_d(long n, Case c) {
    ClauseMap m;
    closed_forms(n, c, std::nullopt, m);
    std::vector<std::pair<long, std::vector<CertifiedWeight>>> out;
    for (const auto& [d, ws] : m) out.emplace_back(d, flatten(ws));
    return out;
}

std::optional<long> integrality_filter(long n, long d, Case c) {
    if (c == Case::c41) return dimension_for_alpha(n, d);
    const auto a = alpha_dperp6(n, d);
    if (!a || !is_integer(*a) || sgn(*a) <= 0) return std::nullopt;
    // alpha (n-2d)^2 = n (2^(k-1) - n)  =>  2^(k-1) = n + alpha (n-2d)^2 / n
    const Int m = n - 2 * d;
    const Rat v = Rat(n) + *a * Rat(m * m) / Rat(n);
    if (!is_integer(v) || sgn(v) <= 0) return std::nullopt;
    const Int x = v.get_num();
    if ((x & (x - 1)) != 0) return std::nullopt;
    const long k = static_cast<long>(mpz_sizeinbase(x.get_mpz_t(), 2));  // x = 2^(k-1)
    if (k < 2 || k > n - 1) return std::nullopt;
    return k;
}

std::vector<SearchRecord> scan(Case c, long max_n, const ScanOptions& opt, ScanStats* stats) {
    std::vector<SearchRecord> out;
    std::size_t cand = 0, killed = 0;
    const long count = max_n >= 4 ? (max_n - 4) / 2 + 1 : 0;
    auto one_n = [&](long n, std::vector<SearchRecord>& acc, std::size_t& cnd, std::size_t& kil) {
        for (auto& [d, ws] : prop52_all_d(n, c)) {
            ++cnd;
            SearchRecord r;
            r.n = n;
            r.d = d;
            r.dperp_t = c;
            if (opt.apply_filters) {
                r.k = integrality_filter(n, d, c);
                if (!r.k) {
                    ++kil;
                    continue;
                }
            }
            for (const auto& w : ws) {
                r.weights.push_back(w.weight);
                std::string p;
                for (const auto& tag : w.clauses) p += (p.empty() ? "" : "+") + tag;
                r.provenance.push_back(std::move(p));
            }
            acc.push_back(std::move(r));
        }
    };
    if (opt.exec == Exec::serial) {
        for (long i = 0; i < count; ++i) one_n(4 + 2 * i, out, cand, killed);
    } else {
#pragma omp parallel
        {
            std::vector<SearchRecord> local;
            std::size_t lc = 0, lk = 0;
#pragma omp for schedule(dynamic, 16)
            for (long i = 0; i < count; ++i) one_n(4 + 2 * i, local, lc, lk);
#pragma omp critical(amkit_scan_merge)
            {
                out.insert(out.end(), std::make_move_iterator(local.begin()), std::make_move_iterator(local.end()));
                cand += lc;
                killed += lk;
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const SearchRecord& a, const SearchRecord& b) {
        return std::tie(a.n, a.d) < std::tie(b.n, b.d);
    });
    if (stats) {
        stats->candidates = cand;
        stats->killed = killed;
    }
    return out;
}

std::vector<SearchRecord> reproduce_table_b(long max_n, const ScanOptions& opt, ScanStats* stats) {
    return scan(Case::c41, max_n, opt, stats);
}

std::vector<SearchRecord> search_case_63(long max_n, const ScanOptions& opt, ScanStats* stats) {
    return scan(Case::c63, max_n, opt, stats);
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

long to_long(const std::string& s, std::size_t line) {
    std::size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(s, &pos);
    } catch (const std::exception&) {
        throw ParseError(line, "expected an integer, got '" + s + "'");
    }
    if (pos != s.size()) throw ParseError(line, "expected an integer, got '" + s + "'");
    return v;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ArgumentError("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// Data lines of a small CSV: skips blanks, '#' comments and the header.
template <class F>
void for_each_csv_line(const std::string& text, const std::string& header, F&& f) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    bool seen_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (!seen_header) {
            if (line != header) throw ParseError(lineno, "expected header '" + header + "'");
            seen_header = true;
            continue;
        }
        f(split(line, ','), lineno);
    }
    if (!seen_header) throw ParseError(lineno, "missing header '" + header + "'");
}

}  // namespace

std::vector<TableRow> parse_table_b(const std::string& text) {
    std::vector<TableRow> rows;
    for_each_csv_line(text, "n,d,weights", [&](const std::vector<std::string>& f, std::size_t line) {
        if (f.size() != 3) throw ParseError(line, "expected 3 fields");
        TableRow r{to_long(f[0], line), to_long(f[1], line), {}};
        for (const auto& w : split(f[2], ';')) r.weights.push_back(to_long(w, line));
        std::sort(r.weights.begin(), r.weights.end());
        rows.push_back(std::move(r));
    });
    return rows;
}

std::vector<TableRow> read_table_b(const std::string& path) { return parse_table_b(slurp(path)); }

std::vector<Erratum> parse_errata(const std::string& text) {
    std::vector<Erratum> out;
    for_each_csv_line(text, "n,d,published,corrected", [&](const std::vector<std::string>& f, std::size_t line) {
        if (f.size() != 4) throw ParseError(line, "expected 4 fields");
        out.push_back({to_long(f[0], line), to_long(f[1], line), to_long(f[2], line), to_long(f[3], line)});
    });
    return out;
}

std::vector<Erratum> read_errata(const std::string& path) { return parse_errata(slurp(path)); }

ErratumCheck verify_erratum(const Erratum& e) {
    ErratumCheck c{e, 0, 0, false};
    // Table B is case (4,1): weight W = 2w + 2.
    auto bracket = [&](long W) -> std::optional<Int> {
        if (W % 2 != 0 || W < 2) return std::nullopt;
        return bracket_t12((W - 2) / 2, e.n, e.d, 1);
    };
    const auto bp = bracket(e.published), bc = bracket(e.corrected);
    if (bp) c.bracket_published = *bp;
    if (bc) c.bracket_corrected = *bc;
    c.verified = bc && sgn(*bc) == 0 && (!bp || sgn(*bp) != 0);
    return c;
}

std::vector<TableRow> apply_errata(std::vector<TableRow> rows, const std::vector<Erratum>& errata,
                                   std::vector<ErratumCheck>* checks) {
    for (const auto& e : errata) {
        auto chk = verify_erratum(e);
        if (checks) checks->push_back(chk);
        if (!chk.verified)
            throw ArgumentError("erratum (" + std::to_string(e.n) + "," + std::to_string(e.d) + ") " +
                                std::to_string(e.published) + " -> " + std::to_string(e.corrected) +
                                " does not verify");
        auto it = std::find_if(rows.begin(), rows.end(), [&](const TableRow& r) { return r.n == e.n && r.d == e.d; });
        if (it == rows.end()) throw ArgumentError("erratum names a row that is not in the table");
        auto w = std::find(it->weights.begin(), it->weights.end(), e.published);
        if (w == it->weights.end()) throw ArgumentError("erratum names a weight that is not in the row");
        *w = e.corrected;
        std::sort(it->weights.begin(), it->weights.end());
    }
    return rows;
}

TableRow to_row(const SearchRecord& r) { return {r.n, r.d, r.weights}; }

GoldenComparison compare_with_golden(const std::vector<SearchRecord>& out, const std::vector<TableRow>& golden,
                                     long max_n, long complete_to) {
    std::set<TableRow> got, want;
    for (const auto& r : out) got.insert(to_row(r));
    for (const auto& g : golden)
        if (g.n <= max_n) want.insert(g);
    GoldenComparison cmp;
    for (const auto& g : want)
        if (!got.count(g)) cmp.missing.push_back(g);
    for (const auto& r : got) {
        if (want.count(r)) continue;
        (r.n <= complete_to ? cmp.extra_complete : cmp.extra_beyond).push_back(r);
    }
    return cmp;
}

GolayCertificate golay_uniqueness() {
    GolayCertificate cert;
    constexpr long kNumer = 640;
    for (long m = 1; m * m <= kNumer; ++m) {
        if (kNumer % (m * m) != 0) continue;
        GolayCandidate g;
        g.m = m;
        if ((m * m + 8) % 3 != 0) {
            g.reasons.push_back("(m^2+8)/3 is not an integer");
            cert.candidates.push_back(std::move(g));
            continue;
        }
        const long n = (m * m + 8) / 3;
        g.n = n;
        g.params = solve_weight_params(n, 0, 8);
        if (n % 2 != 0) g.reasons.push_back("n odd");
        if (!g.params.d) g.reasons.push_back("no valid d");
        if (g.params.alpha && !g.params.alpha_ok) g.reasons.push_back("alpha not a positive integer");
        if (g.params.beta && !g.params.beta_ok) g.reasons.push_back("beta not a positive integer");
        if (g.params.alpha_ok && g.params.beta_ok && !g.params.k) g.reasons.push_back("2 alpha + beta + 2 not a power of 2");
        if (n <= 8) g.reasons.push_back("n <= d_perp = 8");
        if (g.survives()) cert.survivors.push_back(g);
        cert.candidates.push_back(std::move(g));
    }
    return cert;
}

CertifyReport certify_with_code(const BinaryCode& c, const EnumOptions& opt, std::size_t max_t) {
    CertifyReport rep;
    rep.status = am_applicability(c, opt);
    rep.wd = weight_distribution(c, opt);
    const auto dual_poly = macwilliams(rep.wd.enumerator(), c.dimension());
    for (const auto& q : dual_poly.coeffs()) rep.dual_wd.counts.push_back(q.get_num());
    const BinaryCode dual = dual_code(c);
    auto has_inner = [](const WeightDistribution& w) {
        for (std::size_t i = 1; i < w.length(); ++i)
            if (sgn(w[i]) != 0) return true;
        return false;
    };
    if (has_inner(rep.wd)) rep.designs = delta_s(c, opt, max_t);
    if (has_inner(rep.dual_wd)) {
        rep.dual_designs = delta_s(dual, opt, max_t);
        rep.dual_delta_lt_s = rep.dual_designs.delta < rep.dual_designs.s;
    }
    if (!rep.status.gap || *rep.status.gap < 1 || *rep.status.gap > 3) {
        rep.note = "not applicable with d_perp - t in {1,2,3}";
        return rep;
    }
    const long n = static_cast<long>(c.length());
    const long dp = static_cast<long>(rep.status.d_perp);
    const auto nz = rep.wd.nonzero_weights();
    const std::string label = rep.status.case_label.value_or("");
    std::vector<long> inner;
    for (auto w : nz)
        if (w != 0 && static_cast<long>(w) != n) inner.push_back(static_cast<long>(w));
    auto add = [&](long W, const std::string& crit, long t) {
        WeightCertification x;
        x.weight = W;
        x.criterion = crit;
        x.nonempty = sgn(rep.dual_wd[static_cast<std::size_t>(W)]) != 0;
        if (x.nonempty) {
            x.strength = rep.dual_designs.strength.at(static_cast<std::size_t>(W));
            x.confirmed = static_cast<long>(x.strength) >= t + 1;
            rep.predicts_gap = true;
            if (!x.confirmed) rep.consistent = false;
        }
        rep.extras.push_back(x);
    };
    if (label == "(4,2)") {
        if (inner.size() != 2 || inner[0] + inner[1] != n) {
            rep.note = "weight distribution is not 0, d, n-d, n";
            return rep;
        }
        const long d = inner[0];
        for (long w = 0; 2 * w + 4 <= n - dp; ++w)
            if (2 * w + 4 >= dp && sgn(bracket_t13(w, n, d)) == 0) add(2 * w + 4, "bracket_t13", 2);
    } else if (label == "(4,1)" || label == "(6,3)") {
        const long t = label == "(4,1)" ? 1 : 3;
        if (n % 2 != 0 || inner.size() != 3 || inner[1] * 2 != n || inner[0] + inner[2] != n || inner[0] < t + 1) {
            rep.note = "weight distribution is not 0, d, n/2, n-d, n";
            return rep;
        }
        const long d = inner[0];
        for (long w = 0; 2 * w + t + 1 <= n - dp; ++w)
            if (2 * w + t + 1 >= dp && sgn(bracket_t12(w, n, d, t)) == 0) add(2 * w + t + 1, "bracket_t12", t);
    } else {
        rep.note = "no bracket criterion for case " + label;
    }
    return rep;
}

}  // namespace amkit
