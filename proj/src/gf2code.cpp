#include "amkit/gf2code.hpp"

#include "amkit/error.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace amkit {

PackedRows pack_rows(std::size_t n, const std::vector<BitVec>& rows) {
    PackedRows p;
    p.n = n;
    p.k = rows.size();
    p.words = (n + 63) / 64;
    if (p.words == 0) p.words = 1;
    p.data.assign(p.k * p.words, 0);
    for (std::size_t i = 0; i < p.k; ++i) {
        const auto& w = rows[i].words();
        std::copy(w.begin(), w.end(), p.data.begin() + static_cast<std::ptrdiff_t>(i * p.words));
    }
    return p;
}

namespace kernels {

std::vector<std::uint64_t> weight_counts(const PackedRows& g, Exec exec) {
    using Counts = std::vector<std::uint64_t>;
    const std::size_t n = g.n;
    return reduce_codewords(
        g, exec, [n] { return Counts(n + 1, 0); },
        [](Counts& c, const std::uint64_t*, unsigned wt) { ++c[wt]; },
        [](Counts& into, const Counts& from) {
            for (std::size_t i = 0; i < into.size(); ++i) into[i] += from[i];
        });
}

std::vector<BitVec> words_of_weight(const PackedRows& g, std::size_t w, Exec exec) {
    using Words = std::vector<BitVec>;
    const std::size_t n = g.n;
    auto out = reduce_codewords(
        g, exec, [] { return Words{}; },
        [n, w](Words& acc, const std::uint64_t* p, unsigned wt) {
            if (wt == w) acc.push_back(BitVec::from_words(n, p));
        },
        [](Words& into, Words& from) {
            into.insert(into.end(), std::make_move_iterator(from.begin()), std::make_move_iterator(from.end()));
        });
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace kernels

BinaryCode::BinaryCode(std::size_t n, std::vector<BitVec> rows) : n_(n) {
    for (const auto& r : rows)
        if (r.size() != n) throw ArgumentError("generator row has length " + std::to_string(r.size()) +
                                               ", expected " + std::to_string(n));
    // Gauss-Jordan over GF(2).
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && !rows[piv].test(col)) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != rank && rows[i].test(col)) rows[i] ^= rows[rank];
        pivots_.push_back(col);
        ++rank;
    }
    rows.resize(rank);
    rows_ = std::move(rows);
    has_ones_ = contains(BitVec::ones(n));
}

BinaryCode BinaryCode::full(std::size_t n) {
    std::vector<BitVec> rows;
    for (std::size_t i = 0; i < n; ++i) {
        BitVec v(n);
        v.set(i);
        rows.push_back(std::move(v));
    }
    return BinaryCode(n, std::move(rows));
}

bool BinaryCode::contains(const BitVec& v) const {
    if (v.size() != n_) return false;
    BitVec r = v;
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (r.test(pivots_[i])) r ^= rows_[i];
    return r.none();
}

std::string BinaryCode::to_text() const {
    std::string s;
    for (const auto& r : rows_) {
        for (std::size_t i = 0; i < n_; ++i) s += r.test(i) ? '1' : '0';
        s += '\n';
    }
    return s;
}

BinaryCode parse_code(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0, n = 0;
    std::vector<BitVec> rows;
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
        std::size_t lead = line.find_first_not_of(" \t");
        if (lead == std::string::npos || line[lead] == '#') continue;
        line = line.substr(lead);
        if (rows.empty())
            n = line.size();
        else if (line.size() != n)
            throw ParseError(lineno, "row has " + std::to_string(line.size()) + " entries, expected " +
                                         std::to_string(n));
        BitVec v(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (line[i] == '1')
                v.set(i);
            else if (line[i] != '0')
                throw ParseError(lineno, std::string("unexpected character '") + line[i] + "' in column " +
                                             std::to_string(i + 1));
        }
        rows.push_back(std::move(v));
    }
    if (rows.empty()) throw ParseError(lineno, "no generator rows");
    return BinaryCode(n, std::move(rows));
}

BinaryCode read_code_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ArgumentError("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_code(ss.str());
}

BinaryCode dual_code(const BinaryCode& c) {
    const std::size_t n = c.length();
    const auto& rows = c.generator();
    const auto& piv = c.pivots();
    std::vector<bool> is_pivot(n, false);
    for (auto p : piv) is_pivot[p] = true;
    std::vector<BitVec> out;
    for (std::size_t j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        BitVec v(n);
        v.set(j);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (rows[i].test(j)) v.set(piv[i]);
        out.push_back(std::move(v));
    }
    return BinaryCode(n, std::move(out));
}

std::vector<std::size_t> WeightDistribution::nonzero_weights() const {
    std::vector<std::size_t> w;
    for (std::size_t i = 0; i < counts.size(); ++i)
        if (sgn(counts[i]) != 0) w.push_back(i);
    return w;
}

namespace {

constexpr std::size_t kHardCap = 62;

void check_cap(std::size_t k, const EnumOptions& opt) {
    const std::size_t cap = std::min(opt.cap, kHardCap);
    if (k > cap)
        throw CapacityError("enumerating 2^" + std::to_string(k) + " codewords exceeds the cap 2^" +
                            std::to_string(cap));
}

std::vector<Int> direct_counts(const BinaryCode& c, Exec exec) {
    auto raw = kernels::weight_counts(c.packed(), exec);
    std::vector<Int> out;
    out.reserve(raw.size());
    for (auto v : raw) out.emplace_back(static_cast<unsigned long>(v));
    return out;
}

}  // namespace

WeightDistribution weight_distribution(const BinaryCode& c, const EnumOptions& opt) {
    const std::size_t k = c.dimension(), n = c.length();
    bool direct = opt.method == WdMethod::direct || (opt.method == WdMethod::automatic && k <= n - k);
    if (opt.method == WdMethod::automatic) check_cap(std::min(k, n - k), opt);
    if (direct) {
        check_cap(k, opt);
        return {direct_counts(c, opt.exec)};
    }
    check_cap(n - k, opt);
    const BinaryCode dc = dual_code(c);
    HomPoly2 w = macwilliams(HomPoly2::from_counts(direct_counts(dc, opt.exec)), n - k);
    WeightDistribution out;
    for (const auto& q : w.coeffs()) out.counts.push_back(q.get_num());
    return out;
}

std::size_t minimum_distance(const BinaryCode& c, const EnumOptions& opt) {
    if (c.dimension() == 0) throw ArgumentError("no nonzero codeword");
    const auto wd = weight_distribution(c, opt);
    for (std::size_t i = 1; i < wd.counts.size(); ++i)
        if (sgn(wd.counts[i]) != 0) return i;
    throw ArgumentError("no nonzero codeword");
}

std::vector<BitVec> codewords_of_weight(const BinaryCode& c, std::size_t w, const EnumOptions& opt) {
    if (w > c.length()) throw ArgumentError("weight exceeds code length");
    check_cap(c.dimension(), opt);
    return kernels::words_of_weight(c.packed(), w, opt.exec);
}

std::vector<BitVec> all_codewords(const BinaryCode& c, const EnumOptions& opt) {
    check_cap(c.dimension(), opt);
    using Words = std::vector<BitVec>;
    const std::size_t n = c.length();
    return kernels::reduce_codewords(
        c.packed(), Exec::serial, [] { return Words{}; },
        [n](Words& acc, const std::uint64_t* p, unsigned) { acc.push_back(BitVec::from_words(n, p)); },
        [](Words&, Words&) {});
}

}  // namespace amkit
