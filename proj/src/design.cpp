#include "amkit/design.hpp"

#include "amkit/error.hpp"
#include "amkit/subsets.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include <omp.h>

namespace amkit {

BlockDesign::BlockDesign(std::size_t v, std::vector<std::vector<int>> blocks) : v_(v), kb_(0) {
    if (blocks.empty()) throw EmptyDesignError("design has no blocks");
    for (auto& b : blocks) {
        std::sort(b.begin(), b.end());
        if (std::adjacent_find(b.begin(), b.end()) != b.end()) throw ArgumentError("block repeats a point");
        if (!b.empty() && (b.front() < 0 || static_cast<std::size_t>(b.back()) >= v))
            throw ArgumentError("block point outside 1.." + std::to_string(v));
    }
    kb_ = blocks.front().size();
    if (kb_ == 0) throw EmptyDesignError("blocks must be nonempty");
    for (const auto& b : blocks)
        if (b.size() != kb_) throw ArgumentError("blocks have different sizes");
    std::sort(blocks.begin(), blocks.end());
    if (std::adjacent_find(blocks.begin(), blocks.end()) != blocks.end())
        throw ArgumentError("repeated block");
    blocks_ = std::move(blocks);
}

bool BlockDesign::is_complete() const {
    return binomial(static_cast<long>(v_), static_cast<long>(kb_)) == Int(static_cast<unsigned long>(blocks_.size()));
}

BlockDesign parse_design(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    std::optional<std::size_t> v;
    std::vector<std::vector<int>> blocks;
    std::vector<std::size_t> block_line;
    while (std::getline(in, line)) {
        ++lineno;
        const auto lead = line.find_first_not_of(" \t\r");
        if (lead == std::string::npos || line[lead] == '#') continue;
        if (!v) {
            std::string s = line.substr(lead);
            while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.pop_back();
            if (s.rfind("v=", 0) != 0) throw ParseError(lineno, "expected \"v=<points>\"");
            std::size_t pos = 0;
            long val = 0;
            try {
                val = std::stol(s.substr(2), &pos);
            } catch (const std::exception&) {
                throw ParseError(lineno, "bad point count");
            }
            if (pos != s.size() - 2 || val <= 0) throw ParseError(lineno, "bad point count");
            v = static_cast<std::size_t>(val);
            continue;
        }
        std::istringstream ls(line);
        std::string tok;
        std::vector<int> b;
        while (ls >> tok) {
            std::size_t pos = 0;
            long p = 0;
            try {
                p = std::stol(tok, &pos);
            } catch (const std::exception&) {
                throw ParseError(lineno, "bad point '" + tok + "'");
            }
            if (pos != tok.size()) throw ParseError(lineno, "bad point '" + tok + "'");
            if (p < 1 || static_cast<std::size_t>(p) > *v)
                throw ParseError(lineno, "point " + tok + " outside 1.." + std::to_string(*v));
            b.push_back(static_cast<int>(p - 1));
        }
        blocks.push_back(std::move(b));
        block_line.push_back(lineno);
    }
    if (!v) throw ParseError(lineno, "empty design file");
    if (blocks.empty()) throw ParseError(lineno, "no blocks");
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        auto b = blocks[i];
        std::sort(b.begin(), b.end());
        if (std::adjacent_find(b.begin(), b.end()) != b.end()) throw ParseError(block_line[i], "block repeats a point");
        if (b.size() != blocks.front().size()) throw ParseError(block_line[i], "block size differs from line " + std::to_string(block_line[0]));
    }
    try {
        return BlockDesign(*v, std::move(blocks));
    } catch (const ArgumentError& e) {
        throw ParseError(0, e.what());
    }
}

BlockDesign read_design_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ArgumentError("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_design(ss.str());
}

std::uint64_t SubsetCounts::at(std::uint64_t rank) const {
    if (is_dense()) return dense.at(rank);
    auto it = sparse.find(rank);
    return it == sparse.end() ? 0 : it->second;
}

namespace {

constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 22;

}  // namespace

SubsetCounts count_t_subsets(const BlockDesign& d, std::size_t t, Exec exec) {
    if (t > d.block_size()) throw ArgumentError("t exceeds the block size");
    ColexTable T(d.points(), t);
    SubsetCounts out;
    out.v = d.points();
    out.t = t;
    out.total = T.count();
    const auto& blocks = d.blocks();
    const auto nb = static_cast<std::int64_t>(blocks.size());
    const bool par = exec == Exec::parallel && nb >= 64;
    if (out.total <= kDenseLimit) {
        out.dense.assign(out.total, 0);
        if (!par) {
            for (const auto& b : blocks) for_each_k_subset(T, b.data(), b.size(), [&](std::uint64_t r) { ++out.dense[r]; });
            return out;
        }
#pragma omp parallel
        {
            std::vector<std::uint64_t> local(out.total, 0);
#pragma omp for schedule(static)
            for (std::int64_t i = 0; i < nb; ++i) {
                const auto& b = blocks[static_cast<std::size_t>(i)];
                for_each_k_subset(T, b.data(), b.size(), [&](std::uint64_t r) { ++local[r]; });
            }
#pragma omp critical(amkit_count_dense)
            for (std::size_t r = 0; r < local.size(); ++r) out.dense[r] += local[r];
        }
        return out;
    }
    std::unordered_map<std::uint64_t, std::uint64_t> acc;
    if (!par) {
        for (const auto& b : blocks) for_each_k_subset(T, b.data(), b.size(), [&](std::uint64_t r) { ++acc[r]; });
    } else {
#pragma omp parallel
        {
            std::unordered_map<std::uint64_t, std::uint64_t> local;
#pragma omp for schedule(static)
            for (std::int64_t i = 0; i < nb; ++i) {
                const auto& b = blocks[static_cast<std::size_t>(i)];
                for_each_k_subset(T, b.data(), b.size(), [&](std::uint64_t r) { ++local[r]; });
            }
#pragma omp critical(amkit_count_sparse)
            for (const auto& [r, c] : local) acc[r] += c;
        }
    }
    out.sparse.insert(acc.begin(), acc.end());
    return out;
}

DesignCheck is_t_design_direct(const BlockDesign& d, std::size_t t, Exec exec) {
    if (t > d.block_size())
        throw ArgumentError("t=" + std::to_string(t) + " exceeds block size " + std::to_string(d.block_size()));
    DesignCheck res;
    if (t == 0) {
        res.is_design = true;
        res.lambda = static_cast<unsigned long>(d.block_count());
        return res;
    }
    const auto counts = count_t_subsets(d, t, exec);
    ColexTable T(d.points(), t);
    auto witness = [&](std::uint64_t ra, std::uint64_t rb) {
        res.witness = DesignCheck::Witness{T.unrank(ra), counts.at(ra), T.unrank(rb), counts.at(rb)};
        return res;
    };
    if (counts.is_dense()) {
        for (std::uint64_t r = 1; r < counts.total; ++r)
            if (counts.dense[r] != counts.dense[0]) return witness(0, r);
        res.is_design = true;
        res.lambda = static_cast<unsigned long>(counts.dense[0]);
        return res;
    }
    const auto& sp = counts.sparse;
    const std::uint64_t first = sp.begin()->first;
    for (const auto& [r, c] : sp)
        if (c != sp.begin()->second) return witness(first, r);
    if (sp.size() != counts.total) {
        // Some t-subset lies in no block; the map keys are sorted, so the
        // first gap is a missing rank.
        std::uint64_t expect = 0;
        for (const auto& [r, c] : sp) {
            if (r != expect) break;
            ++expect;
        }
        return witness(first, expect);
    }
    res.is_design = true;
    res.lambda = static_cast<unsigned long>(sp.begin()->second);
    return res;
}

bool is_t_design_harmonic(const BlockDesign& d, std::size_t t, const BasisProvider& basis) {
    if (t > d.block_size()) throw ArgumentError("t exceeds the block size");
    for (std::size_t k = 1; k <= t; ++k) {
        const auto counts = count_t_subsets(d, k, Exec::serial);
        if (!counts.is_dense()) throw CapacityError("Delsarte test needs a dense subset table");
        for (const auto& f : basis(d.points(), k)) {
            Rat s = 0;
            for (std::uint64_t r = 0; r < counts.total; ++r)
                if (counts.dense[r] && sgn(f.values[r]) != 0) s += f.values[r] * Rat(Int(static_cast<unsigned long>(counts.dense[r])));
            if (sgn(s) != 0) return false;
        }
    }
    return true;
}

std::size_t design_strength(const BlockDesign& d, std::size_t max_t, Exec exec) {
    const std::size_t cap = std::min(max_t, d.block_size());
    if (d.is_complete()) return cap;
    std::size_t t = 0;
    while (t < cap && is_t_design_direct(d, t + 1, exec).is_design) ++t;
    return t;
}

BlockDesign support_design(const BinaryCode& c, std::size_t w, const EnumOptions& opt) {
    if (w == 0 || w > c.length()) throw ArgumentError("support design weight must satisfy 0 < w <= n");
    const auto words = codewords_of_weight(c, w, opt);
    if (words.empty()) throw EmptyDesignError("no codewords of weight " + std::to_string(w));
    std::vector<std::vector<int>> blocks;
    blocks.reserve(words.size());
    for (const auto& x : words) blocks.push_back(x.support());
    return BlockDesign(c.length(), std::move(blocks));
}

DesignReport delta_s(const BinaryCode& c, const EnumOptions& opt, std::size_t max_t) {
    const auto wd = weight_distribution(c, opt);
    const std::size_t n = c.length();
    DesignReport rep;
    bool any = false;
    for (std::size_t w = 1; w <= n; ++w) {
        if (sgn(wd[w]) == 0) continue;
        const std::size_t st = design_strength(support_design(c, w, opt), max_t, opt.exec);
        rep.strength[w] = st;
        if (w == n) continue;
        if (!any) {
            rep.delta = rep.s = st;
            any = true;
        } else {
            rep.delta = std::min(rep.delta, st);
            rep.s = std::max(rep.s, st);
        }
    }
    if (!any) throw ArgumentError("code has no nonzero weight below n");
    return rep;
}

BlockDesign complementary_design(const BlockDesign& d) {
    if (d.block_size() == d.points()) throw EmptyDesignError("complement of a full block is empty");
    std::vector<std::vector<int>> out;
    out.reserve(d.block_count());
    for (const auto& b : d.blocks()) {
        std::vector<int> c;
        std::size_t j = 0;
        for (int p = 0; p < static_cast<int>(d.points()); ++p) {
            if (j < b.size() && b[j] == p)
                ++j;
            else
                c.push_back(p);
        }
        out.push_back(std::move(c));
    }
    return BlockDesign(d.points(), std::move(out));
}

bool is_self_complementary(const BlockDesign& d) {
    if (2 * d.block_size() != d.points()) return false;
    return complementary_design(d) == d;
}

BlockDesign derived_design(const BlockDesign& d, int p) {
    if (p < 0 || static_cast<std::size_t>(p) >= d.points()) throw ArgumentError("point out of range");
    std::vector<std::vector<int>> out;
    for (const auto& b : d.blocks()) {
        if (!std::binary_search(b.begin(), b.end(), p)) continue;
        std::vector<int> nb;
        for (int x : b)
            if (x != p) nb.push_back(x > p ? x - 1 : x);
        out.push_back(std::move(nb));
    }
    if (out.empty()) throw EmptyDesignError("point " + std::to_string(p + 1) + " lies in no block");
    if (d.block_size() == 1) throw EmptyDesignError("derived blocks would be empty");
    return BlockDesign(d.points() - 1, std::move(out));
}

std::set<std::size_t> intersection_numbers(const BlockDesign& d, Exec exec) {
    const auto nb = d.block_count();
    if (nb < 2) throw ArgumentError("intersection numbers need at least two blocks");
    std::vector<BitVec> bv;
    bv.reserve(nb);
    for (const auto& b : d.blocks()) {
        BitVec x(d.points());
        for (int p : b) x.set(static_cast<std::size_t>(p));
        bv.push_back(std::move(x));
    }
    const std::size_t kb = d.block_size();
    auto scan_row = [&](std::size_t i, std::vector<char>& seen) {
        const auto& wi = bv[i].words();
        for (std::size_t j = i + 1; j < nb; ++j) {
            const auto& wj = bv[j].words();
            std::size_t c = 0;
            for (std::size_t q = 0; q < wi.size(); ++q) c += static_cast<std::size_t>(std::popcount(wi[q] & wj[q]));
            seen[c] = 1;
        }
    };
    std::vector<char> seen(kb + 1, 0);
    if (exec == Exec::serial || nb < 256) {
        for (std::size_t i = 0; i < nb; ++i) scan_row(i, seen);
    } else {
#pragma omp parallel
        {
            std::vector<char> local(kb + 1, 0);
#pragma omp for schedule(dynamic, 16)
            for (std::int64_t i = 0; i < static_cast<std::int64_t>(nb); ++i) scan_row(static_cast<std::size_t>(i), local);
#pragma omp critical(amkit_intersections)
            for (std::size_t c = 0; c <= kb; ++c) seen[c] |= local[c];
        }
    }
    std::set<std::size_t> out;
    for (std::size_t c = 0; c <= kb; ++c)
        if (seen[c]) out.insert(c);
    return out;
}

}  // namespace amkit
