#include "amkit/report.hpp"

#include "amkit/error.hpp"

#include <sstream>

namespace amkit {

using nlohmann::json;

json int_json(const Int& v) {
    if (v.fits_slong_p()) return v.get_si();
    if (sgn(v) > 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64) {
        const Int hi = v >> 32, lo = v - (hi << 32);
        return (static_cast<std::uint64_t>(hi.get_ui()) << 32) | lo.get_ui();
    }
    return v.get_str();
}

Int int_from_json(const json& j) {
    if (j.is_string()) return Int(j.get<std::string>());
    if (j.is_number_unsigned()) {
        const auto u = j.get<std::uint64_t>();
        return (Int(static_cast<unsigned long>(u >> 32)) << 32) + static_cast<unsigned long>(u & 0xffffffffu);
    }
    if (j.is_number_integer()) return Int(j.get<long>());
    throw ArgumentError("expected an integer in JSON");
}

namespace {

json dist_json(const WeightDistribution& wd) {
    json o = json::object();
    for (auto w : wd.nonzero_weights()) o[std::to_string(w)] = int_json(wd[w]);
    return o;
}

WeightDistribution dist_from(const json& j, std::size_t n) {
    WeightDistribution wd;
    wd.counts.assign(n + 1, 0);
    for (auto it = j.begin(); it != j.end(); ++it) wd.counts.at(std::stoul(it.key())) = int_from_json(it.value());
    return wd;
}

json designs_json(const DesignReport& d) {
    json s = json::object();
    for (const auto& [w, t] : d.strength) s[std::to_string(w)] = t;
    return {{"strength", s}, {"delta", d.delta}, {"s", d.s}};
}

DesignReport designs_from(const json& j) {
    DesignReport d;
    for (auto it = j.at("strength").begin(); it != j.at("strength").end(); ++it)
        d.strength[std::stoul(it.key())] = it.value().get<std::size_t>();
    d.delta = j.at("delta").get<std::size_t>();
    d.s = j.at("s").get<std::size_t>();
    return d;
}

template <class T>
json opt_json(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> opt_from(const json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<T>();
}

}  // namespace

AnalysisReport analyze(const BinaryCode& c, const AnalyzeOptions& opt) {
    AnalysisReport r;
    r.n = c.length();
    r.k = c.dimension();
    const auto cert = certify_with_code(c, opt.enumeration, opt.max_t);
    r.weights = cert.wd;
    r.dual_weights = cert.dual_wd;
    r.status = cert.status;
    r.designs = cert.designs;
    r.dual_designs = cert.dual_designs;
    r.extras = cert.extras;
    for (std::size_t i = 1; i <= r.n; ++i)
        if (sgn(r.weights[i]) != 0) {
            r.d = i;
            break;
        }
    r.d_perp = cert.status.d_perp;
    r.notes.push_back("delta and s aggregate over weights 0 < w < n; w = n is reported but excluded");
    if (!cert.note.empty()) r.notes.push_back(cert.note);

    // Distribution 0, d, n/2, n-d, n.
    const auto nz = r.weights.nonzero_weights();
    const long n = static_cast<long>(r.n);
    if (n % 2 == 0 && nz.size() == 5 && static_cast<long>(nz[2]) * 2 == n && nz[1] + nz[3] == r.n &&
        r.weights[nz[1]] == r.weights[nz[3]]) {
        FiveWeightCheck f;
        f.d = static_cast<long>(nz[1]);
        f.alpha = r.weights[nz[1]];
        f.beta = r.weights[nz[2]];
        const auto cs = constraint_system(n, f.d, Rat(f.alpha), Rat(f.beta));
        f.k = cs.k;
        f.dimension_ok = cs.k && *cs.k == r.k;
        for (int i = 1; i <= 4 && 2 * static_cast<std::size_t>(i) < *r.d_perp; ++i)
            f.residuals.push_back(cs.residuals[static_cast<std::size_t>(i - 1)]);
        r.five_weight = f;
    }
    return r;
}

json to_json(const AnalysisReport& r) {
    json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["d"] = opt_json(r.d);
    j["d_perp"] = opt_json(r.d_perp);
    j["weight_distribution"] = dist_json(r.weights);
    j["dual_weight_distribution"] = dist_json(r.dual_weights);
    j["am"] = {{"d_perp", r.status.d_perp},
               {"t_inequality", r.status.t_inequality},
               {"t_equality", opt_json(r.status.t_equality)},
               {"gap", opt_json(r.status.gap)},
               {"case", opt_json(r.status.case_label)}};
    j["designs"] = designs_json(r.designs);
    j["dual_designs"] = designs_json(r.dual_designs);
    json ex = json::array();
    for (const auto& e : r.extras)
        ex.push_back({{"weight", e.weight},
                      {"criterion", e.criterion},
                      {"nonempty", e.nonempty},
                      {"strength", e.strength},
                      {"confirmed", e.confirmed}});
    j["certified_extras"] = ex;
    if (r.five_weight) {
        const auto& f = *r.five_weight;
        json res = json::array();
        for (const auto& q : f.residuals) res.push_back(q.get_str());
        j["five_weight"] = {{"d", f.d},
                            {"alpha", int_json(f.alpha)},
                            {"beta", int_json(f.beta)},
                            {"k", opt_json(f.k)},
                            {"dimension_ok", f.dimension_ok},
                            {"residuals", res}};
    } else {
        j["five_weight"] = nullptr;
    }
    j["notes"] = r.notes;
    return j;
}

AnalysisReport analysis_from_json(const json& j) {
    AnalysisReport r;
    r.n = j.at("n").get<std::size_t>();
    r.k = j.at("k").get<std::size_t>();
    r.d = opt_from<std::size_t>(j, "d");
    r.d_perp = opt_from<std::size_t>(j, "d_perp");
    r.weights = dist_from(j.at("weight_distribution"), r.n);
    r.dual_weights = dist_from(j.at("dual_weight_distribution"), r.n);
    const auto& am = j.at("am");
    r.status.d_perp = am.at("d_perp").get<std::size_t>();
    r.status.t_inequality = am.at("t_inequality").get<std::size_t>();
    r.status.t_equality = opt_from<std::size_t>(am, "t_equality");
    r.status.gap = opt_from<std::size_t>(am, "gap");
    r.status.case_label = opt_from<std::string>(am, "case");
    r.designs = designs_from(j.at("designs"));
    r.dual_designs = designs_from(j.at("dual_designs"));
    for (const auto& e : j.at("certified_extras"))
        r.extras.push_back({e.at("weight").get<long>(), e.at("criterion").get<std::string>(),
                            e.at("nonempty").get<bool>(), e.at("strength").get<std::size_t>(),
                            e.at("confirmed").get<bool>()});
    if (!j.at("five_weight").is_null()) {
        const auto& f = j.at("five_weight");
        FiveWeightCheck c;
        c.d = f.at("d").get<long>();
        c.alpha = int_from_json(f.at("alpha"));
        c.beta = int_from_json(f.at("beta"));
        c.k = opt_from<std::size_t>(f, "k");
        c.dimension_ok = f.at("dimension_ok").get<bool>();
        for (const auto& q : f.at("residuals")) {
            Rat v(q.get<std::string>());
            v.canonicalize();
            c.residuals.push_back(v);
        }
        r.five_weight = c;
    }
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
}

json to_json(const DetReport& r) {
    json ids = json::array();
    for (const auto& i : r.identities) {
        json o = {{"name", i.name},
                  {"pass", i.pass},
                  {"constant", i.constant.get_str()},
                  {"spot_check", i.spot_check}};
        o["difference"] = i.difference.to_string();
        ids.push_back(o);
    }
    json el = json::array();
    for (const auto& e : r.elimination_ratio) el.push_back(e ? json(e->get_str()) : json(nullptr));
    return {{"identities", ids}, {"elimination_ratio", el}, {"pass", r.all_pass()}};
}

json to_json(const GolayCertificate& g) {
    auto cand = [](const GolayCandidate& c) {
        json o = {{"m", c.m}, {"n", opt_json(c.n)}, {"reasons", c.reasons}, {"survives", c.survives()}};
        o["d"] = opt_json(c.params.d);
        o["alpha"] = c.params.alpha ? json(c.params.alpha->get_str()) : json(nullptr);
        o["beta"] = c.params.beta ? json(c.params.beta->get_str()) : json(nullptr);
        o["k"] = opt_json(c.params.k);
        return o;
    };
    json all = json::array(), surv = json::array();
    for (const auto& c : g.candidates) all.push_back(cand(c));
    for (const auto& c : g.survivors) surv.push_back(cand(c));
    return {{"candidates", all}, {"survivors", surv}, {"unique", g.survivors.size() == 1}};
}

json to_json(const std::vector<SearchRecord>& recs) {
    json a = json::array();
    for (const auto& r : recs)
        a.push_back({{"n", r.n},
                     {"d", r.d},
                     {"case", case_token(r.dperp_t)},
                     {"weights", r.weights},
                     {"provenance", r.provenance},
                     {"k", opt_json(r.k)}});
    return a;
}

std::string to_csv(const std::vector<SearchRecord>& recs) {
    std::ostringstream os;
    os << "n,d,weights,provenance\n";
    for (const auto& r : recs) {
        os << r.n << ',' << r.d << ',';
        for (std::size_t i = 0; i < r.weights.size(); ++i) os << (i ? ";" : "") << r.weights[i];
        os << ',';
        for (std::size_t i = 0; i < r.provenance.size(); ++i) os << (i ? ";" : "") << r.provenance[i];
        os << '\n';
    }
    return os.str();
}

}  // namespace amkit
