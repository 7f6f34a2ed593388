#pragma once

#include "amkit/amcore.hpp"
#include "amkit/design.hpp"
#include "amkit/gf2code.hpp"
#include "amkit/search.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace amkit {

struct FiveWeightCheck {
    long d = 0;
    Int alpha, beta;
    std::optional<std::size_t> k;   // from 2 alpha + beta + 2 = 2^k
    bool dimension_ok = false;      // k equals the code dimension
    std::vector<Rat> residuals;     // coefficient equations i with 2i < d_perp, i <= 4

    friend bool operator==(const FiveWeightCheck&, const FiveWeightCheck&) = default;
};

struct AnalysisReport {
    std::size_t n = 0, k = 0;
    std::optional<std::size_t> d, d_perp;
    WeightDistribution weights, dual_weights;
    AmStatus status;
    DesignReport designs, dual_designs;
    std::vector<WeightCertification> extras;
    std::optional<FiveWeightCheck> five_weight;
    std::vector<std::string> notes;

    friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

struct AnalyzeOptions {
    EnumOptions enumeration;
    std::size_t max_t = SIZE_MAX;
};

AnalysisReport analyze(const BinaryCode& c, const AnalyzeOptions& opt = {});

nlohmann::json to_json(const AnalysisReport& r);
AnalysisReport analysis_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DetReport& r);
nlohmann::json to_json(const GolayCertificate& g);
nlohmann::json to_json(const std::vector<SearchRecord>& recs);
std::string to_csv(const std::vector<SearchRecord>& recs);

/// Integers as JSON numbers when they fit in 64 bits, else decimal strings.
nlohmann::json int_json(const Int& v);
Int int_from_json(const nlohmann::json& j);

}  // namespace amkit
