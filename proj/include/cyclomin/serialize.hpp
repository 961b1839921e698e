#pragma once

#include <string>

#include <json.hpp>

#include "cyclomin/decision.hpp"
#include "cyclomin/experiments.hpp"

namespace cyclomin {

/// JSON documents carry {"schema": "cyclomin/1"} at top level.
inline constexpr const char* kSchemaTag = "cyclomin/1";

using json = nlohmann::json;

json to_json(const Permutation& p);
json to_json(const PermClass& p);
json to_json(const WeightSequence& w);
json to_json(const CubicPoly& q);
json to_json(const RadiusResult& r);
json to_json(const GershBounds& b);
json to_json(const ComparisonVerdict& v);
json to_json(const AnalyticOutcome& outcome);
json to_json(const ExperimentReport& report);
json to_json(const PaperVerification& verification);

std::string to_string(Relation r);
std::string to_string(Rule r);
std::string to_string(RadiusMethod m);
std::string to_string(WeightDistribution d);

Permutation permutation_from_json(const json& j);
WeightSequence weights_from_json(const json& j);

/// "1,5,3,4,2,6"
std::string perm_csv(const Permutation& p);
std::string perm_csv(const PermClass& p);

/// One row of decimals, full round-trip precision.
std::string weights_csv(const WeightSequence& w);

/// One row per observed class: perm (quoted), count, frequency. At n = 6 the
/// five canonical classes come first, in their canonical order; other n
/// orders by descending count, ties lexicographic.
std::string report_csv(const ExperimentReport& report);

/// Ordered (class, count) rows as used by report_csv and the JSON counts.
std::vector<std::pair<PermClass, std::int64_t>> ordered_counts(
    const ExperimentReport& report);

}  // namespace cyclomin
