#pragma once

// JSON descriptors for weight families, unitaries and measures, and the
// number formatting shared by every report.

#include <string>

#include <json.hpp>

#include "homshift/balanced.hpp"
#include "homshift/criteria.hpp"
#include "homshift/renorm.hpp"
#include "homshift/unitary.hpp"
#include "homshift/weights.hpp"

namespace homshift::io {

using json = nlohmann::ordered_json;

/// {"d", "family": radial|drury_arveson|polydisc_hardy|table, "a", "entries", "cap"}.
/// Errors carry the offending field path prefixed by `path`.
WeightFamily weights_from_json(const json& j, const std::string& path = "weights");
json to_json(const WeightFamily& family);

/// {"kind": haar|identity|rotation|permutation|torus|fourier|explicit, ...}; directions are 1-based.
UnitaryMatrix unitary_from_json(const json& j, int d, const std::string& path = "unitary");

/// {"kind": sigma|density|table, ...}
ReinhardtMeasure measure_from_json(const json& j, int d, const std::string& path = "measure");
json to_json(const ReinhardtMeasure& measure);

/// {"gamma": [g_0, ..., g_N]} or a bare array.
RadialWeights gamma_from_json(const json& j, const std::string& path = "gamma");

VerdictThresholds thresholds_from_json(const json& j, const std::string& path = "thresholds");
json to_json(const VerdictThresholds& t);

MultiIndex multi_index_from_json(const json& j, int d, const std::string& path);
json to_json(const MultiIndex& alpha);
json to_json(const LevelDiagnostic& level);
json to_json(const BoundednessVerdict& verdict);
json to_json(const HomogeneityCheck& check);

/// Shortest text with 17 significant digits ("%.17g").
std::string format_double(double v);

}  // namespace homshift::io
