#include "homshift/io.hpp"

#include <cmath>
#include <cstdio>

#include "homshift/error.hpp"

namespace homshift::io {

namespace {

std::string field(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string item(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const json& require(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw ConfigError(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw ConfigError(field(path, key), "missing field");
  return *it;
}

double as_number(const json& j, const std::string& path) {
  if (!j.is_number()) throw ConfigError(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ConfigError(path, "expected a finite number");
  return v;
}

long long as_integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ConfigError(path, "expected an integer");
  return j.get<long long>();
}

const json& as_array(const json& j, const std::string& path) {
  if (!j.is_array()) throw ConfigError(path, "expected an array");
  return j;
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) throw ConfigError(path, "expected a string");
  return j.get<std::string>();
}

std::vector<double> number_array(const json& j, const std::string& path) {
  std::vector<double> out;
  const auto& arr = as_array(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(as_number(arr[i], item(path, i)));
  return out;
}

int dimension_field(const json& j, const std::string& path) {
  const auto d = as_integer(require(j, "d", path), field(path, "d"));
  if (d < 1 || d > kMaxDimension) {
    throw ConfigError(field(path, "d"), "must lie in 1.." + std::to_string(kMaxDimension));
  }
  return static_cast<int>(d);
}

int cap_field(const json& j, const std::string& path, int fallback) {
  if (!j.contains("cap")) return fallback;
  const auto cap = as_integer(j["cap"], field(path, "cap"));
  if (cap < 0 || cap > kMaxDegree) throw ConfigError(field(path, "cap"), "must lie in 0.." + std::to_string(kMaxDegree));
  return static_cast<int>(cap);
}

// Re-throws library errors raised while building a value as ConfigErrors at `path`.
template <class F>
auto at_path(const std::string& path, F&& build) {
  try {
    return build();
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(path, e.what());
  }
}

}  // namespace

MultiIndex multi_index_from_json(const json& j, int d, const std::string& path) {
  const auto& arr = as_array(j, path);
  if (static_cast<int>(arr.size()) != d) throw ConfigError(path, "expected " + std::to_string(d) + " components");
  std::vector<int> c;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto v = as_integer(arr[i], item(path, i));
    if (v < 0 || v > kMaxDegree) throw ConfigError(item(path, i), "exponent out of range");
    c.push_back(static_cast<int>(v));
  }
  return MultiIndex(std::move(c));
}

json to_json(const MultiIndex& alpha) { return json(alpha.components()); }

WeightFamily weights_from_json(const json& j, const std::string& path) {
  const int d = dimension_field(j, path);
  const std::string family = as_string(require(j, "family", path), field(path, "family"));
  if (family == "radial") {
    auto a = number_array(require(j, "a", path), field(path, "a"));
    if (j.contains("cap")) {
      const int cap = cap_field(j, path, 0);
      if (static_cast<std::size_t>(cap) + 1 > a.size()) throw ConfigError(field(path, "cap"), "exceeds the length of a");
      a.resize(static_cast<std::size_t>(cap) + 1);
    }
    if (a.size() > static_cast<std::size_t>(kMaxDegree) + 1) {
      throw ConfigError(field(path, "a"), "longer than the degree cap " + std::to_string(kMaxDegree) + " allows");
    }
    return at_path(field(path, "a"), [&] { return WeightFamily::radial(d, std::move(a)); });
  }
  if (family == "drury_arveson") return WeightFamily::drury_arveson(d, cap_field(j, path, kMaxDegree));
  if (family == "polydisc_hardy") return WeightFamily::polydisc_hardy(d, cap_field(j, path, kMaxDegree));
  if (family == "table") {
    const int cap = static_cast<int>(as_integer(require(j, "cap", path), field(path, "cap")));
    if (cap < 0 || cap > kMaxDegree) throw ConfigError(field(path, "cap"), "out of range");
    const std::string entries_path = field(path, "entries");
    const auto& entries = as_array(require(j, "entries", path), entries_path);
    std::map<MultiIndex, double> table;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const std::string p = item(entries_path, i);
      auto alpha = multi_index_from_json(require(entries[i], "alpha", p), d, field(p, "alpha"));
      const double beta = as_number(require(entries[i], "beta", p), field(p, "beta"));
      if (!(beta > 0.0)) throw ConfigError(field(p, "beta"), "weights must be positive");
      if (!table.emplace(std::move(alpha), beta).second) throw ConfigError(field(p, "alpha"), "duplicate entry");
    }
    return at_path(entries_path, [&] { return WeightFamily::table(d, cap, std::move(table)); });
  }
  throw ConfigError(field(path, "family"), "unknown family '" + family + "'");
}

json to_json(const WeightFamily& family) {
  json j;
  j["d"] = family.dim();
  j["family"] = to_string(family.kind());
  switch (family.kind()) {
    case WeightFamily::Kind::radial: j["a"] = family.radial_coefficients(); break;
    case WeightFamily::Kind::table: {
      json entries = json::array();
      for (const auto& [alpha, beta] : family.table_entries()) entries.push_back({{"alpha", to_json(alpha)}, {"beta", beta}});
      j["entries"] = std::move(entries);
      break;
    }
    default: break;
  }
  j["cap"] = family.cap();
  return j;
}

UnitaryMatrix unitary_from_json(const json& j, int d, const std::string& path) {
  if (!j.is_object()) throw ConfigError(path, "expected an object");
  const std::string kind = j.contains("kind") ? as_string(j["kind"], field(path, "kind")) : "explicit";
  if (kind == "haar") {
    const auto seed = as_integer(require(j, "seed", path), field(path, "seed"));
    return haar_sample(d, static_cast<std::uint64_t>(seed));
  }
  if (kind == "identity") return UnitaryMatrix::identity(d);
  if (kind == "fourier") return UnitaryMatrix::fourier(d);
  if (kind == "rotation") {
    const double angle = as_number(require(j, "angle", path), field(path, "angle"));
    const std::string plane_path = field(path, "plane");
    const auto& plane = as_array(require(j, "plane", path), plane_path);
    if (plane.size() != 2) throw ConfigError(plane_path, "expected two coordinates");
    const auto a = as_integer(plane[0], item(plane_path, 0));
    const auto b = as_integer(plane[1], item(plane_path, 1));
    return at_path(plane_path, [&] {
      return UnitaryMatrix::rotation(d, angle, static_cast<int>(a) - 1, static_cast<int>(b) - 1);
    });
  }
  if (kind == "permutation") {
    const std::string pi_path = field(path, "pi");
    const auto& arr = as_array(require(j, "pi", path), pi_path);
    if (static_cast<int>(arr.size()) != d) throw ConfigError(pi_path, "expected " + std::to_string(d) + " entries");
    std::vector<int> pi;
    for (std::size_t i = 0; i < arr.size(); ++i) pi.push_back(static_cast<int>(as_integer(arr[i], item(pi_path, i))) - 1);
    return at_path(pi_path, [&] { return UnitaryMatrix::permutation(pi); });
  }
  if (kind == "torus") {
    const std::string phases_path = field(path, "phases");
    auto phases = number_array(require(j, "phases", path), phases_path);
    if (static_cast<int>(phases.size()) != d) throw ConfigError(phases_path, "expected " + std::to_string(d) + " entries");
    return at_path(phases_path, [&] { return UnitaryMatrix::torus_angles(phases); });
  }
  if (kind == "explicit") {
    const std::string entries_path = field(path, "entries");
    const auto& rows = as_array(require(j, "entries", path), entries_path);
    if (static_cast<int>(rows.size()) != d) throw ConfigError(entries_path, "expected " + std::to_string(d) + " rows");
    Eigen::MatrixXcd m(d, d);
    for (int r = 0; r < d; ++r) {
      const std::string row_path = item(entries_path, static_cast<std::size_t>(r));
      const auto& row = as_array(rows[static_cast<std::size_t>(r)], row_path);
      if (static_cast<int>(row.size()) != d) throw ConfigError(row_path, "expected " + std::to_string(d) + " entries");
      for (int c = 0; c < d; ++c) {
        const std::string p = item(row_path, static_cast<std::size_t>(c));
        const auto& v = row[static_cast<std::size_t>(c)];
        if (v.is_array()) {
          if (v.size() != 2) throw ConfigError(p, "complex entries are [re, im]");
          m(r, c) = cdouble(as_number(v[0], item(p, 0)), as_number(v[1], item(p, 1)));
        } else {
          m(r, c) = as_number(v, p);
        }
      }
    }
    return at_path(entries_path, [&] { return UnitaryMatrix(std::move(m)); });
  }
  throw ConfigError(field(path, "kind"), "unknown unitary kind '" + kind + "'");
}

ReinhardtMeasure measure_from_json(const json& j, int d, const std::string& path) {
  const std::string kind = as_string(require(j, "kind", path), field(path, "kind"));
  if (kind == "sigma") return ReinhardtMeasure::sigma(d);
  if (kind == "density") {
    const std::string poly_path = field(path, "poly");
    const auto& poly = as_array(require(j, "poly", path), poly_path);
    std::vector<DensityTerm> terms;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const std::string p = item(poly_path, i);
      terms.push_back({multi_index_from_json(require(poly[i], "gamma", p), d, field(p, "gamma")),
                       as_number(require(poly[i], "coef", p), field(p, "coef"))});
    }
    return at_path(poly_path, [&] { return ReinhardtMeasure::with_density(Density(d, std::move(terms))); });
  }
  if (kind == "table") {
    const int cap = static_cast<int>(as_integer(require(j, "cap", path), field(path, "cap")));
    if (cap < 0 || cap > kMaxDegree) throw ConfigError(field(path, "cap"), "out of range");
    const std::string entries_path = field(path, "entries");
    const auto& entries = as_array(require(j, "entries", path), entries_path);
    std::map<MultiIndex, double> moments;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const std::string p = item(entries_path, i);
      auto alpha = multi_index_from_json(require(entries[i], "alpha", p), d, field(p, "alpha"));
      const double m = as_number(require(entries[i], "m", p), field(p, "m"));
      if (!moments.emplace(std::move(alpha), m).second) throw ConfigError(field(p, "alpha"), "duplicate entry");
    }
    return at_path(entries_path, [&] { return ReinhardtMeasure::moment_table(d, cap, std::move(moments)); });
  }
  throw ConfigError(field(path, "kind"), "unknown measure kind '" + kind + "'");
}

json to_json(const ReinhardtMeasure& measure) {
  json j;
  j["kind"] = to_string(measure.kind());
  if (measure.kind() == ReinhardtMeasure::Kind::density) {
    json poly = json::array();
    for (const auto& t : measure.density()->terms()) poly.push_back({{"gamma", to_json(t.gamma)}, {"coef", t.coef}});
    j["poly"] = std::move(poly);
  } else if (measure.kind() == ReinhardtMeasure::Kind::moment_table) {
    json entries = json::array();
    for (const auto& [alpha, m] : measure.table()) entries.push_back({{"alpha", to_json(alpha)}, {"m", m}});
    j["entries"] = std::move(entries);
    j["cap"] = measure.cap();
  }
  return j;
}

RadialWeights gamma_from_json(const json& j, const std::string& path) {
  const bool wrapped = j.is_object();
  const std::string p = wrapped ? field(path, "gamma") : path;
  auto values = number_array(wrapped ? require(j, "gamma", path) : j, p);
  return at_path(p, [&] { return RadialWeights(std::move(values)); });
}

VerdictThresholds thresholds_from_json(const json& j, const std::string& path) {
  VerdictThresholds t;
  if (j.is_null()) return t;
  if (!j.is_object()) throw ConfigError(path, "expected an object");
  if (j.contains("slope_min")) t.slope_min = as_number(j["slope_min"], field(path, "slope_min"));
  if (j.contains("growth_factor")) t.growth_factor = as_number(j["growth_factor"], field(path, "growth_factor"));
  if (j.contains("plateau_tol")) t.plateau_tol = as_number(j["plateau_tol"], field(path, "plateau_tol"));
  if (!(t.plateau_tol > 1.0)) throw ConfigError(field(path, "plateau_tol"), "must exceed 1");
  if (!(t.growth_factor > 0.0)) throw ConfigError(field(path, "growth_factor"), "must be positive");
  return t;
}

json to_json(const VerdictThresholds& t) {
  return {{"slope_min", t.slope_min}, {"growth_factor", t.growth_factor}, {"plateau_tol", t.plateau_tol}};
}

json to_json(const LevelDiagnostic& level) {
  return {{"n", level.n},
          {"max_up", level.max_up},
          {"argmax_up", to_json(level.argmax_up)},
          {"max_down", level.max_down},
          {"argmax_down", to_json(level.argmax_down)},
          {"b_n", level.b}};
}

json to_json(const BoundednessVerdict& verdict) {
  return {{"classification", to_string(verdict.classification)},
          {"first_level", verdict.first_level},
          {"series", verdict.series},
          {"fitted_slope", verdict.fitted_slope},
          {"fitted_intercept", verdict.fitted_intercept},
          {"window_start", verdict.window_start},
          {"max_value", verdict.max_value},
          {"tail_ratio", verdict.tail_ratio},
          {"thresholds", to_json(verdict.thresholds)}};
}

json to_json(const HomogeneityCheck& check) {
  json j{{"homogeneous", check.homogeneous}, {"level_values", check.level_values}};
  if (!check.homogeneous) {
    j["witness"] = {{"level", *check.level},
                    {"first", to_json(*check.first)},
                    {"first_value", check.first_value},
                    {"second", to_json(*check.second)},
                    {"second_value", check.second_value}};
  }
  return j;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace homshift::io
