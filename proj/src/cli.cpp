#include "homshift/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "homshift/balanced.hpp"
#include "homshift/criteria.hpp"
#include "homshift/error.hpp"
#include "homshift/io.hpp"
#include "homshift/renorm.hpp"
#include "homshift/weights.hpp"

namespace homshift::cli {

namespace {

using io::format_double;
using io::json;

struct Options {
  std::string config_path;
  std::string out_path;
  std::string format = "json";
  std::optional<long long> seed;
  std::optional<int> levels;
  std::optional<long long> samples;
};

struct Report {
  json doc;
  std::string csv;
  int exit_code = kBounded;
};

json load_config(const Options& opt, const std::string& command) {
  json doc = json::object();
  if (!opt.config_path.empty()) {
    std::ifstream in(opt.config_path);
    if (!in) throw ConfigError("--config", "cannot open '" + opt.config_path + "'");
    try {
      doc = json::parse(in);
    } catch (const json::parse_error& e) {
      throw ConfigError("--config", std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("", "config must be a JSON object");
  }
  // Effective config: command first, then file contents, then flag overrides.
  json effective = json::object();
  effective["command"] = command;
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (it.key() != "command") effective[it.key()] = it.value();
  }
  if (opt.levels) effective["levels"] = *opt.levels;
  if (opt.seed) effective["seed"] = *opt.seed;
  if (opt.samples) effective["samples"] = *opt.samples;
  return effective;
}

int get_int(json& cfg, const char* key, int fallback, int lo, int hi) {
  if (!cfg.contains(key)) cfg[key] = fallback;
  const auto& v = cfg[key];
  if (!v.is_number_integer()) throw ConfigError(key, "expected an integer");
  const auto x = v.get<long long>();
  if (x < lo || x > hi) {
    throw ConfigError(key, std::to_string(x) + " outside " + std::to_string(lo) + ".." + std::to_string(hi));
  }
  return static_cast<int>(x);
}

std::uint64_t get_seed(json& cfg) {
  if (!cfg.contains("seed")) cfg["seed"] = 0;
  if (!cfg["seed"].is_number_integer()) throw ConfigError("seed", "expected an integer");
  return static_cast<std::uint64_t>(cfg["seed"].get<long long>());
}

double get_double(json& cfg, const char* key, double fallback) {
  if (!cfg.contains(key)) cfg[key] = fallback;
  if (!cfg[key].is_number()) throw ConfigError(key, "expected a number");
  return cfg[key].get<double>();
}

const json& need(const json& cfg, const char* key) {
  if (!cfg.contains(key)) throw ConfigError(key, "missing field");
  return cfg[key];
}

VerdictThresholds get_thresholds(json& cfg) {
  const auto t = io::thresholds_from_json(cfg.contains("thresholds") ? cfg["thresholds"] : json(), "thresholds");
  cfg["thresholds"] = io::to_json(t);
  return t;
}

int verdict_exit(Classification c) {
  switch (c) {
    case Classification::bounded: return kBounded;
    case Classification::divergent: return kDivergent;
    case Classification::inconclusive: return kInconclusive;
  }
  return kError;
}

std::string quoted(const MultiIndex& alpha) { return "\"" + alpha.to_string() + "\""; }

std::string csv_preamble(const json& cfg) { return "# config: " + cfg.dump() + "\n"; }

Report cmd_analyze(json cfg) {
  const WeightFamily family = io::weights_from_json(need(cfg, "weights"), "weights");
  const int levels = get_int(cfg, "levels", 20, 1, kMaxDegree);
  if (levels > family.cap()) {
    throw ConfigError("levels", "N = " + std::to_string(levels) + " exceeds the family cap " + std::to_string(family.cap()));
  }
  const double max_shift = get_double(cfg, "max_shift_bound", 1e3);
  const auto thresholds = get_thresholds(cfg);

  const auto shift = shift_bound(family, levels - 1);
  for (std::size_t j = 0; j < shift.size(); ++j) {
    if (shift[j] > max_shift) {
      throw ConfigError("weights", "shift ratio in direction " + std::to_string(j + 1) + " is " + format_double(shift[j]) +
                                       ", above max_shift_bound; the multishift looks unbounded");
    }
  }

  Report r;
  json rows = json::array();
  std::ostringstream csv;
  csv << "n,max_up,argmax_up,max_down,argmax_down,b_n\n";
  for (int n = 0; n <= levels; ++n) {
    const auto lvl = level_b(family, n);
    rows.push_back(io::to_json(lvl));
    csv << n << ',' << format_double(lvl.max_up) << ',' << quoted(lvl.argmax_up) << ',' << format_double(lvl.max_down)
        << ',' << quoted(lvl.argmax_down) << ',' << format_double(lvl.b) << '\n';
  }
  const auto verdict = weak_homogeneity_diagnosis(family, levels, thresholds);
  const auto homogeneity = is_ud_homogeneous(family, levels, 0.0);
  r.doc = {{"config", cfg},
           {"levels", rows},
           {"shift_bound", shift},
           {"ud_homogeneous", io::to_json(homogeneity)},
           {"verdict", io::to_json(verdict)}};
  r.csv = csv_preamble(cfg) + "# verdict: " + io::to_json(verdict).dump() + "\n" + csv.str();
  r.exit_code = verdict_exit(verdict.classification);
  return r;
}

Report cmd_cu_norm(json cfg) {
  const WeightFamily family = io::weights_from_json(need(cfg, "weights"), "weights");
  const int levels = get_int(cfg, "levels", 8, 0, kMaxDegree);
  if (levels > family.cap()) throw ConfigError("levels", "exceeds the family cap");
  const UnitaryMatrix u = io::unitary_from_json(need(cfg, "unitary"), family.dim(), "unitary");
  const double slack = get_double(cfg, "bound_slack", 1e-9);

  Report r;
  json rows = json::array();
  std::ostringstream csv;
  csv << "n,norm,bound,bound_ok\n";
  bool all_ok = true;
  for (int n = 0; n <= levels; ++n) {
    const double norm = cu_restricted_norm(u, family, n);
    const double bound = level_b(family, n).b;
    const bool ok = norm <= bound + slack;
    all_ok = all_ok && ok;
    rows.push_back({{"n", n}, {"norm", norm}, {"bound", bound}, {"bound_ok", ok}});
    csv << n << ',' << format_double(norm) << ',' << format_double(bound) << ',' << (ok ? "true" : "false") << '\n';
  }
  r.doc = {{"config", cfg}, {"rows", rows}, {"all_bound_ok", all_ok}};
  r.csv = csv_preamble(cfg) + csv.str();
  return r;
}

Report cmd_homogenize(json cfg) {
  const WeightFamily family = io::weights_from_json(need(cfg, "weights"), "weights");
  const int levels = get_int(cfg, "levels", 12, 0, kMaxDegree);
  if (levels > family.cap()) throw ConfigError("levels", "exceeds the family cap");
  const int samples = get_int(cfg, "samples", 500, 0, 10'000'000);
  const std::uint64_t seed = get_seed(cfg);

  const auto h = homogenize(family, levels, static_cast<std::size_t>(samples), seed);
  const auto norms = similarity_norms(family, levels);
  Report r;
  json bounds = json::array();
  std::ostringstream csv;
  csv << "n,c_n,ratio_lo,ratio_hi,mc_residual,a_tilde\n";
  for (int n = 0; n <= levels; ++n) {
    const auto i = static_cast<std::size_t>(n);
    bounds.push_back({h.ratio_bounds[i].lo, h.ratio_bounds[i].hi});
    csv << n << ',' << format_double(h.schur_constants[i]) << ',' << format_double(h.ratio_bounds[i].lo) << ','
        << format_double(h.ratio_bounds[i].hi) << ',' << (h.mc_residuals.empty() ? "" : format_double(h.mc_residuals[i]))
        << ',' << format_double(h.tilde.radial_coefficients()[i]) << '\n';
  }
  r.doc = {{"config", cfg},
           {"c", h.schur_constants},
           {"ratio_bounds", bounds},
           {"mc_residuals", h.mc_residuals},
           {"seed", seed},
           {"samples", samples},
           {"beta_tilde", io::to_json(h.tilde)},
           {"tilde_ud_homogeneous", is_ud_homogeneous(h.tilde, levels, 0.0).homogeneous},
           {"similarity_norms", {{"forward", norms.forward}, {"inverse", norms.inverse}}}};
  r.csv = csv_preamble(cfg) + csv.str();
  return r;
}

Report cmd_balanced(json cfg) {
  const int levels = get_int(cfg, "levels", 10, 0, kMaxDegree - 2);
  const double tol = get_double(cfg, "tol", 1e-10);
  std::optional<SliceRepresentation> rep;
  if (cfg.contains("slice")) {
    const json& s = cfg["slice"];
    const int d = s.contains("d") ? static_cast<int>(s["d"].get<long long>())
                                  : (cfg.contains("weights") ? cfg["weights"].value("d", 0) : 0);
    if (d < 1 || d > kMaxDimension) throw ConfigError("slice.d", "dimension required in 1..4");
    rep = SliceRepresentation{io::measure_from_json(need(s, "measure"), d, "slice.measure"),
                              io::gamma_from_json(need(s, "gamma"), "slice.gamma")};
  }
  if (!cfg.contains("weights") && !rep) throw ConfigError("weights", "missing field (or give a slice)");
  const WeightFamily family = cfg.contains("weights") ? io::weights_from_json(cfg["weights"], "weights")
                                                      : slice_family(*rep, std::min(rep->gamma.cap(), rep->measure.cap()));
  if (levels + 2 > family.cap()) throw ConfigError("levels", "levels + 2 exceeds the family cap");

  const auto check = is_spherically_balanced(family, levels, tol);
  Report r;
  json doc{{"config", cfg}, {"balanced", check.balanced}, {"max_relative_spread", check.max_relative_spread}};
  if (!check.balanced) {
    doc["witness"] = {{"alpha", io::to_json(*check.alpha)},
                      {"i", check.i + 1},
                      {"j", check.j + 1},
                      {"sum_i", check.sum_i},
                      {"sum_j", check.sum_j}};
  }
  std::ostringstream csv;
  csv << "n,max_relative_spread\n";
  for (int n = 0; n <= levels; ++n) {
    csv << n << ',' << format_double(check.level_spread[static_cast<std::size_t>(n)]) << '\n';
  }
  if (rep && cfg.contains("weights")) {
    const auto sc = verify_slice(family, *rep, std::min({levels, rep->gamma.cap(), rep->measure.cap()}), tol);
    doc["slice"] = {{"matches", sc.matches},
                    {"max_relative_error", sc.max_relative_error},
                    {"worst", sc.worst ? io::to_json(*sc.worst) : json()}};
  }
  r.doc = std::move(doc);
  r.csv = csv_preamble(cfg) + csv.str();
  r.exit_code = check.balanced ? kBounded : kDivergent;
  return r;
}

Report cmd_sphere(json cfg) {
  const int d = get_int(cfg, "d", 2, 1, kMaxDimension);
  const ReinhardtMeasure mu = io::measure_from_json(need(cfg, "measure"), d, "measure");
  const int levels = get_int(cfg, "levels", 15, 0, kMaxDegree);
  if (levels > mu.cap()) throw ConfigError("levels", "exceeds the measure cap " + std::to_string(mu.cap()));
  const int samples = get_int(cfg, "samples", 10'000, 1, 100'000'000);
  const int haar_samples = get_int(cfg, "haar_samples", 2000, 1, 10'000'000);
  const std::uint64_t seed = get_seed(cfg);
  const auto thresholds = get_thresholds(cfg);

  std::vector<UnitaryMatrix> unitaries;
  if (cfg.contains("unitaries")) {
    const auto& arr = cfg["unitaries"];
    if (!arr.is_array()) throw ConfigError("unitaries", "expected an array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      unitaries.push_back(io::unitary_from_json(arr[i], d, "unitaries[" + std::to_string(i) + "]"));
    }
  } else {
    json defaults = json::array();
    for (int i = 0; i < 5; ++i) {
      const auto s = static_cast<long long>(derive_seed(seed, static_cast<std::uint64_t>(i)) >> 1);
      defaults.push_back({{"kind", "haar"}, {"seed", s}});
      unitaries.push_back(io::unitary_from_json(defaults.back(), d));
    }
    cfg["unitaries"] = defaults;
  }

  const auto szego = szego_similarity_check(mu, levels, thresholds);
  Report r;
  json doc{{"config", cfg},
           {"szego",
            {{"k1", szego.k1},
             {"argmin", io::to_json(szego.argmin)},
             {"K1", szego.k1_upper},
             {"argmax", io::to_json(szego.argmax)},
             {"formal", szego.formal},
             {"verdict", io::to_json(szego.verdict)}}}};

  if (const auto& w = mu.density()) {
    json rn = json::array();
    for (std::size_t i = 0; i < unitaries.size(); ++i) {
      const auto range = rn_bound_sample(*w, unitaries[i], static_cast<std::size_t>(samples), derive_seed(seed, 1000 + i));
      rn.push_back({{"k", range.min}, {"K", range.max}});
    }
    doc["rn_bounds"] = std::move(rn);
    std::vector<MultiIndex> alphas{MultiIndex::zero(d)};
    for (int j = 0; j < d; ++j) alphas.push_back(unit(d, j));
    const auto avg = haar_average_density(*w, static_cast<std::size_t>(haar_samples), seed, alphas);
    json alist = json::array();
    for (const auto& a : avg.alphas) alist.push_back(io::to_json(a));
    doc["haar_average"] = {{"alphas", alist},
                           {"estimates", avg.estimates},
                           {"sigma_moments", avg.sigma_moments},
                           {"ratios", avg.ratios},
                           {"common_constant", avg.common_constant},
                           {"max_relative_deviation", avg.max_relative_deviation},
                           {"samples", avg.samples}};
  }

  std::ostringstream csv;
  csv << "n,b_n,ratio_min,ratio_max\n";
  const WeightFamily family = mu.as_family(levels);
  for (int n = 0; n <= levels; ++n) {
    double lo = INFINITY, hi = 0.0;
    for (const auto& alpha : enumerate_level(d, n)) {
      const double ratio = std::sqrt(mu.moment(alpha) / sigma_moment(alpha));
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    csv << n << ',' << format_double(level_b(family, n).b) << ',' << format_double(lo) << ',' << format_double(hi) << '\n';
  }
  r.doc = std::move(doc);
  r.csv = csv_preamble(cfg) + "# verdict: " + io::to_json(szego.verdict).dump() + "\n" + csv.str();
  r.exit_code = verdict_exit(szego.verdict.classification);
  return r;
}

Report cmd_families(json cfg) {
  const json families = json::array({
      {{"family", "radial"}, {"fields", {"d", "a"}}, {"beta", "a_n sqrt((d-1)! alpha! / (d-1+n)!)"}},
      {{"family", "drury_arveson"}, {"fields", {"d", "cap"}}, {"beta", "sqrt(alpha! / n!)"}},
      {{"family", "polydisc_hardy"}, {"fields", {"d", "cap"}}, {"beta", "1"}},
      {{"family", "table"}, {"fields", {"d", "cap", "entries"}}, {"beta", "explicit per multi-index"}},
  });
  Report r;
  r.doc = {{"config", cfg}, {"families", families}};
  std::ostringstream csv;
  csv << "family,beta\n";
  for (const auto& f : families) csv << f["family"].get<std::string>() << ",\"" << f["beta"].get<std::string>() << "\"\n";
  r.csv = csv.str();
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Diagnostics for weakly U(d)-homogeneous weighted multishifts"};
  app.require_subcommand(1);
  Options opt;
  long long seed = 0, samples = 0;
  int levels = 0;

  const std::vector<std::pair<std::string, std::string>> commands{
      {"analyze", "Level quantities b_n and the boundedness verdict"},
      {"cu-norm", "Norms of C_u on Hom(n) against the b_n bound"},
      {"homogenize", "Similar U(d)-homogeneous weights from Haar averaging"},
      {"balanced", "Spherical balance and slice representation checks"},
      {"sphere", "Reinhardt measure diagnostics against the Szego space"},
      {"families", "List built-in weight families"}};
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--config", opt.config_path, "JSON run configuration")->check(CLI::ExistingFile);
    sub->add_option("--out", opt.out_path, "Write the report here instead of stdout");
    sub->add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--seed", seed, "Random seed");
    sub->add_option("--levels", levels, "Highest degree N");
    sub->add_option("--samples", samples, "Monte Carlo sample count");
  }

  std::vector<std::string> storage{"homshift"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kError;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  if (sub->count("--seed")) opt.seed = seed;
  if (sub->count("--levels")) opt.levels = levels;
  if (sub->count("--samples")) opt.samples = samples;

  try {
    json cfg = load_config(opt, command);
    if (command != "families" && opt.config_path.empty()) throw ConfigError("--config", "required for " + command);
    Report report;
    if (command == "analyze") report = cmd_analyze(cfg);
    else if (command == "cu-norm") report = cmd_cu_norm(cfg);
    else if (command == "homogenize") report = cmd_homogenize(cfg);
    else if (command == "balanced") report = cmd_balanced(cfg);
    else if (command == "sphere") report = cmd_sphere(cfg);
    else report = cmd_families(cfg);

    const std::string text = opt.format == "csv" ? report.csv : report.doc.dump(2) + "\n";
    if (opt.out_path.empty()) {
      out << text;
    } else {
      std::ofstream file(opt.out_path, std::ios::binary);
      if (!file) throw ConfigError("--out", "cannot write '" + opt.out_path + "'");
      file << text;
    }
    return report.exit_code;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kError;
}

}  // namespace homshift::cli
