#include "homshift/balanced.hpp"

#include <algorithm>
#include <cmath>

#include "homshift/error.hpp"
#include "homshift/kernels.hpp"
#include "homshift/polyspace.hpp"

namespace homshift {

namespace {

constexpr std::size_t kPositivitySamples = 4096;
constexpr std::uint64_t kPositivitySeed = 0x5eed'0f'5a'3b1eULL;

double sum_of_squares_monomial(const Eigen::VectorXcd& z, const MultiIndex& gamma) {
  double v = 1.0;
  for (int j = 0; j < gamma.dim(); ++j) {
    const double r2 = std::norm(z(j));
    for (int k = 0; k < gamma[j]; ++k) v *= r2;
  }
  return v;
}

}  // namespace

double sigma_moment(const MultiIndex& alpha) {
  const int d = alpha.dim();
  require_degree(alpha.degree(), kMaxDegree, "moment degree");
  return to_double(factorial(d - 1) * factorial(alpha)) / to_double(factorial(d - 1 + alpha.degree()));
}

Density::Density(int d, std::vector<DensityTerm> terms) : d_(d), terms_(std::move(terms)) {
  require_dimension(d);
  if (terms_.empty()) throw InvalidArgument("density needs at least one term");
  for (const auto& t : terms_) {
    if (t.gamma.dim() != d) throw InvalidArgument("density term " + t.gamma.to_string() + " has wrong dimension");
    if (!std::isfinite(t.coef)) throw InvalidArgument("density coefficient must be finite");
    degree_ = std::max(degree_, t.gamma.degree());
  }
  require_degree(degree_, kMaxDegree, "density degree");

  std::mt19937_64 rng(derive_seed(kPositivitySeed, static_cast<std::uint64_t>(d)));
  sampled_min_ = INFINITY;
  sampled_max_ = -INFINITY;
  auto visit = [&](const Eigen::VectorXcd& z) {
    const double v = (*this)(z);
    sampled_min_ = std::min(sampled_min_, v);
    sampled_max_ = std::max(sampled_max_, v);
  };
  for (int j = 0; j < d; ++j) visit(Eigen::VectorXcd::Unit(d, j));
  for (std::size_t s = 0; s < kPositivitySamples; ++s) visit(uniform_sphere_point(d, rng));
  if (!(sampled_min_ > 0.0)) throw InvalidArgument("density is not strictly positive on the sphere sample");
}

double Density::operator()(const Eigen::VectorXcd& z) const {
  if (z.size() != d_) throw InvalidArgument("point dimension does not match density");
  double total = 0.0;
  for (const auto& t : terms_) total += t.coef * sum_of_squares_monomial(z, t.gamma);
  return total;
}

double density_moment(const Density& w, const MultiIndex& alpha) {
  if (alpha.dim() != w.dim()) throw InvalidArgument("multi-index dimension does not match density");
  require_degree(alpha.degree() + w.degree(), kMaxDegree, "density moment degree");
  double total = 0.0;
  for (const auto& t : w.terms()) total += t.coef * sigma_moment(alpha + t.gamma);
  if (!(total > 0.0)) throw NumericFailure("density moment is not positive at " + alpha.to_string());
  return total;
}

const char* to_string(ReinhardtMeasure::Kind kind) noexcept {
  switch (kind) {
    case ReinhardtMeasure::Kind::sigma: return "sigma";
    case ReinhardtMeasure::Kind::density: return "density";
    case ReinhardtMeasure::Kind::moment_table: return "table";
  }
  return "unknown";
}

ReinhardtMeasure ReinhardtMeasure::sigma(int d) {
  require_dimension(d);
  return {Kind::sigma, d, kMaxDegree};
}

ReinhardtMeasure ReinhardtMeasure::with_density(Density w) {
  ReinhardtMeasure m(Kind::density, w.dim(), kMaxDegree - w.degree());
  m.density_ = std::move(w);
  return m;
}

ReinhardtMeasure ReinhardtMeasure::moment_table(int d, int cap, std::map<MultiIndex, double> moments) {
  require_dimension(d);
  require_degree(cap, kMaxDegree, "measure cap");
  for (const auto& [alpha, m] : moments) {
    if (alpha.dim() != d || alpha.degree() > cap) throw InvalidArgument("moment entry " + alpha.to_string() + " out of range");
    if (!(m > 0.0) || !std::isfinite(m)) throw InvalidArgument("moment at " + alpha.to_string() + " must be positive");
  }
  for (int n = 0; n <= cap; ++n) {
    for (const auto& alpha : enumerate_level(d, n)) {
      if (!moments.contains(alpha)) throw InvalidArgument("moment table is missing " + alpha.to_string());
    }
  }
  ReinhardtMeasure m(Kind::moment_table, d, cap);
  m.table_ = std::move(moments);
  return m;
}

double ReinhardtMeasure::moment(const MultiIndex& alpha) const {
  if (alpha.dim() != d_) throw InvalidArgument("multi-index dimension does not match measure");
  require_degree(alpha.degree(), cap_, "moment degree");
  switch (kind_) {
    case Kind::sigma: return sigma_moment(alpha);
    case Kind::density: return density_moment(*density_, alpha);
    case Kind::moment_table: return table_.at(alpha);
  }
  return 0.0;
}

WeightFamily ReinhardtMeasure::as_family(int max_level) const {
  require_degree(max_level, cap_, "N");
  std::map<MultiIndex, double> entries;
  for (int n = 0; n <= max_level; ++n) {
    for (const auto& alpha : enumerate_level(d_, n)) entries.emplace(alpha, std::sqrt(moment(alpha)));
  }
  return WeightFamily::table(d_, max_level, std::move(entries));
}

RadialWeights::RadialWeights(std::vector<double> gamma) : gamma_(std::move(gamma)) {
  if (gamma_.empty()) throw InvalidArgument("gamma needs at least gamma_0");
  if (gamma_.front() != 1.0) throw InvalidArgument("gamma_0 must equal 1");
  for (double g : gamma_) {
    if (!(g > 0.0) || !std::isfinite(g)) throw InvalidArgument("gamma entries must be positive");
  }
  require_degree(cap(), kMaxDegree, "gamma length");
}

RadialWeights RadialWeights::constant(int cap) {
  return RadialWeights(std::vector<double>(static_cast<std::size_t>(cap) + 1, 1.0));
}

RadialWeights RadialWeights::sqrt_linear(int cap) {
  std::vector<double> g;
  for (int n = 0; n <= cap; ++n) g.push_back(std::sqrt(n + 1.0));
  return RadialWeights(std::move(g));
}

double RadialWeights::operator[](int n) const {
  require_degree(n, cap(), "gamma index");
  return gamma_[static_cast<std::size_t>(n)];
}

double compose_slice(const SliceRepresentation& rep, const MultiIndex& alpha) {
  return rep.gamma[alpha.degree()] * std::sqrt(rep.measure.moment(alpha));
}

WeightFamily slice_family(const SliceRepresentation& rep, int max_level) {
  require_degree(max_level, std::min(rep.gamma.cap(), rep.measure.cap()), "N");
  std::map<MultiIndex, double> entries;
  for (int n = 0; n <= max_level; ++n) {
    for (const auto& alpha : enumerate_level(rep.measure.dim(), n)) entries.emplace(alpha, compose_slice(rep, alpha));
  }
  return WeightFamily::table(rep.measure.dim(), max_level, std::move(entries));
}

BalanceCheck is_spherically_balanced(const WeightFamily& family, int max_level, double tol) {
  require_degree(max_level + 2, family.cap(), "balance check degree");
  const int d = family.dim();
  BalanceCheck out;
  for (int n = 0; n <= max_level; ++n) {
    out.level_spread.push_back(0.0);
    for (const auto& alpha : enumerate_level(d, n)) {
      std::vector<double> sums(static_cast<std::size_t>(d), 0.0);
      for (int i = 0; i < d; ++i) {
        const MultiIndex lifted = alpha.raised(i);
        const double base = family.beta(lifted);
        for (int k = 0; k < d; ++k) {
          const double b = family.beta(lifted.raised(k));
          sums[static_cast<std::size_t>(i)] += (b * b) / (base * base);
        }
      }
      const auto [lo, hi] = std::minmax_element(sums.begin(), sums.end());
      const double spread = (*hi - *lo) / *hi;
      out.max_relative_spread = std::max(out.max_relative_spread, spread);
      out.level_spread.back() = std::max(out.level_spread.back(), spread);
      if (out.balanced && spread > tol) {
        out.balanced = false;
        out.alpha = alpha;
        out.i = static_cast<int>(lo - sums.begin());
        out.j = static_cast<int>(hi - sums.begin());
        if (out.i > out.j) std::swap(out.i, out.j);
        out.sum_i = sums[static_cast<std::size_t>(out.i)];
        out.sum_j = sums[static_cast<std::size_t>(out.j)];
      }
    }
  }
  return out;
}

SliceCheck verify_slice(const WeightFamily& family, const SliceRepresentation& rep, int max_level, double tol) {
  if (family.dim() != rep.measure.dim()) throw InvalidArgument("family and measure dimensions differ");
  require_degree(max_level, std::min({family.cap(), rep.gamma.cap(), rep.measure.cap()}), "N");
  SliceCheck out;
  for (int n = 0; n <= max_level; ++n) {
    for (const auto& alpha : enumerate_level(family.dim(), n)) {
      const double b = family.beta(alpha);
      const double err = std::abs(b - compose_slice(rep, alpha)) / b;
      if (!out.worst || err > out.max_relative_error) {
        out.max_relative_error = err;
        out.worst = alpha;
      }
    }
  }
  out.matches = out.max_relative_error <= tol;
  return out;
}

RnRange rn_bound_sample(const Density& w, const UnitaryMatrix& u, std::size_t samples, std::uint64_t seed) {
  if (samples == 0) throw InvalidArgument("rn_bound_sample needs S >= 1");
  if (u.dim() != w.dim()) throw InvalidArgument("unitary and density dimensions differ");
  const UnitaryMatrix inv = u.inverse();
  std::mt19937_64 rng(derive_seed(seed, 0));
  RnRange out{INFINITY, 0.0};
  for (std::size_t s = 0; s < samples; ++s) {
    const Eigen::VectorXcd z = uniform_sphere_point(w.dim(), rng);
    const double base = w(z);
    if (!(base > 0.0)) throw InvalidArgument("density is not positive at a sample point");
    const double ratio = w(inv.apply(z)) / base;
    out.min = std::min(out.min, ratio);
    out.max = std::max(out.max, ratio);
  }
  return out;
}

SzegoCheck szego_similarity_check(const ReinhardtMeasure& mu, int max_level, const VerdictThresholds& thresholds) {
  require_degree(max_level, mu.cap(), "N");
  SzegoCheck out;
  out.formal = mu.kind() == ReinhardtMeasure::Kind::moment_table;
  bool seeded = false;
  for (int n = 0; n <= max_level; ++n) {
    for (const auto& alpha : enumerate_level(mu.dim(), n)) {
      const double r = std::sqrt(mu.moment(alpha) / sigma_moment(alpha));
      if (!seeded || r < out.k1) {
        out.k1 = r;
        out.argmin = alpha;
      }
      if (!seeded || r > out.k1_upper) {
        out.k1_upper = r;
        out.argmax = alpha;
      }
      seeded = true;
    }
  }
  out.verdict = weak_homogeneity_diagnosis(mu.as_family(max_level), max_level, thresholds);
  return out;
}

double rotated_density_moment(const Density& w, const UnitaryMatrix& u, const MultiIndex& alpha) {
  if (alpha.dim() != w.dim() || u.dim() != w.dim()) throw InvalidArgument("dimension mismatch");
  require_degree(alpha.degree() + w.degree(), kMaxDegree, "density moment degree");
  const UnitaryMatrix inv = u.inverse();
  double total = 0.0;
  for (const auto& t : w.terms()) {
    // |(u^{-1} z)^gamma|^2 = |p(z)|^2 and monomials are sigma-orthogonal.
    const HomPoly p = compose_linear(HomPoly::monomial(t.gamma), inv);
    double acc = 0.0;
    for (const auto& [beta, c] : p.terms()) acc += std::norm(c) * sigma_moment(alpha + beta);
    total += t.coef * acc;
  }
  return total;
}

AveragedMoments haar_average_density(const Density& w, std::size_t samples, std::uint64_t seed,
                                     const std::vector<MultiIndex>& test_alphas) {
  if (samples == 0) throw InvalidArgument("haar_average_density needs S >= 1");
  if (test_alphas.empty()) throw InvalidArgument("no test multi-indices");
  AveragedMoments out;
  out.alphas = test_alphas;
  out.samples = samples;
  out.seed = seed;
  out.estimates.assign(test_alphas.size(), 0.0);
  for (std::size_t s = 0; s < samples; ++s) {
    const UnitaryMatrix u = haar_sample(w.dim(), derive_seed(seed, s));
    for (std::size_t i = 0; i < test_alphas.size(); ++i) out.estimates[i] += rotated_density_moment(w, u, test_alphas[i]);
  }
  double mean = 0.0;
  for (std::size_t i = 0; i < test_alphas.size(); ++i) {
    out.estimates[i] /= static_cast<double>(samples);
    out.sigma_moments.push_back(sigma_moment(test_alphas[i]));
    out.ratios.push_back(out.estimates[i] / out.sigma_moments.back());
    mean += out.ratios.back();
  }
  out.common_constant = mean / static_cast<double>(test_alphas.size());
  for (double r : out.ratios) {
    out.max_relative_deviation = std::max(out.max_relative_deviation, std::abs(r / out.common_constant - 1.0));
  }
  return out;
}

std::vector<SphereMomentEstimate> sphere_moment_monte_carlo(int d, const std::vector<MultiIndex>& alphas,
                                                            std::size_t samples, std::uint64_t seed) {
  require_dimension(d);
  if (samples < 2) throw InvalidArgument("sphere Monte Carlo needs at least two samples");
  for (const auto& a : alphas) {
    if (a.dim() != d) throw InvalidArgument("multi-index dimension does not match");
  }
  constexpr std::size_t kChunk = 1 << 16;
  std::vector<std::vector<double>> coords(static_cast<std::size_t>(d), std::vector<double>(kChunk));
  std::vector<const double*> columns;
  for (const auto& c : coords) columns.push_back(c.data());
  std::vector<kernels::PowerSums> totals(alphas.size());

  std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(d)));
  for (std::size_t done = 0; done < samples;) {
    const std::size_t count = std::min(kChunk, samples - done);
    for (std::size_t s = 0; s < count; ++s) {
      const Eigen::VectorXcd z = uniform_sphere_point(d, rng);
      for (int j = 0; j < d; ++j) coords[static_cast<std::size_t>(j)][s] = std::norm(z(j));
    }
    for (std::size_t i = 0; i < alphas.size(); ++i) {
      const auto sums = kernels::monomial_power_sums(columns, count, alphas[i].components());
      totals[i].sum += sums.sum;
      totals[i].sum_squares += sums.sum_squares;
    }
    done += count;
  }

  std::vector<SphereMomentEstimate> out;
  const auto n = static_cast<double>(samples);
  for (const auto& t : totals) {
    const double mean = t.sum / n;
    const double var = std::max(0.0, (t.sum_squares / n - mean * mean) * n / (n - 1.0));
    out.push_back({mean, std::sqrt(var / n)});
  }
  return out;
}

}  // namespace homshift
