#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "homshift/combinatorics.hpp"
#include "homshift/criteria.hpp"
#include "homshift/unitary.hpp"
#include "homshift/weights.hpp"

namespace homshift {

/// m_alpha(sigma) = (d-1)! alpha! / (d-1+|alpha|)! for the normalized surface measure.
double sigma_moment(const MultiIndex& alpha);

/// One term c * |z^gamma|^2 of a density relative to sigma.
struct DensityTerm {
  MultiIndex gamma;
  double coef = 0.0;
};

/// w(z) = sum_t c_t |z^{gamma_t}|^2, a polynomial in |z_1|^2, ..., |z_d|^2.
class Density {
 public:
  /// Throws InvalidArgument unless w > 0 on a fixed sample of the sphere and at its coordinate points.
  Density(int d, std::vector<DensityTerm> terms);

  int dim() const noexcept { return d_; }
  int degree() const noexcept { return degree_; }
  const std::vector<DensityTerm>& terms() const noexcept { return terms_; }
  double operator()(const Eigen::VectorXcd& z) const;
  /// Smallest value seen on the positivity sample.
  double sampled_min() const noexcept { return sampled_min_; }
  double sampled_max() const noexcept { return sampled_max_; }

 private:
  int d_;
  int degree_ = 0;
  std::vector<DensityTerm> terms_;
  double sampled_min_ = 0.0;
  double sampled_max_ = 0.0;
};

/// Moments of w * sigma: sum_t c_t m_sigma(alpha + gamma_t).
double density_moment(const Density& w, const MultiIndex& alpha);

/// Reinhardt measure on the unit sphere, given through its moments m_alpha = ||z^alpha||^2_{L^2(mu)}.
class ReinhardtMeasure {
 public:
  enum class Kind { sigma, density, moment_table };

  static ReinhardtMeasure sigma(int d);
  static ReinhardtMeasure with_density(Density w);
  /// Moment data for every |alpha| <= cap; entries must be positive. Verdicts built on
  /// tables are formal since a table need not be the moment sequence of any measure.
  static ReinhardtMeasure moment_table(int d, int cap, std::map<MultiIndex, double> moments);

  Kind kind() const noexcept { return kind_; }
  int dim() const noexcept { return d_; }
  int cap() const noexcept { return cap_; }
  double moment(const MultiIndex& alpha) const;
  const std::optional<Density>& density() const noexcept { return density_; }
  const std::map<MultiIndex, double>& table() const noexcept { return table_; }

  /// H^2(mu) as a weight family: beta_alpha = sqrt(m_alpha), up to `max_level`.
  WeightFamily as_family(int max_level) const;

 private:
  ReinhardtMeasure(Kind kind, int d, int cap) : kind_(kind), d_(d), cap_(cap) {}

  Kind kind_;
  int d_;
  int cap_;
  std::optional<Density> density_;
  std::map<MultiIndex, double> table_;
};

const char* to_string(ReinhardtMeasure::Kind kind) noexcept;

/// One-variable weights gamma_n = ||t^n||, normalized so gamma_0 = 1.
class RadialWeights {
 public:
  explicit RadialWeights(std::vector<double> gamma);
  static RadialWeights constant(int cap);
  /// gamma_n = sqrt(n + 1).
  static RadialWeights sqrt_linear(int cap);

  int cap() const noexcept { return static_cast<int>(gamma_.size()) - 1; }
  double operator[](int n) const;
  const std::vector<double>& values() const noexcept { return gamma_; }

 private:
  std::vector<double> gamma_;
};

/// Slice pair [mu, H^2(gamma)]: beta_alpha = gamma_|alpha| * sqrt(m_alpha(mu)).
struct SliceRepresentation {
  ReinhardtMeasure measure;
  RadialWeights gamma;
};

double compose_slice(const SliceRepresentation& rep, const MultiIndex& alpha);
/// The induced weight family as a table up to max_level.
WeightFamily slice_family(const SliceRepresentation& rep, int max_level);

struct BalanceCheck {
  bool balanced = true;
  double max_relative_spread = 0.0;
  std::vector<double> level_spread;  // max relative spread of the sums per level
  std::optional<MultiIndex> alpha;   // first failing alpha
  int i = 0, j = 0;                 // directions (0-based) with differing sums
  double sum_i = 0.0, sum_j = 0.0;
};

/// Checks sum_k beta^2_{alpha+e_i+e_k} / beta^2_{alpha+e_i} is the same for every i, |alpha| <= max_level.
BalanceCheck is_spherically_balanced(const WeightFamily& family, int max_level, double tol);

struct SliceCheck {
  bool matches = true;
  double max_relative_error = 0.0;
  std::optional<MultiIndex> worst;
};

SliceCheck verify_slice(const WeightFamily& family, const SliceRepresentation& rep, int max_level, double tol);

/// Uniform point on the unit sphere of C^d (normalized complex Gaussian).
template <class Rng>
Eigen::VectorXcd uniform_sphere_point(int d, Rng& rng);

struct RnRange {
  double min = 0.0;  // k estimate
  double max = 0.0;  // K estimate
};

/// Range of d(mu o u^{-1})/dmu (z) = w(u^{-1} z) / w(z) over `samples` uniform sphere points.
RnRange rn_bound_sample(const Density& w, const UnitaryMatrix& u, std::size_t samples, std::uint64_t seed);

struct SzegoCheck {
  double k1 = 0.0;  // min over |alpha| <= N of sqrt(m_alpha(mu) / m_alpha(sigma))
  MultiIndex argmin;
  double k1_upper = 0.0;  // the matching max
  MultiIndex argmax;
  BoundednessVerdict verdict;  // weak-homogeneity diagnosis of H^2(mu)
  bool formal = false;         // true when mu comes from a moment table
};

/// Compares H^2(mu) with the Szego space H^2(sigma) up to level N.
SzegoCheck szego_similarity_check(const ReinhardtMeasure& mu, int max_level, const VerdictThresholds& thresholds = {});

struct AveragedMoments {
  std::vector<MultiIndex> alphas;
  std::vector<double> estimates;       // Haar average of m_alpha(mu o u^{-1})
  std::vector<double> sigma_moments;
  std::vector<double> ratios;          // estimate / sigma moment
  double common_constant = 0.0;        // mean ratio
  double max_relative_deviation = 0.0; // max |ratio / common - 1|
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

/// Moments of nu = int mu o u^{-1} du estimated over Haar samples; each sample's
/// moment is computed exactly by expanding w(u^{-1} z).
AveragedMoments haar_average_density(const Density& w, std::size_t samples, std::uint64_t seed,
                                     const std::vector<MultiIndex>& test_alphas);

/// Exact moment of (w o u^{-1}) sigma at alpha.
double rotated_density_moment(const Density& w, const UnitaryMatrix& u, const MultiIndex& alpha);

struct SphereMomentEstimate {
  double mean = 0.0;
  double standard_error = 0.0;
};

/// Monte Carlo estimate of int |z^alpha|^2 dsigma from `samples` uniform points.
std::vector<SphereMomentEstimate> sphere_moment_monte_carlo(int d, const std::vector<MultiIndex>& alphas,
                                                            std::size_t samples, std::uint64_t seed);

// ---------------------------------------------------------------------------

template <class Rng>
Eigen::VectorXcd uniform_sphere_point(int d, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXcd z(d);
  for (int j = 0; j < d; ++j) {
    const double re = normal(rng);
    const double im = normal(rng);
    z(j) = cdouble(re, im);
  }
  const double norm = z.norm();
  return norm > 0.0 ? Eigen::VectorXcd(z / norm) : uniform_sphere_point(d, rng);
}

}  // namespace homshift
