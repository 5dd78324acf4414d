#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homshift/combinatorics.hpp"
#include "homshift/unitary.hpp"
#include "homshift/weights.hpp"

namespace homshift {

/// Per-degree extremes of beta_alpha / sqrt(alpha!) and their product b_n.
struct LevelDiagnostic {
  int n = 0;
  double max_up = 0.0;    // max beta_alpha / sqrt(alpha!)
  MultiIndex argmax_up;
  double max_down = 0.0;  // max sqrt(delta!) / beta_delta
  MultiIndex argmax_down;
  double b = 0.0;         // max_up * max_down >= 1
};

/// Ties resolve to the first index in graded-lex order.
LevelDiagnostic level_b(const WeightFamily& family, int n);

/// Finite-horizon thresholds for reading a sup-over-all-n criterion off a
/// truncated series.
struct VerdictThresholds {
  double slope_min = 0.05;     // fitted slope of log(series) over the last half of the levels
  double growth_factor = 10.0;  // series must exceed this to be called divergent
  double plateau_tol = 1.5;     // tail max/min below this reads as bounded
};

enum class Classification { bounded, divergent, inconclusive };
const char* to_string(Classification c) noexcept;

struct BoundednessVerdict {
  Classification classification = Classification::inconclusive;
  std::vector<double> series;  // series[i] belongs to level first_level + i
  int first_level = 1;
  double fitted_slope = 0.0;
  double fitted_intercept = 0.0;
  int window_start = 0;  // first level of the fit window
  double max_value = 0.0;
  double tail_ratio = 1.0;  // max/min over the fit window
  VerdictThresholds thresholds;
};

/// Classifies a positive series observed at levels first_level, first_level+1, ...
BoundednessVerdict classify_series(std::vector<double> series, int first_level, const VerdictThresholds& thresholds);

/// b_1..b_N read as a boundedness verdict for sup_n b_n.
BoundednessVerdict weak_homogeneity_diagnosis(const WeightFamily& family, int max_level,
                                              const VerdictThresholds& thresholds = {});

/// Operator norm of C_u on Hom(n) with the beta norm: largest singular value of D M D^{-1}.
double cu_restricted_norm(const UnitaryMatrix& u, const WeightFamily& family, int n);
/// Same with arbitrary positive diagonal weights (graded-lex order).
double cu_restricted_norm(const UnitaryMatrix& u, const Eigen::VectorXd& level_weights, int n);

struct HomogeneityCheck {
  bool homogeneous = true;
  std::vector<double> level_values;  // v on each checked level (first index's value)
  // Witness for the first failing level.
  std::optional<int> level;
  std::optional<MultiIndex> first;
  std::optional<MultiIndex> second;
  double first_value = 0.0;
  double second_value = 0.0;
};

/// Relative slack every comparison gets on top of `tol`, covering rounding in
/// the evaluation of v_alpha.
inline constexpr double kRoundingSlack = 8.0 * 2.220446049250313e-16;

/// True iff v_alpha = beta_alpha * sqrt((d-1+n)!/((d-1)! alpha!)) is constant on
/// every level n <= max_level up to relative tolerance `tol`.
HomogeneityCheck is_ud_homogeneous(const WeightFamily& family, int max_level, double tol = 0.0);

struct RatioBounds {
  double min = 0.0;
  MultiIndex argmin;
  double max = 0.0;
  MultiIndex argmax;
};

/// min and max of beta1_alpha / beta2_alpha over |alpha| <= max_level.
RatioBounds similarity_ratio_bounds(const WeightFamily& first, const WeightFamily& second, int max_level);

/// kappa(z,z) = sum_{|alpha| <= truncation} |z^alpha|^2 / beta_alpha^2.
double kernel_diagonal(const WeightFamily& family, const Eigen::VectorXcd& z, int truncation);

struct KernelRatioRange {
  double min_ratio = 0.0;
  double max_ratio = 0.0;
};

/// Range of kappa(u^{-1}z, u^{-1}z) / kappa(z, z) over the sample points. Only the
/// diagonal z = w is checked: a necessary condition for two-sided kernel domination.
KernelRatioRange kernel_diagonal_ratio(const WeightFamily& family, const UnitaryMatrix& u,
                                       const std::vector<Eigen::VectorXcd>& points, int truncation);

}  // namespace homshift
