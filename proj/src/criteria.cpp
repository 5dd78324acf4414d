#include "homshift/criteria.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>

#include "homshift/error.hpp"
#include "homshift/kernels.hpp"
#include "homshift/polyspace.hpp"

namespace homshift {

const char* to_string(Classification c) noexcept {
  switch (c) {
    case Classification::bounded: return "bounded";
    case Classification::divergent: return "divergent";
    case Classification::inconclusive: return "inconclusive";
  }
  return "unknown";
}

LevelDiagnostic level_b(const WeightFamily& family, int n) {
  require_degree(n, family.cap(), "level");
  LevelDiagnostic out;
  out.n = n;
  for (const auto& alpha : enumerate_level(family.dim(), n)) {
    const double ratio = family.beta(alpha) / fock_norm(alpha);
    if (ratio > out.max_up) {
      out.max_up = ratio;
      out.argmax_up = alpha;
    }
    if (1.0 / ratio > out.max_down) {
      out.max_down = 1.0 / ratio;
      out.argmax_down = alpha;
    }
  }
  out.b = out.max_up * out.max_down;
  return out;
}

BoundednessVerdict classify_series(std::vector<double> series, int first_level, const VerdictThresholds& thresholds) {
  BoundednessVerdict v;
  v.thresholds = thresholds;
  v.first_level = first_level;
  v.series = std::move(series);
  if (v.series.empty()) return v;
  for (double s : v.series) {
    if (!(s > 0.0) || !std::isfinite(s)) throw NumericFailure("verdict series must be positive and finite");
  }

  const auto count = static_cast<int>(v.series.size());
  const int window = std::max(2, count / 2 + 1);
  const int start = std::max(0, count - window);
  v.window_start = first_level + start;

  // Least squares fit of log(series) against level over the window.
  const int m = count - start;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  double tail_max = 0.0;
  double tail_min = v.series[static_cast<std::size_t>(start)];
  for (int i = start; i < count; ++i) {
    const double x = first_level + i;
    const double value = v.series[static_cast<std::size_t>(i)];
    const double y = std::log(value);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    tail_max = std::max(tail_max, value);
    tail_min = std::min(tail_min, value);
  }
  const double denom = m * sxx - sx * sx;
  v.fitted_slope = (m > 1 && denom != 0.0) ? (m * sxy - sx * sy) / denom : 0.0;
  v.fitted_intercept = (sy - v.fitted_slope * sx) / m;
  v.max_value = *std::max_element(v.series.begin(), v.series.end());
  v.tail_ratio = tail_max / tail_min;

  if (v.fitted_slope > thresholds.slope_min && v.max_value > thresholds.growth_factor) {
    v.classification = Classification::divergent;
  } else if (v.tail_ratio < thresholds.plateau_tol) {
    v.classification = Classification::bounded;
  } else {
    v.classification = Classification::inconclusive;
  }
  return v;
}

BoundednessVerdict weak_homogeneity_diagnosis(const WeightFamily& family, int max_level,
                                              const VerdictThresholds& thresholds) {
  require_degree(max_level, family.cap(), "N");
  std::vector<double> series;
  for (int n = 1; n <= max_level; ++n) series.push_back(level_b(family, n).b);
  return classify_series(std::move(series), 1, thresholds);
}

double cu_restricted_norm(const UnitaryMatrix& u, const Eigen::VectorXd& level_weights, int n) {
  const CompositionMatrix cm = composition_matrix(u, n);
  if (level_weights.size() != cm.matrix.rows()) throw InvalidArgument("weight vector does not match dim Hom(n)");
  if ((level_weights.array() <= 0.0).any()) throw InvalidArgument("level weights must be positive");
  const Eigen::MatrixXcd scaled =
      level_weights.cast<cdouble>().asDiagonal() * cm.matrix * level_weights.cwiseInverse().cast<cdouble>().asDiagonal();
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(scaled);
  if (svd.info() != Eigen::Success) throw NumericFailure("SVD did not converge");
  const double top = svd.singularValues()(0);
  if (!std::isfinite(top)) throw NumericFailure("non-finite singular value");
  return top;
}

double cu_restricted_norm(const UnitaryMatrix& u, const WeightFamily& family, int n) {
  if (u.dim() != family.dim()) throw InvalidArgument("unitary and family dimensions differ");
  require_degree(n, family.cap(), "level");
  const auto betas = family.level_betas(n);
  return cu_restricted_norm(u, Eigen::Map<const Eigen::VectorXd>(betas.data(), static_cast<Eigen::Index>(betas.size())),
                            n);
}

HomogeneityCheck is_ud_homogeneous(const WeightFamily& family, int max_level, double tol) {
  require_degree(max_level, family.cap(), "N");
  if (tol < 0.0) throw InvalidArgument("tolerance must be non-negative");
  HomogeneityCheck out;
  for (int n = 0; n <= max_level; ++n) {
    const auto basis = enumerate_level(family.dim(), n);
    const double reference = family.beta(basis.front()) / radial_factor(basis.front());
    out.level_values.push_back(reference);
    for (std::size_t i = 1; i < basis.size(); ++i) {
      const double v = family.beta(basis[i]) / radial_factor(basis[i]);
      if (std::abs(v - reference) > (tol + kRoundingSlack) * std::abs(reference)) {
        out.homogeneous = false;
        out.level = n;
        out.first = basis.front();
        out.second = basis[i];
        out.first_value = reference;
        out.second_value = v;
        return out;
      }
    }
  }
  return out;
}

RatioBounds similarity_ratio_bounds(const WeightFamily& first, const WeightFamily& second, int max_level) {
  if (first.dim() != second.dim()) throw InvalidArgument("families have different dimensions");
  require_degree(max_level, std::min(first.cap(), second.cap()), "N");
  RatioBounds out;
  bool seeded = false;
  for (int n = 0; n <= max_level; ++n) {
    for (const auto& alpha : enumerate_level(first.dim(), n)) {
      const double r = first.beta(alpha) / second.beta(alpha);
      if (!seeded || r < out.min) {
        out.min = r;
        out.argmin = alpha;
      }
      if (!seeded || r > out.max) {
        out.max = r;
        out.argmax = alpha;
      }
      seeded = true;
    }
  }
  return out;
}

double kernel_diagonal(const WeightFamily& family, const Eigen::VectorXcd& z, int truncation) {
  if (z.size() != family.dim()) throw InvalidArgument("point dimension does not match family");
  require_degree(truncation, family.cap(), "truncation");
  double total = 0.0;
  for (int n = 0; n <= truncation; ++n) {
    const Eigen::VectorXcd monomials = evaluate_monomials(z, n);
    const Eigen::VectorXd inv_gram = beta_gram(family, n).cwiseInverse();
    total += kernels::weighted_abs2({monomials.data(), static_cast<std::size_t>(monomials.size())},
                                    {inv_gram.data(), static_cast<std::size_t>(inv_gram.size())});
  }
  return total;
}

KernelRatioRange kernel_diagonal_ratio(const WeightFamily& family, const UnitaryMatrix& u,
                                       const std::vector<Eigen::VectorXcd>& points, int truncation) {
  if (points.empty()) throw InvalidArgument("no sample points");
  if (u.dim() != family.dim()) throw InvalidArgument("unitary and family dimensions differ");
  const UnitaryMatrix inv = u.inverse();
  KernelRatioRange out{INFINITY, 0.0};
  for (const auto& z : points) {
    if (z.size() != family.dim()) throw InvalidArgument("point dimension does not match family");
    if (!(z.norm() < 1.0)) throw InvalidArgument("sample point not strictly inside the unit ball");
    const double ratio = kernel_diagonal(family, inv.apply(z), truncation) / kernel_diagonal(family, z, truncation);
    out.min_ratio = std::min(out.min_ratio, ratio);
    out.max_ratio = std::max(out.max_ratio, ratio);
  }
  return out;
}

}  // namespace homshift
