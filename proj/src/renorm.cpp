#include "homshift/renorm.hpp"

#include <algorithm>
#include <cmath>

#include "homshift/combinatorics.hpp"
#include "homshift/error.hpp"
#include "homshift/kernels.hpp"
#include "homshift/polyspace.hpp"

namespace homshift {

double schur_constant(const WeightFamily& family, int n) {
  require_degree(n, family.cap(), "level");
  const auto basis = enumerate_level(family.dim(), n);
  double total = 0.0;
  for (const auto& alpha : basis) {
    const double b = family.beta(alpha);
    total += b * b / to_double(factorial(alpha));
  }
  return total / static_cast<double>(basis.size());
}

namespace {

// A += M^* diag(g) M, filling the upper triangle and mirroring.
void accumulate_congruence(const Eigen::MatrixXcd& m, const Eigen::VectorXd& g, Eigen::MatrixXcd& acc) {
  const auto rows = static_cast<std::size_t>(m.rows());
  const std::span<const double> weights(g.data(), rows);
  for (Eigen::Index i = 0; i < m.cols(); ++i) {
    const std::span<const cdouble> xi(m.col(i).data(), rows);
    for (Eigen::Index j = i; j < m.cols(); ++j) {
      const cdouble v = kernels::weighted_cdot(xi, {m.col(j).data(), rows}, weights);
      acc(i, j) += v;
      if (j != i) acc(j, i) += std::conj(v);
    }
  }
}

}  // namespace

AveragedGram averaged_gram(const WeightFamily& family, int n, std::span<const UnitaryMatrix> unitaries) {
  require_degree(n, family.cap(), "level");
  if (unitaries.empty()) throw InvalidArgument("averaged_gram needs at least one sample");
  const Eigen::VectorXd g = beta_gram(family, n);
  AveragedGram out;
  out.n = n;
  out.dim = static_cast<std::size_t>(g.size());
  out.matrix = Eigen::MatrixXcd::Zero(g.size(), g.size());
  for (const auto& u : unitaries) {
    if (u.dim() != family.dim()) throw InvalidArgument("unitary and family dimensions differ");
    accumulate_congruence(composition_matrix(u, n).matrix, g, out.matrix);
  }
  out.matrix /= static_cast<double>(unitaries.size());
  out.samples = unitaries.size();
  return out;
}

AveragedGram averaged_gram(const WeightFamily& family, int n, std::size_t samples, std::uint64_t seed) {
  if (samples == 0) throw InvalidArgument("averaged_gram needs S >= 1");
  require_degree(n, family.cap(), "level");
  const auto unitaries = haar_batch(family.dim(), seed, samples);
  auto out = averaged_gram(family, n, unitaries);
  out.seed = seed;
  return out;
}

double schur_residual(const AveragedGram& gram, const WeightFamily& family) {
  const double c = schur_constant(family, gram.n);
  const Eigen::MatrixXcd target = (c * fock_gram(family.dim(), gram.n)).cast<cdouble>().asDiagonal();
  return (gram.matrix - target).norm() / target.norm();
}

HomogenizedWeights homogenize(const WeightFamily& family, int max_level, std::size_t samples, std::uint64_t seed) {
  require_degree(max_level, family.cap(), "N");
  const int d = family.dim();
  std::vector<double> c;
  std::vector<double> a;
  for (int n = 0; n <= max_level; ++n) {
    const double cn = schur_constant(family, n);
    c.push_back(cn);
    // beta~_alpha = a_n * radial_factor(alpha) = sqrt(c_n alpha!)
    a.push_back(std::sqrt(cn * to_double(factorial(d - 1 + n) / factorial(d - 1))));
  }
  HomogenizedWeights out{family, c, WeightFamily::radial(d, std::move(a)), {}, {}, samples, seed};
  for (int n = 0; n <= max_level; ++n) {
    LevelRatio r{INFINITY, 0.0};
    for (const auto& alpha : enumerate_level(d, n)) {
      const double ratio = family.beta(alpha) / out.tilde.beta(alpha);
      r.lo = std::min(r.lo, ratio);
      r.hi = std::max(r.hi, ratio);
    }
    out.ratio_bounds.push_back(r);
    if (samples > 0) {
      out.mc_residuals.push_back(schur_residual(averaged_gram(family, n, samples, derive_seed(seed, n)), family));
    }
  }
  return out;
}

SimilarityNorms similarity_norms(const WeightFamily& family, int max_level) {
  const auto h = homogenize(family, max_level);
  SimilarityNorms out;
  for (const auto& r : h.ratio_bounds) {
    out.forward = std::max(out.forward, 1.0 / r.lo);
    out.inverse = std::max(out.inverse, r.hi);
  }
  return out;
}

}  // namespace homshift
