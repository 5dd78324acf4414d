#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "homshift/unitary.hpp"
#include "homshift/weights.hpp"

namespace homshift {

/// c_n = (sum_{|alpha|=n} beta_alpha^2 / alpha!) / dim Hom(n): the scalar by which
/// the Haar-averaged beta Gram form on Hom(n) is a multiple of diag(alpha!).
double schur_constant(const WeightFamily& family, int n);

/// Haar-averaged Gram matrix (1/S) sum_s M_s^* G_beta M_s on Hom(n).
struct AveragedGram {
  int n = 0;
  std::size_t dim = 0;
  Eigen::MatrixXcd matrix;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

AveragedGram averaged_gram(const WeightFamily& family, int n, std::size_t samples, std::uint64_t seed);
/// Average over an explicit list of unitaries (seed recorded as 0).
AveragedGram averaged_gram(const WeightFamily& family, int n, std::span<const UnitaryMatrix> unitaries);

/// ||A - c_n diag(alpha!)||_F / ||c_n diag(alpha!)||_F.
double schur_residual(const AveragedGram& gram, const WeightFamily& family);

struct LevelRatio {
  double lo = 0.0;
  double hi = 0.0;
};

/// The level-radial family beta~_alpha = sqrt(c_|alpha| alpha!) similar to the input.
struct HomogenizedWeights {
  WeightFamily base;
  std::vector<double> schur_constants;  // c_0..c_N
  WeightFamily tilde;                   // radial, cap N
  std::vector<LevelRatio> ratio_bounds; // min/max of beta/beta~ per level
  std::vector<double> mc_residuals;     // schur_residual per level, empty when samples == 0
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

/// beta~ comes from the exact c_n; Monte Carlo only fills mc_residuals.
HomogenizedWeights homogenize(const WeightFamily& family, int max_level, std::size_t samples = 0,
                              std::uint64_t seed = 0);

struct SimilarityNorms {
  double forward = 0.0;  // max beta~/beta: norm of the identity H^2(beta) -> H^2(beta~)
  double inverse = 0.0;  // max beta/beta~
};

SimilarityNorms similarity_norms(const WeightFamily& family, int max_level);

}  // namespace homshift
