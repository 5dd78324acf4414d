#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace homshift {

using cdouble = std::complex<double>;

/// A d x d unitary u acting by (u.z)_j = sum_k u_jk z_k.
class UnitaryMatrix {
 public:
  /// Validates ||u*u - I||_max <= 1e-12 and | |det u| - 1 | <= 1e-10.
  explicit UnitaryMatrix(Eigen::MatrixXcd entries);

  static UnitaryMatrix identity(int d);
  /// Coordinate permutation: output coordinate j reads input coordinate pi[j] (0-based).
  static UnitaryMatrix permutation(const std::vector<int>& pi);
  /// diag(t_1, ..., t_d) with |t_j| = 1.
  static UnitaryMatrix torus(const std::vector<cdouble>& t);
  /// diag(exp(i theta_j)).
  static UnitaryMatrix torus_angles(const std::vector<double>& theta);
  /// Real rotation by `angle` in coordinate plane (j, k), 0-based:
  /// u_jj = u_kk = cos, u_jk = sin, u_kj = -sin.
  static UnitaryMatrix rotation(int d, double angle, int j, int k);
  /// Discrete Fourier matrix, u_jk = exp(2 pi i jk / d) / sqrt(d).
  static UnitaryMatrix fourier(int d);

  int dim() const noexcept { return static_cast<int>(m_.rows()); }
  const Eigen::MatrixXcd& matrix() const noexcept { return m_; }
  cdouble operator()(int j, int k) const { return m_(j, k); }

  /// u^{-1} = u^*.
  UnitaryMatrix inverse() const;
  Eigen::VectorXcd apply(const Eigen::VectorXcd& z) const { return m_ * z; }

  friend UnitaryMatrix operator*(const UnitaryMatrix& a, const UnitaryMatrix& b);

 private:
  struct Trusted {};
  UnitaryMatrix(Eigen::MatrixXcd entries, Trusted) : m_(std::move(entries)) {}

  Eigen::MatrixXcd m_;
};

/// Seed for item `index` of a batch drawn from `seed`, so batches can be split
/// across workers without changing results.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept;

/// Haar-distributed unitary: complex Ginibre matrix, QR, columns rescaled by the
/// phases of diag(R). Deterministic per (d, seed).
UnitaryMatrix haar_sample(int d, std::uint64_t seed);

/// haar_sample(d, derive_seed(seed, s)) for s in [0, count).
std::vector<UnitaryMatrix> haar_batch(int d, std::uint64_t seed, std::size_t count);

}  // namespace homshift
