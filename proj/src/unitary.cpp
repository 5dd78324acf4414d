#include "homshift/unitary.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "homshift/combinatorics.hpp"
#include "homshift/error.hpp"

namespace homshift {

namespace {

constexpr double kUnitarityTol = 1e-12;
constexpr double kDeterminantTol = 1e-10;

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

UnitaryMatrix::UnitaryMatrix(Eigen::MatrixXcd entries) : m_(std::move(entries)) {
  if (m_.rows() != m_.cols()) throw InvalidArgument("unitary matrix must be square");
  require_dimension(static_cast<int>(m_.rows()));
  if (!m_.allFinite()) throw InvalidArgument("unitary matrix has non-finite entries");
  const Eigen::MatrixXcd defect = m_.adjoint() * m_ - Eigen::MatrixXcd::Identity(m_.rows(), m_.cols());
  if (defect.cwiseAbs().maxCoeff() > kUnitarityTol) throw InvalidArgument("matrix is not unitary within 1e-12");
  if (std::abs(std::abs(m_.determinant()) - 1.0) > kDeterminantTol) {
    throw InvalidArgument("unitary determinant modulus differs from 1");
  }
}

UnitaryMatrix UnitaryMatrix::identity(int d) {
  require_dimension(d);
  return {Eigen::MatrixXcd::Identity(d, d), Trusted{}};
}

UnitaryMatrix UnitaryMatrix::permutation(const std::vector<int>& pi) {
  const int d = static_cast<int>(pi.size());
  require_dimension(d);
  std::vector<bool> seen(pi.size(), false);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  for (int j = 0; j < d; ++j) {
    const int k = pi[static_cast<std::size_t>(j)];
    if (k < 0 || k >= d || seen[static_cast<std::size_t>(k)]) throw InvalidArgument("invalid permutation");
    seen[static_cast<std::size_t>(k)] = true;
    m(j, k) = 1.0;
  }
  return {std::move(m), Trusted{}};
}

UnitaryMatrix UnitaryMatrix::torus(const std::vector<cdouble>& t) {
  const int d = static_cast<int>(t.size());
  require_dimension(d);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  for (int j = 0; j < d; ++j) {
    const cdouble tj = t[static_cast<std::size_t>(j)];
    if (std::abs(std::abs(tj) - 1.0) > kUnitarityTol) throw InvalidArgument("torus element must be unimodular");
    m(j, j) = tj;
  }
  return {std::move(m), Trusted{}};
}

UnitaryMatrix UnitaryMatrix::torus_angles(const std::vector<double>& theta) {
  std::vector<cdouble> t;
  t.reserve(theta.size());
  for (double a : theta) {
    if (!std::isfinite(a)) throw InvalidArgument("torus phase must be finite");
    t.push_back(std::polar(1.0, a));
  }
  return torus(t);
}

UnitaryMatrix UnitaryMatrix::rotation(int d, double angle, int j, int k) {
  require_dimension(d);
  if (!std::isfinite(angle)) throw InvalidArgument("rotation angle must be finite");
  if (j < 0 || k < 0 || j >= d || k >= d || j == k) throw InvalidArgument("invalid rotation plane");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(d, d);
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  m(j, j) = c;
  m(k, k) = c;
  m(j, k) = s;
  m(k, j) = -s;
  return {std::move(m), Trusted{}};
}

UnitaryMatrix UnitaryMatrix::fourier(int d) {
  require_dimension(d);
  Eigen::MatrixXcd m(d, d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      m(j, k) = std::polar(scale, 2.0 * std::numbers::pi * ((j * k) % d) / d);
    }
  }
  return UnitaryMatrix(std::move(m));
}

UnitaryMatrix UnitaryMatrix::inverse() const { return {m_.adjoint(), Trusted{}}; }

UnitaryMatrix operator*(const UnitaryMatrix& a, const UnitaryMatrix& b) {
  if (a.dim() != b.dim()) throw InvalidArgument("unitary dimension mismatch");
  return {a.m_ * b.m_, UnitaryMatrix::Trusted{}};
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

UnitaryMatrix haar_sample(int d, std::uint64_t seed) {
  require_dimension(d);
  std::mt19937_64 rng(splitmix64(seed));
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXcd g(d, d);
  for (int k = 0; k < d; ++k) {
    for (int j = 0; j < d; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(j, k) = cdouble(re, im);
    }
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd& r = qr.matrixQR();
  for (int k = 0; k < d; ++k) {
    const cdouble rkk = r(k, k);
    const double mod = std::abs(rkk);
    if (mod > 0.0) q.col(k) *= rkk / mod;
  }
  return UnitaryMatrix(std::move(q));
}

std::vector<UnitaryMatrix> haar_batch(int d, std::uint64_t seed, std::size_t count) {
  std::vector<UnitaryMatrix> out;
  out.reserve(count);
  for (std::size_t s = 0; s < count; ++s) out.push_back(haar_sample(d, derive_seed(seed, s)));
  return out;
}

}  // namespace homshift
