#include <doctest.h>

#include <cmath>
#include <numbers>

#include "homshift/error.hpp"
#include "homshift/unitary.hpp"

using namespace homshift;

namespace {

double unitarity_defect(const UnitaryMatrix& u) {
  const auto& m = u.matrix();
  return (m.adjoint() * m - Eigen::MatrixXcd::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("special unitaries") {
  CHECK(UnitaryMatrix::identity(2).matrix() == Eigen::MatrixXcd::Identity(2, 2));

  const auto t = UnitaryMatrix::torus({cdouble(0, 1), cdouble(-1, 0)});
  CHECK(t(0, 0) == cdouble(0, 1));
  CHECK(t(1, 1) == cdouble(-1, 0));
  CHECK(t(0, 1) == cdouble(0, 0));

  const auto r = UnitaryMatrix::rotation(2, std::numbers::pi / 4, 0, 1);
  const double c = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(r(0, 0) - c) < 1e-15);
  CHECK(std::abs(r(0, 1) - c) < 1e-15);
  CHECK(std::abs(r(1, 0) + c) < 1e-15);
  CHECK(std::abs(r(1, 1) - c) < 1e-15);

  const auto p = UnitaryMatrix::permutation({1, 0});
  CHECK(p(0, 1) == 1.0);
  CHECK(p(1, 0) == 1.0);

  CHECK(unitarity_defect(UnitaryMatrix::fourier(3)) < 1e-14);

  CHECK_THROWS_AS(UnitaryMatrix::permutation({0, 0}), InvalidArgument);
  CHECK_THROWS_AS(UnitaryMatrix::rotation(2, 1.0, 0, 0), InvalidArgument);
  CHECK_THROWS_AS(UnitaryMatrix::rotation(2, 1.0, 0, 2), InvalidArgument);
  CHECK_THROWS_AS(UnitaryMatrix::torus({cdouble(2, 0)}), InvalidArgument);
  Eigen::MatrixXcd bad(2, 2);
  bad << 1, 1, 0, 1;
  CHECK_THROWS_AS(UnitaryMatrix{bad}, InvalidArgument);
}

TEST_CASE("haar samples are unitary and deterministic") {
  for (int d = 1; d <= 3; ++d) {
    for (std::uint64_t s = 0; s < 1000; ++s) {
      const auto u = haar_sample(d, s);
      CHECK(unitarity_defect(u) <= 1e-12);
      CHECK(std::abs(std::abs(u.matrix().determinant()) - 1.0) <= 1e-10);
      CHECK((u * u.inverse()).matrix().isIdentity(1e-12));
      CHECK(u.inverse().matrix() == u.matrix().adjoint());
    }
  }
  CHECK(haar_sample(1, 3)(0, 0) != cdouble(1, 0));
  CHECK(std::abs(std::abs(haar_sample(1, 3)(0, 0)) - 1.0) < 1e-15);
  CHECK(haar_sample(3, 42).matrix() == haar_sample(3, 42).matrix());
  CHECK(haar_sample(3, 42).matrix() != haar_sample(3, 43).matrix());
  const auto batch = haar_batch(2, 7, 4);
  CHECK(batch[2].matrix() == haar_sample(2, derive_seed(7, 2)).matrix());
}

TEST_CASE("haar second moments follow Schur orthogonality E|u_jk|^2 = 1/d") {
  const std::size_t samples = 100'000;
  double sum = 0.0;
  for (std::size_t s = 0; s < samples; ++s) sum += std::norm(haar_sample(2, derive_seed(11, s))(0, 0));
  CHECK(std::abs(sum / samples - 0.5) < 0.01);
}

TEST_CASE("haar left invariance: moments of v.u match those of u") {
  const auto v = UnitaryMatrix::rotation(3, 0.7, 0, 2) * UnitaryMatrix::torus_angles({0.3, -1.1, 2.0});
  const std::size_t samples = 10'000;
  // Statistic |u_00|^4 has mean 2/(d(d+1)) = 1/6 for d = 3; compare plain vs rotated.
  double a = 0, a2 = 0, b = 0, b2 = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    const auto u = haar_sample(3, derive_seed(5, s));
    const double x = std::pow(std::norm(u(0, 0)), 2);
    const double y = std::pow(std::norm((v * u)(0, 0)), 2);
    a += x;
    a2 += x * x;
    b += y;
    b2 += y * y;
  }
  const double ma = a / samples, mb = b / samples;
  const double se = std::sqrt((a2 / samples - ma * ma) / samples + (b2 / samples - mb * mb) / samples);
  CHECK(std::abs(ma - mb) <= 3 * se);
  CHECK(std::abs(ma - 1.0 / 6.0) <= 3 * std::sqrt((a2 / samples - ma * ma) / samples));
}
