#include <doctest.h>

#include <cmath>

#include "homshift/error.hpp"
#include "homshift/polyspace.hpp"

using namespace homshift;

namespace {

UnitaryMatrix hadamard() {
  const double c = 1.0 / std::sqrt(2.0);
  Eigen::MatrixXcd m(2, 2);
  m << c, c, c, -c;
  return UnitaryMatrix(m);
}

double max_abs(const Eigen::MatrixXcd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

TEST_CASE("compose_linear examples") {
  const auto swap = UnitaryMatrix::permutation({1, 0});
  CHECK(compose_linear(HomPoly::monomial({1, 0}), swap) == HomPoly::monomial({0, 1}));

  const auto sq = compose_linear(HomPoly::monomial({2, 0}), hadamard());
  CHECK(std::abs(sq.coefficient({2, 0}) - 0.5) < 1e-15);
  CHECK(std::abs(sq.coefficient({1, 1}) - 1.0) < 1e-15);
  CHECK(std::abs(sq.coefficient({0, 2}) - 0.5) < 1e-15);

  const auto mixed = compose_linear(HomPoly::monomial({1, 1}), hadamard());
  CHECK(std::abs(mixed.coefficient({2, 0}) - 0.5) < 1e-15);
  CHECK(std::abs(mixed.coefficient({1, 1})) < 1e-15);
  CHECK(std::abs(mixed.coefficient({0, 2}) + 0.5) < 1e-15);

  CHECK_THROWS_AS(compose_linear(HomPoly::monomial({1, 0, 0}), swap), InvalidArgument);
}

TEST_CASE("composition_matrix examples") {
  CHECK(composition_matrix(UnitaryMatrix::identity(2), 3).matrix == Eigen::MatrixXcd::Identity(4, 4));

  Eigen::MatrixXcd anti = Eigen::MatrixXcd::Zero(3, 3);
  anti(0, 2) = anti(1, 1) = anti(2, 0) = 1.0;
  CHECK(composition_matrix(UnitaryMatrix::permutation({1, 0}), 2).matrix == anti);

  Eigen::MatrixXcd expected(3, 3);
  expected << 0.5, 0.5, 0.5, 1.0, 0.0, -1.0, 0.5, -0.5, 0.5;
  CHECK(max_abs(composition_matrix(hadamard(), 2).matrix - expected) < 1e-15);
  CHECK_THROWS_AS(composition_matrix(hadamard(), kMaxDegree + 1), CapExceeded);
}

TEST_CASE("composition_matrix columns agree with compose_linear on monomials") {
  for (int d = 1; d <= 3; ++d) {
    const auto u = haar_sample(d, 17 + d);
    for (int n = 0; n <= 6; ++n) {
      const auto m = composition_matrix(u, n).matrix;
      const auto basis = enumerate_level(d, n);
      for (std::size_t col = 0; col < basis.size(); ++col) {
        const Eigen::VectorXcd c = compose_linear(HomPoly::monomial(basis[col]), u).coefficients();
        CHECK(max_abs(m.col(static_cast<Eigen::Index>(col)) - c) < 1e-13);
      }
    }
  }
}

TEST_CASE("multiplication_matrix examples") {
  Eigen::MatrixXd e1(2, 1);
  e1 << 1, 0;
  CHECK(multiplication_matrix(0, 2, 0) == e1);
  // basis Hom(1) = {z1, z2}, Hom(2) = {z1^2, z1 z2, z2^2}; z1 -> z1 z2, z2 -> z2^2
  Eigen::MatrixXd m(3, 2);
  m << 0, 0, 1, 0, 0, 1;
  CHECK(multiplication_matrix(1, 2, 1) == m);
  CHECK_THROWS_AS(multiplication_matrix(2, 2, 1), InvalidArgument);
}

TEST_CASE("beta_norm examples") {
  const auto szego = WeightFamily::radial(2, std::vector<double>(6, 1.0));
  CHECK(beta_norm(HomPoly::monomial({2, 1}), szego) == doctest::Approx(szego.beta({2, 1})).epsilon(1e-15));
  HomPoly sum(2, 1);
  sum.add({1, 0}, 1.0);
  sum.add({0, 1}, 1.0);
  CHECK(beta_norm(sum, WeightFamily::polydisc_hardy(2)) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(beta_norm(sum, szego) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("intertwining: C_u M_zj = sum_k u_jk M_zk C_u") {
  for (int d = 2; d <= 3; ++d) {
    for (std::uint64_t s = 0; s < 5; ++s) {
      const auto u = haar_sample(d, derive_seed(99, s));
      for (int n = 0; n <= 8; ++n) {
        const auto lower = composition_matrix(u, n).matrix;
        const auto upper = composition_matrix(u, n + 1).matrix;
        for (int j = 0; j < d; ++j) {
          Eigen::MatrixXcd rhs = Eigen::MatrixXcd::Zero(upper.rows(), lower.cols());
          for (int k = 0; k < d; ++k) rhs += u(j, k) * multiplication_matrix(k, d, n).cast<cdouble>() * lower;
          CHECK(max_abs(upper * multiplication_matrix(j, d, n).cast<cdouble>() - rhs) <= 1e-12);
        }
      }
    }
  }
}

TEST_CASE("group law C_{uv} = C_v C_u") {
  for (int d = 2; d <= 3; ++d) {
    const auto u = haar_sample(d, 1);
    const auto v = haar_sample(d, 2);
    for (int n = 0; n <= 8; ++n) {
      const auto lhs = composition_matrix(u * v, n).matrix;
      const Eigen::MatrixXcd rhs = composition_matrix(v, n).matrix * composition_matrix(u, n).matrix;
      CHECK(max_abs(lhs - rhs) <= 1e-12);
    }
  }
}

TEST_CASE("Fock unitarity: M^* diag(alpha!) M = diag(alpha!) and singular values of the scaled matrix are 1") {
  for (int d = 2; d <= 3; ++d) {
    const auto u = haar_sample(d, 77);
    for (int n = 0; n <= 8; ++n) {
      const auto m = composition_matrix(u, n).matrix;
      const Eigen::VectorXd g = fock_gram(d, n);
      const Eigen::MatrixXcd gram = m.adjoint() * g.cast<cdouble>().asDiagonal() * m;
      const Eigen::MatrixXcd target = g.cast<cdouble>().asDiagonal();
      CHECK(max_abs(gram - target) <= 1e-10 * g.maxCoeff());

      const Eigen::VectorXd root = g.cwiseSqrt();
      const Eigen::MatrixXcd scaled =
          root.cast<cdouble>().asDiagonal() * m * root.cwiseInverse().cast<cdouble>().asDiagonal();
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(scaled);
      CHECK(std::abs(svd.singularValues().maxCoeff() - 1.0) <= 1e-10);
      CHECK(std::abs(svd.singularValues().minCoeff() - 1.0) <= 1e-10);
    }
  }
}

TEST_CASE("HomPoly rejects terms of the wrong degree") {
  HomPoly p(2, 2);
  CHECK_THROWS_AS(p.add({1, 0}, 1.0), InvalidArgument);
  p.add({1, 1}, 2.0);
  p.add({1, 1}, -2.0);
  CHECK(p.terms().empty());
}
