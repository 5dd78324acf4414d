#pragma once

#include <map>
#include <span>

#include <Eigen/Dense>

#include "homshift/combinatorics.hpp"
#include "homshift/unitary.hpp"
#include "homshift/weights.hpp"

namespace homshift {

/// Homogeneous polynomial of a fixed degree in d variables.
class HomPoly {
 public:
  HomPoly(int d, int degree);
  /// z^alpha with coefficient `coef`.
  static HomPoly monomial(const MultiIndex& alpha, cdouble coef = 1.0);
  /// sum_k coefs[k] z_k.
  static HomPoly linear(std::span<const cdouble> coefs);

  int dim() const noexcept { return d_; }
  int degree() const noexcept { return degree_; }
  const std::map<MultiIndex, cdouble>& terms() const noexcept { return terms_; }
  cdouble coefficient(const MultiIndex& alpha) const;

  /// Adds c z^alpha; alpha must have this polynomial's degree.
  void add(const MultiIndex& alpha, cdouble c);
  /// Coefficients in graded-lex order of Hom(degree).
  Eigen::VectorXcd coefficients() const;

  friend HomPoly operator*(const HomPoly& a, const HomPoly& b);
  friend bool operator==(const HomPoly& a, const HomPoly& b);

 private:
  int d_;
  int degree_;
  std::map<MultiIndex, cdouble> terms_;  // zero coefficients dropped
};

/// p(u.z), expanded exactly by multiplying out the linear forms (u.z)_j.
HomPoly compose_linear(const HomPoly& p, const UnitaryMatrix& u);

/// Matrix of C_u f = f(u.z) on Hom(n) in graded-lex order: column alpha holds
/// the coefficients of (u.z)^alpha.
struct CompositionMatrix {
  int d;
  int n;
  Eigen::MatrixXcd matrix;
  UnitaryMatrix u;
};

CompositionMatrix composition_matrix(const UnitaryMatrix& u, int n);

/// 0/1 matrix of f -> z_j f from Hom(n) to Hom(n+1), 0-based j.
Eigen::MatrixXd multiplication_matrix(int j, int d, int n);

/// sqrt(sum |c_alpha|^2 beta_alpha^2).
double beta_norm(const HomPoly& p, const WeightFamily& family);

/// Diagonal of the beta Gram form on Hom(n): beta_alpha^2.
Eigen::VectorXd beta_gram(const WeightFamily& family, int n);
/// Diagonal of the Fischer-Fock Gram form on Hom(n): alpha!.
Eigen::VectorXd fock_gram(int d, int n);

/// Monomial values z^alpha for |alpha| = n in graded-lex order.
Eigen::VectorXcd evaluate_monomials(const Eigen::VectorXcd& z, int n);

}  // namespace homshift
