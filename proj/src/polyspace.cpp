#include "homshift/polyspace.hpp"

#include "homshift/error.hpp"
#include "homshift/kernels.hpp"

namespace homshift {

HomPoly::HomPoly(int d, int degree) : d_(d), degree_(degree) {
  require_dimension(d);
  if (degree < 0) throw InvalidArgument("polynomial degree must be non-negative");
}

HomPoly HomPoly::monomial(const MultiIndex& alpha, cdouble coef) {
  HomPoly p(alpha.dim(), alpha.degree());
  p.add(alpha, coef);
  return p;
}

HomPoly HomPoly::linear(std::span<const cdouble> coefs) {
  const int d = static_cast<int>(coefs.size());
  HomPoly p(d, 1);
  for (int k = 0; k < d; ++k) p.add(unit(d, k), coefs[static_cast<std::size_t>(k)]);
  return p;
}

cdouble HomPoly::coefficient(const MultiIndex& alpha) const {
  const auto it = terms_.find(alpha);
  return it == terms_.end() ? cdouble{} : it->second;
}

void HomPoly::add(const MultiIndex& alpha, cdouble c) {
  if (alpha.dim() != d_ || alpha.degree() != degree_) {
    throw InvalidArgument("term " + alpha.to_string() + " does not belong to Hom(" + std::to_string(degree_) + ")");
  }
  if (c == cdouble{}) return;
  auto [it, inserted] = terms_.try_emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (it->second == cdouble{}) terms_.erase(it);
  }
}

Eigen::VectorXcd HomPoly::coefficients() const {
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(level_size(d_, degree_)));
  for (const auto& [alpha, c] : terms_) out(static_cast<Eigen::Index>(level_rank(alpha))) = c;
  return out;
}

HomPoly operator*(const HomPoly& a, const HomPoly& b) {
  if (a.d_ != b.d_) throw InvalidArgument("polynomial dimension mismatch");
  HomPoly out(a.d_, a.degree_ + b.degree_);
  for (const auto& [alpha, ca] : a.terms_) {
    for (const auto& [beta, cb] : b.terms_) out.add(alpha + beta, ca * cb);
  }
  return out;
}

bool operator==(const HomPoly& a, const HomPoly& b) {
  return a.d_ == b.d_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

HomPoly compose_linear(const HomPoly& p, const UnitaryMatrix& u) {
  if (p.dim() != u.dim()) throw InvalidArgument("polynomial and unitary dimensions differ");
  const int d = p.dim();
  std::vector<HomPoly> forms;
  for (int j = 0; j < d; ++j) {
    std::vector<cdouble> row(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) row[static_cast<std::size_t>(k)] = u(j, k);
    forms.push_back(HomPoly::linear(row));
  }
  HomPoly out(d, p.degree());
  for (const auto& [alpha, c] : p.terms()) {
    HomPoly term = HomPoly::monomial(MultiIndex::zero(d), c);
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < alpha[j]; ++k) term = term * forms[static_cast<std::size_t>(j)];
    }
    for (const auto& [beta, cb] : term.terms()) out.add(beta, cb);
  }
  return out;
}

CompositionMatrix composition_matrix(const UnitaryMatrix& u, int n) {
  require_degree(n, kMaxDegree, "composition degree");
  const int d = u.dim();
  // Level-by-level: column(alpha) = column(alpha - eps_j) * (u.z)_j with j the
  // first nonzero slot of alpha.
  Eigen::MatrixXcd prev = Eigen::MatrixXcd::Ones(1, 1);
  for (int level = 1; level <= n; ++level) {
    const auto prev_basis = enumerate_level(d, level - 1);
    const auto basis = enumerate_level(d, level);
    const auto dim = static_cast<Eigen::Index>(basis.size());
    Eigen::MatrixXcd next = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
      const MultiIndex& alpha = basis[static_cast<std::size_t>(col)];
      int j = 0;
      while (alpha[j] == 0) ++j;
      auto lowered = alpha.components();
      --lowered[static_cast<std::size_t>(j)];
      const auto source = static_cast<Eigen::Index>(level_rank(MultiIndex(std::move(lowered))));
      for (Eigen::Index row = 0; row < prev.rows(); ++row) {
        const cdouble c = prev(row, source);
        if (c == cdouble{}) continue;
        const MultiIndex& beta = prev_basis[static_cast<std::size_t>(row)];
        for (int k = 0; k < d; ++k) {
          const cdouble ujk = u(j, k);
          if (ujk == cdouble{}) continue;
          next(static_cast<Eigen::Index>(level_rank(beta.raised(k))), col) += c * ujk;
        }
      }
    }
    prev = std::move(next);
  }
  return {d, n, std::move(prev), u};
}

Eigen::MatrixXd multiplication_matrix(int j, int d, int n) {
  require_dimension(d);
  if (j < 0 || j >= d) throw InvalidArgument("multiplication direction out of range");
  require_degree(n + 1, kMaxDegree, "multiplication target degree");
  const auto basis = enumerate_level(d, n);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(level_size(d, n + 1)),
                                            static_cast<Eigen::Index>(basis.size()));
  for (std::size_t col = 0; col < basis.size(); ++col) {
    m(static_cast<Eigen::Index>(level_rank(basis[col].raised(j))), static_cast<Eigen::Index>(col)) = 1.0;
  }
  return m;
}

double beta_norm(const HomPoly& p, const WeightFamily& family) {
  if (p.dim() != family.dim()) throw InvalidArgument("polynomial and family dimensions differ");
  const Eigen::VectorXcd c = p.coefficients();
  const Eigen::VectorXd g = beta_gram(family, p.degree());
  return std::sqrt(kernels::weighted_abs2({c.data(), static_cast<std::size_t>(c.size())},
                                          {g.data(), static_cast<std::size_t>(g.size())}));
}

Eigen::VectorXd beta_gram(const WeightFamily& family, int n) {
  const auto betas = family.level_betas(n);
  Eigen::VectorXd g(static_cast<Eigen::Index>(betas.size()));
  for (std::size_t i = 0; i < betas.size(); ++i) g(static_cast<Eigen::Index>(i)) = betas[i] * betas[i];
  return g;
}

Eigen::VectorXd fock_gram(int d, int n) {
  require_degree(n, kMaxDegree, "level");
  const auto basis = enumerate_level(d, n);
  Eigen::VectorXd g(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) g(static_cast<Eigen::Index>(i)) = to_double(factorial(basis[i]));
  return g;
}

Eigen::VectorXcd evaluate_monomials(const Eigen::VectorXcd& z, int n) {
  const int d = static_cast<int>(z.size());
  const auto basis = enumerate_level(d, n);
  Eigen::VectorXcd out(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    cdouble v = 1.0;
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < basis[i][j]; ++k) v *= z(j);
    }
    out(static_cast<Eigen::Index>(i)) = v;
  }
  return out;
}

}  // namespace homshift
