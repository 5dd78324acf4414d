#include "homshift/weights.hpp"

#include <algorithm>
#include <cmath>

#include "homshift/error.hpp"

namespace homshift {

namespace {

void require_positive_finite(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw InvalidArgument(std::string(what) + " must be positive and finite");
}

}  // namespace

const char* to_string(WeightFamily::Kind kind) noexcept {
  switch (kind) {
    case WeightFamily::Kind::radial: return "radial";
    case WeightFamily::Kind::drury_arveson: return "drury_arveson";
    case WeightFamily::Kind::polydisc_hardy: return "polydisc_hardy";
    case WeightFamily::Kind::table: return "table";
  }
  return "unknown";
}

double radial_factor(const MultiIndex& alpha) {
  const int d = alpha.dim();
  const BigUint num = factorial(d - 1) * factorial(alpha);
  const BigUint den = factorial(d - 1 + alpha.degree());
  return std::sqrt(to_double(num) / to_double(den));
}

WeightFamily WeightFamily::radial(int d, std::vector<double> a) {
  require_dimension(d);
  if (a.empty()) throw InvalidArgument("radial family needs at least a_0");
  const int cap = static_cast<int>(a.size()) - 1;
  require_degree(cap, kMaxDegree, "radial family degree");
  for (double v : a) require_positive_finite(v, "radial coefficient");
  WeightFamily f(Kind::radial, d, cap);
  f.radial_ = std::move(a);
  return f;
}

WeightFamily WeightFamily::drury_arveson(int d, int cap) {
  require_dimension(d);
  require_degree(cap, kMaxDegree, "family cap");
  return {Kind::drury_arveson, d, cap};
}

WeightFamily WeightFamily::polydisc_hardy(int d, int cap) {
  require_dimension(d);
  require_degree(cap, kMaxDegree, "family cap");
  return {Kind::polydisc_hardy, d, cap};
}

WeightFamily WeightFamily::table(int d, int cap, std::map<MultiIndex, double> entries) {
  require_dimension(d);
  require_degree(cap, kMaxDegree, "family cap");
  for (const auto& [alpha, value] : entries) {
    if (alpha.dim() != d) throw InvalidArgument("table entry " + alpha.to_string() + " has wrong dimension");
    if (alpha.degree() > cap) throw InvalidArgument("table entry " + alpha.to_string() + " above cap");
    require_positive_finite(value, "table weight");
  }
  for (int n = 0; n <= cap; ++n) {
    for (const auto& alpha : enumerate_level(d, n)) {
      if (!entries.contains(alpha)) throw InvalidArgument("table is missing weight for " + alpha.to_string());
    }
  }
  WeightFamily f(Kind::table, d, cap);
  f.table_ = std::move(entries);
  return f;
}

WeightFamily WeightFamily::fock(int d, int cap) {
  require_dimension(d);
  require_degree(cap, kMaxDegree, "family cap");
  std::vector<double> a(static_cast<std::size_t>(cap) + 1);
  for (int n = 0; n <= cap; ++n) {
    a[static_cast<std::size_t>(n)] = std::sqrt(to_double(factorial(d - 1 + n) / factorial(d - 1)));
  }
  return radial(d, std::move(a));
}

const std::vector<double>& WeightFamily::radial_coefficients() const {
  if (kind_ != Kind::radial) throw InvalidArgument("not a radial family");
  return radial_;
}

const std::map<MultiIndex, double>& WeightFamily::table_entries() const {
  if (kind_ != Kind::table) throw InvalidArgument("not a table family");
  return table_;
}

double WeightFamily::beta(const MultiIndex& alpha) const {
  if (alpha.dim() != d_) throw InvalidArgument("multi-index dimension does not match family");
  require_degree(alpha.degree(), cap_, "weight degree");
  switch (kind_) {
    case Kind::radial:
      return radial_[static_cast<std::size_t>(alpha.degree())] * radial_factor(alpha);
    case Kind::drury_arveson:
      return std::sqrt(to_double(factorial(alpha)) / to_double(factorial(alpha.degree())));
    case Kind::polydisc_hardy:
      return 1.0;
    case Kind::table:
      return table_.at(alpha);
  }
  return 0.0;
}

std::vector<double> WeightFamily::level_betas(int n) const {
  require_degree(n, cap_, "level");
  std::vector<double> out;
  for (const auto& alpha : enumerate_level(d_, n)) out.push_back(beta(alpha));
  return out;
}

std::vector<double> shift_bound(const WeightFamily& family, int max_degree) {
  require_degree(max_degree + 1, family.cap(), "shift_bound degree");
  std::vector<double> bounds(static_cast<std::size_t>(family.dim()), 0.0);
  for (int n = 0; n <= max_degree; ++n) {
    for (const auto& alpha : enumerate_level(family.dim(), n)) {
      const double base = family.beta(alpha);
      for (int j = 0; j < family.dim(); ++j) {
        auto& b = bounds[static_cast<std::size_t>(j)];
        b = std::max(b, family.beta(alpha.raised(j)) / base);
      }
    }
  }
  return bounds;
}

double fock_norm(const MultiIndex& alpha) { return std::sqrt(to_double(factorial(alpha))); }

}  // namespace homshift
