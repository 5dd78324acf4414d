#pragma once

#include <map>
#include <vector>

#include "homshift/combinatorics.hpp"

namespace homshift {

/// The weight multisequence beta_alpha = ||z^alpha|| of a space H^2(beta) of
/// formal power series in d variables, defined up to a degree cap.
class WeightFamily {
 public:
  enum class Kind { radial, drury_arveson, polydisc_hardy, table };

  /// beta_alpha = a_|alpha| * sqrt((d-1)! alpha! / (d-1+|alpha|)!). Cap is a.size()-1.
  static WeightFamily radial(int d, std::vector<double> a);
  /// beta_alpha = sqrt(alpha! / |alpha|!).
  static WeightFamily drury_arveson(int d, int cap = kMaxDegree);
  /// beta_alpha = 1.
  static WeightFamily polydisc_hardy(int d, int cap = kMaxDegree);
  /// Explicit values; every alpha with |alpha| <= cap must be present and positive.
  static WeightFamily table(int d, int cap, std::map<MultiIndex, double> entries);
  /// Fischer-Fock weights sqrt(alpha!), expressed as a radial family.
  static WeightFamily fock(int d, int cap = kMaxDegree);

  Kind kind() const noexcept { return kind_; }
  int dim() const noexcept { return d_; }
  int cap() const noexcept { return cap_; }
  /// Radial coefficients a_0..a_cap (radial families only).
  const std::vector<double>& radial_coefficients() const;
  const std::map<MultiIndex, double>& table_entries() const;

  double beta(const MultiIndex& alpha) const;
  /// beta over enumerate_level(d, n), in that order.
  std::vector<double> level_betas(int n) const;

 private:
  WeightFamily(Kind kind, int d, int cap) : kind_(kind), d_(d), cap_(cap) {}

  Kind kind_;
  int d_;
  int cap_;
  std::vector<double> radial_;
  std::map<MultiIndex, double> table_;
};

const char* to_string(WeightFamily::Kind kind) noexcept;

/// sqrt((d-1)! alpha! / (d-1+|alpha|)!), the sigma-normalized radial factor.
double radial_factor(const MultiIndex& alpha);

/// For each direction j, max over |alpha| <= max_degree of beta_{alpha+eps_j} / beta_alpha.
/// Needs max_degree + 1 <= cap.
std::vector<double> shift_bound(const WeightFamily& family, int max_degree);

/// ||z^alpha||_F = sqrt(alpha!).
double fock_norm(const MultiIndex& alpha);

}  // namespace homshift
