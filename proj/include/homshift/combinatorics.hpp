#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace homshift {

/// Largest supported number of variables.
inline constexpr int kMaxDimension = 4;
/// Largest supported total degree. Every factorial that appears in a weight
/// formula, including (d-1+n)!, stays exact in 128 bits below this cap.
inline constexpr int kMaxDegree = 25;

using BigUint = unsigned __int128;

/// Exponent vector alpha in N^d.
class MultiIndex {
 public:
  MultiIndex() = default;
  MultiIndex(std::initializer_list<int> components);
  explicit MultiIndex(std::vector<int> components);

  /// The zero exponent in d variables.
  static MultiIndex zero(int d);

  int dim() const noexcept { return static_cast<int>(components_.size()); }
  int degree() const noexcept { return degree_; }
  int operator[](int j) const { return components_[static_cast<std::size_t>(j)]; }
  const std::vector<int>& components() const noexcept { return components_; }

  /// alpha + eps_j (0-based direction).
  MultiIndex raised(int j) const;
  /// alpha + beta, componentwise.
  MultiIndex operator+(const MultiIndex& other) const;

  std::string to_string() const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex& a, const MultiIndex& b) { return a.components_ <=> b.components_; }

 private:
  std::vector<int> components_;
  int degree_ = 0;
};

std::ostream& operator<<(std::ostream& os, const MultiIndex& alpha);

/// All alpha with |alpha| = n in graded-lex order: (n,0,..), (n-1,1,..), ..., (0,..,n).
std::vector<MultiIndex> enumerate_level(int d, int n);

/// Position of alpha inside enumerate_level(alpha.dim(), alpha.degree()).
std::size_t level_rank(const MultiIndex& alpha);

/// dim Hom(n) = C(n+d-1, d-1).
std::size_t level_size(int d, int n);

/// Exact binomial coefficient; throws CapExceeded if the result leaves 128 bits.
BigUint binomial(int n, int k);

/// Exact n! for n <= 34 (the largest factorial below 2^128).
BigUint factorial(int n);

/// alpha! = prod alpha_j!. Refuses |alpha| > kMaxDegree.
BigUint factorial(const MultiIndex& alpha);

/// n! / alpha!, exact.
BigUint multinomial(const MultiIndex& alpha);

/// eps_j in d variables (0-based j).
MultiIndex unit(int d, int j);

double to_double(BigUint value);
std::string to_string(BigUint value);

/// Throws CapExceeded when n is above `cap`; `what` names the quantity.
void require_degree(int n, int cap, const char* what);
/// Throws InvalidArgument unless 1 <= d <= kMaxDimension.
void require_dimension(int d);

}  // namespace homshift
