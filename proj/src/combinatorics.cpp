#include "homshift/combinatorics.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

#include "homshift/error.hpp"

namespace homshift {

namespace {

constexpr int kMaxExactFactorial = 34;

constexpr std::array<BigUint, kMaxExactFactorial + 1> make_factorials() {
  std::array<BigUint, kMaxExactFactorial + 1> table{};
  table[0] = 1;
  for (int k = 1; k <= kMaxExactFactorial; ++k) table[k] = table[k - 1] * static_cast<BigUint>(k);
  return table;
}

constexpr auto kFactorials = make_factorials();

void append_level(int d, int n, int slot, std::vector<int>& current, std::vector<MultiIndex>& out) {
  if (slot == d - 1) {
    current[slot] = n;
    out.emplace_back(current);
    return;
  }
  for (int k = n; k >= 0; --k) {
    current[slot] = k;
    append_level(d, n - k, slot + 1, current, out);
  }
}

}  // namespace

MultiIndex::MultiIndex(std::initializer_list<int> components)
    : MultiIndex(std::vector<int>(components)) {}

MultiIndex::MultiIndex(std::vector<int> components) : components_(std::move(components)) {
  if (components_.empty()) throw InvalidArgument("multi-index needs at least one component");
  for (int c : components_) {
    if (c < 0) throw InvalidArgument("multi-index components must be non-negative");
  }
  degree_ = std::accumulate(components_.begin(), components_.end(), 0);
}

MultiIndex MultiIndex::zero(int d) {
  if (d < 1) throw InvalidArgument("dimension must be positive");
  return MultiIndex(std::vector<int>(static_cast<std::size_t>(d), 0));
}

MultiIndex MultiIndex::raised(int j) const {
  if (j < 0 || j >= dim()) throw InvalidArgument("direction out of range");
  auto c = components_;
  ++c[static_cast<std::size_t>(j)];
  return MultiIndex(std::move(c));
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  if (other.dim() != dim()) throw InvalidArgument("multi-index dimension mismatch");
  auto c = components_;
  for (std::size_t j = 0; j < c.size(); ++j) c[j] += other.components_[j];
  return MultiIndex(std::move(c));
}

std::string MultiIndex::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiIndex& alpha) {
  os << '(';
  for (int j = 0; j < alpha.dim(); ++j) os << (j ? "," : "") << alpha[j];
  return os << ')';
}

std::vector<MultiIndex> enumerate_level(int d, int n) {
  if (d < 1) throw InvalidArgument("dimension must be positive");
  if (n < 0) throw InvalidArgument("degree must be non-negative");
  std::vector<MultiIndex> out;
  out.reserve(level_size(d, n));
  std::vector<int> current(static_cast<std::size_t>(d), 0);
  append_level(d, n, 0, current, out);
  return out;
}

std::size_t level_size(int d, int n) {
  if (d < 1 || n < 0) throw InvalidArgument("level_size needs d >= 1 and n >= 0");
  return static_cast<std::size_t>(binomial(n + d - 1, d - 1));
}

std::size_t level_rank(const MultiIndex& alpha) {
  // Count the indices that precede alpha: at each slot, those with a larger
  // component there and identical components before it.
  const int d = alpha.dim();
  int remaining = alpha.degree();
  std::size_t rank = 0;
  for (int slot = 0; slot + 1 < d; ++slot) {
    const int free_slots = d - slot - 1;
    for (int k = remaining; k > alpha[slot]; --k) rank += level_size(free_slots, remaining - k);
    remaining -= alpha[slot];
  }
  return rank;
}

BigUint binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigUint result = 1;
  for (int i = 1; i <= k; ++i) {
    const auto factor = static_cast<BigUint>(n - k + i);
    if (result > ~static_cast<BigUint>(0) / factor) throw CapExceeded("binomial coefficient exceeds 128 bits");
    // result * (n-k+i) is divisible by i since it equals C(n-k+i, i) * i.
    result = result * factor / static_cast<BigUint>(i);
  }
  return result;
}

BigUint factorial(int n) {
  if (n < 0) throw InvalidArgument("factorial of a negative integer");
  if (n > kMaxExactFactorial) throw CapExceeded("factorial argument " + std::to_string(n) + " exceeds exact range");
  return kFactorials[static_cast<std::size_t>(n)];
}

BigUint factorial(const MultiIndex& alpha) {
  require_degree(alpha.degree(), kMaxDegree, "multi-index degree");
  BigUint out = 1;
  for (int c : alpha.components()) out *= kFactorials[static_cast<std::size_t>(c)];
  return out;
}

BigUint multinomial(const MultiIndex& alpha) { return factorial(alpha.degree()) / factorial(alpha); }

MultiIndex unit(int d, int j) {
  if (d < 1) throw InvalidArgument("dimension must be positive");
  if (j < 0 || j >= d) throw InvalidArgument("unit direction " + std::to_string(j) + " out of range");
  return MultiIndex::zero(d).raised(j);
}

double to_double(BigUint value) {
  const auto high = static_cast<std::uint64_t>(value >> 64);
  const auto low = static_cast<std::uint64_t>(value);
  return static_cast<double>(high) * 18446744073709551616.0 + static_cast<double>(low);
}

std::string to_string(BigUint value) {
  if (value == 0) return "0";
  std::string digits;
  while (value != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  return {digits.rbegin(), digits.rend()};
}

void require_degree(int n, int cap, const char* what) {
  if (n < 0) throw InvalidArgument(std::string(what) + " must be non-negative");
  if (n > cap) {
    throw CapExceeded(std::string(what) + " " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  }
}

void require_dimension(int d) {
  if (d < 1 || d > kMaxDimension) {
    throw InvalidArgument("dimension " + std::to_string(d) + " outside 1.." + std::to_string(kMaxDimension));
  }
}

}  // namespace homshift
