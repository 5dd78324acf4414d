#include <atomic>

#include "homshift/error.hpp"
#include "homshift/kernels.hpp"

namespace homshift::kernels {

namespace {

bool cpu_has_avx2() noexcept {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

std::atomic<Backend>& active_slot() noexcept {
  static std::atomic<Backend> slot{detected()};
  return slot;
}

}  // namespace

std::string_view name(Backend backend) noexcept { return backend == Backend::avx2 ? "avx2" : "scalar"; }

bool available(Backend backend) noexcept {
  if (backend == Backend::scalar) return true;
  static const bool has_avx2 = avx2::compiled() && cpu_has_avx2();
  return has_avx2;
}

Backend detected() noexcept { return available(Backend::avx2) ? Backend::avx2 : Backend::scalar; }

Backend active() noexcept { return active_slot().load(std::memory_order_relaxed); }

void set_active(Backend backend) {
  if (!available(backend)) throw InvalidArgument("kernel backend " + std::string(name(backend)) + " unavailable");
  active_slot().store(backend, std::memory_order_relaxed);
}

cdouble weighted_cdot(std::span<const cdouble> x, std::span<const cdouble> y, std::span<const double> g) {
  if (x.size() != y.size() || x.size() != g.size()) throw InvalidArgument("weighted_cdot length mismatch");
  return active() == Backend::avx2 ? avx2::weighted_cdot(x.data(), y.data(), g.data(), x.size())
                                   : scalar::weighted_cdot(x.data(), y.data(), g.data(), x.size());
}

double weighted_abs2(std::span<const cdouble> x, std::span<const double> g) {
  if (x.size() != g.size()) throw InvalidArgument("weighted_abs2 length mismatch");
  return active() == Backend::avx2 ? avx2::weighted_abs2(x.data(), g.data(), x.size())
                                   : scalar::weighted_abs2(x.data(), g.data(), x.size());
}

PowerSums monomial_power_sums(std::span<const double* const> coords, std::size_t count,
                              std::span<const int> exponent) {
  if (coords.size() != exponent.size()) throw InvalidArgument("monomial_power_sums dimension mismatch");
  return active() == Backend::avx2
             ? avx2::monomial_power_sums(coords.data(), coords.size(), count, exponent.data())
             : scalar::monomial_power_sums(coords.data(), coords.size(), count, exponent.data());
}

}  // namespace homshift::kernels
