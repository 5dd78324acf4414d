#pragma once

// Data-parallel inner loops. Each kernel has a scalar reference version and,
// on x86-64 hosts with AVX2+FMA, a vectorized version; the active backend is
// chosen once at startup from CPUID and can be pinned for testing.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace homshift::kernels {

using cdouble = std::complex<double>;

enum class Backend { scalar, avx2 };

std::string_view name(Backend backend) noexcept;
bool available(Backend backend) noexcept;
/// Best available backend on this CPU.
Backend detected() noexcept;
Backend active() noexcept;
/// Pins the backend used by the dispatching entry points. Throws InvalidArgument if unavailable.
void set_active(Backend backend);

/// sum_r g[r] * conj(x[r]) * y[r]
cdouble weighted_cdot(std::span<const cdouble> x, std::span<const cdouble> y, std::span<const double> g);

/// sum_r g[r] * |x[r]|^2
double weighted_abs2(std::span<const cdouble> x, std::span<const double> g);

/// Power sums of one monomial over a batch of points given as structure-of-arrays
/// squared moduli: v_s = prod_j x[j][s]^exponent[j]. Returns sum v_s and sum v_s^2.
struct PowerSums {
  double sum = 0.0;
  double sum_squares = 0.0;
};
PowerSums monomial_power_sums(std::span<const double* const> coords, std::size_t count,
                              std::span<const int> exponent);

/// Per-backend entry points; both are always callable on the scalar side,
/// the avx2 set only when available(Backend::avx2).
namespace scalar {
cdouble weighted_cdot(const cdouble* x, const cdouble* y, const double* g, std::size_t n) noexcept;
double weighted_abs2(const cdouble* x, const double* g, std::size_t n) noexcept;
PowerSums monomial_power_sums(const double* const* coords, std::size_t dims, std::size_t count,
                              const int* exponent) noexcept;
}  // namespace scalar

namespace avx2 {
bool compiled() noexcept;
cdouble weighted_cdot(const cdouble* x, const cdouble* y, const double* g, std::size_t n) noexcept;
double weighted_abs2(const cdouble* x, const double* g, std::size_t n) noexcept;
PowerSums monomial_power_sums(const double* const* coords, std::size_t dims, std::size_t count,
                              const int* exponent) noexcept;
}  // namespace avx2

}  // namespace homshift::kernels
