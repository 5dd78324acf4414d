#include "homshift/kernels.hpp"

namespace homshift::kernels::scalar {

cdouble weighted_cdot(const cdouble* x, const cdouble* y, const double* g, std::size_t n) noexcept {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    const double xr = x[r].real(), xi = x[r].imag();
    const double yr = y[r].real(), yi = y[r].imag();
    re += g[r] * (xr * yr + xi * yi);
    im += g[r] * (xr * yi - xi * yr);
  }
  return {re, im};
}

double weighted_abs2(const cdouble* x, const double* g, std::size_t n) noexcept {
  double acc = 0.0;
  for (std::size_t r = 0; r < n; ++r) acc += g[r] * std::norm(x[r]);
  return acc;
}

PowerSums monomial_power_sums(const double* const* coords, std::size_t dims, std::size_t count,
                              const int* exponent) noexcept {
  PowerSums out;
  for (std::size_t s = 0; s < count; ++s) {
    double v = 1.0;
    for (std::size_t j = 0; j < dims; ++j) {
      for (int k = 0; k < exponent[j]; ++k) v *= coords[j][s];
    }
    out.sum += v;
    out.sum_squares += v * v;
  }
  return out;
}

}  // namespace homshift::kernels::scalar
