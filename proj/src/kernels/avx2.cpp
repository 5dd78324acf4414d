#include "homshift/kernels.hpp"

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#define HOMSHIFT_HAVE_AVX2 1
#include <immintrin.h>
#endif

namespace homshift::kernels::avx2 {

#ifdef HOMSHIFT_HAVE_AVX2

#define HOMSHIFT_AVX2 __attribute__((target("avx2,fma")))

namespace {

HOMSHIFT_AVX2 inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

// [g0, g1] -> [g0, g0, g1, g1], matching two interleaved complex numbers.
HOMSHIFT_AVX2 inline __m256d load_pair_weights(const double* g) {
  const __m256d w = _mm256_castpd128_pd256(_mm_loadu_pd(g));
  return _mm256_permute4x64_pd(w, 0b01010000);
}

}  // namespace

bool compiled() noexcept { return true; }

HOMSHIFT_AVX2 cdouble weighted_cdot(const cdouble* x, const cdouble* y, const double* g,
                                    std::size_t n) noexcept {
  const auto* xp = reinterpret_cast<const double*>(x);
  const auto* yp = reinterpret_cast<const double*>(y);
  // acc_re lanes: g*xr*yr, g*xi*yi ; acc_im lanes: g*xr*yi, g*xi*yr
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  std::size_t r = 0;
  for (; r + 2 <= n; r += 2) {
    const __m256d xv = _mm256_loadu_pd(xp + 2 * r);
    const __m256d yv = _mm256_loadu_pd(yp + 2 * r);
    const __m256d gv = load_pair_weights(g + r);
    const __m256d gx = _mm256_mul_pd(gv, xv);
    acc_re = _mm256_fmadd_pd(gx, yv, acc_re);
    acc_im = _mm256_fmadd_pd(gx, _mm256_permute_pd(yv, 0b0101), acc_im);
  }
  double re = hsum(acc_re);
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc_im);
  double im = (lanes[0] + lanes[2]) - (lanes[1] + lanes[3]);
  for (; r < n; ++r) {
    const double xr = x[r].real(), xi = x[r].imag();
    const double yr = y[r].real(), yi = y[r].imag();
    re += g[r] * (xr * yr + xi * yi);
    im += g[r] * (xr * yi - xi * yr);
  }
  return {re, im};
}

HOMSHIFT_AVX2 double weighted_abs2(const cdouble* x, const double* g, std::size_t n) noexcept {
  const auto* xp = reinterpret_cast<const double*>(x);
  __m256d acc = _mm256_setzero_pd();
  std::size_t r = 0;
  for (; r + 2 <= n; r += 2) {
    const __m256d xv = _mm256_loadu_pd(xp + 2 * r);
    acc = _mm256_fmadd_pd(_mm256_mul_pd(load_pair_weights(g + r), xv), xv, acc);
  }
  double out = hsum(acc);
  for (; r < n; ++r) out += g[r] * std::norm(x[r]);
  return out;
}

HOMSHIFT_AVX2 PowerSums monomial_power_sums(const double* const* coords, std::size_t dims,
                                            std::size_t count, const int* exponent) noexcept {
  __m256d sum = _mm256_setzero_pd();
  __m256d sum_sq = _mm256_setzero_pd();
  std::size_t s = 0;
  for (; s + 4 <= count; s += 4) {
    __m256d v = _mm256_set1_pd(1.0);
    for (std::size_t j = 0; j < dims; ++j) {
      const __m256d c = _mm256_loadu_pd(coords[j] + s);
      for (int k = 0; k < exponent[j]; ++k) v = _mm256_mul_pd(v, c);
    }
    sum = _mm256_add_pd(sum, v);
    sum_sq = _mm256_fmadd_pd(v, v, sum_sq);
  }
  PowerSums out{hsum(sum), hsum(sum_sq)};
  for (; s < count; ++s) {
    double v = 1.0;
    for (std::size_t j = 0; j < dims; ++j) {
      for (int k = 0; k < exponent[j]; ++k) v *= coords[j][s];
    }
    out.sum += v;
    out.sum_squares += v * v;
  }
  return out;
}

#else

bool compiled() noexcept { return false; }

cdouble weighted_cdot(const cdouble* x, const cdouble* y, const double* g, std::size_t n) noexcept {
  return scalar::weighted_cdot(x, y, g, n);
}
double weighted_abs2(const cdouble* x, const double* g, std::size_t n) noexcept {
  return scalar::weighted_abs2(x, g, n);
}
PowerSums monomial_power_sums(const double* const* coords, std::size_t dims, std::size_t count,
                              const int* exponent) noexcept {
  return scalar::monomial_power_sums(coords, dims, count, exponent);
}

#endif

}  // namespace homshift::kernels::avx2
