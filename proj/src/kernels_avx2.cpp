// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.
#include "vmr/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>

#include <cmath>

namespace vmr::kernels {
namespace {

void stencil_dot_avx2(const double* in, std::size_t m, const double* w,
                      int taps, double* out) {
  std::size_t k = 0;
  for (; k + 4 <= m; k += 4) {
    __m256d acc = _mm256_setzero_pd();
    for (int i = 0; i < taps; ++i) {
      acc = _mm256_fmadd_pd(_mm256_set1_pd(w[i]),
                            _mm256_loadu_pd(in + k + std::size_t(i)), acc);
    }
    _mm256_storeu_pd(out + k, acc);
  }
  for (; k < m; ++k) {
    double acc = 0.0;
    for (int i = 0; i < taps; ++i)
      acc = std::fma(w[i], in[k + std::size_t(i)], acc);
    out[k] = acc;
  }
}

void stencil_residual_avx2(const double* fine, const double* in, std::size_t m,
                           const double* w, int taps, double* out) {
  std::size_t k = 0;
  for (; k + 4 <= m; k += 4) {
    __m256d acc = _mm256_setzero_pd();
    for (int i = 0; i < taps; ++i) {
      acc = _mm256_fmadd_pd(_mm256_set1_pd(w[i]),
                            _mm256_loadu_pd(in + k + std::size_t(i)), acc);
    }
    _mm256_storeu_pd(out + k, _mm256_sub_pd(_mm256_loadu_pd(fine + k), acc));
  }
  for (; k < m; ++k) {
    double acc = 0.0;
    for (int i = 0; i < taps; ++i)
      acc = std::fma(w[i], in[k + std::size_t(i)], acc);
    out[k] = fine[k] - acc;
  }
}

double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(lo) + _mm_cvtsd_f64(_mm_unpackhi_pd(lo, lo));
}

double sum_avx2(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
  double s = hsum(acc);
  for (; i < n; ++i) s += x[i];
  return s;
}

double sum_abs_avx2(const double* x, std::size_t n) {
  const __m256d mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    acc = _mm256_add_pd(acc, _mm256_and_pd(mask, _mm256_loadu_pd(x + i)));
  double s = hsum(acc);
  for (; i < n; ++i) s += std::fabs(x[i]);
  return s;
}

double sum_sq_avx2(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d v = _mm256_loadu_pd(x + i);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i) s += x[i] * x[i];
  return s;
}

double max_abs_avx2(const double* x, std::size_t n) {
  const __m256d mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    acc = _mm256_max_pd(acc, _mm256_and_pd(mask, _mm256_loadu_pd(x + i)));
  double m4[4];
  _mm256_storeu_pd(m4, acc);
  double s = std::max(std::max(m4[0], m4[1]), std::max(m4[2], m4[3]));
  for (; i < n; ++i) s = std::max(s, std::fabs(x[i]));
  return s;
}

}  // namespace

const Ops* avx2_ops_impl() {
  static const Ops ops = {stencil_dot_avx2, stencil_residual_avx2,
                          sum_avx2,         sum_abs_avx2,
                          sum_sq_avx2,      max_abs_avx2,
                          "avx2"};
  return &ops;
}

}  // namespace vmr::kernels

#else

namespace vmr::kernels {
const Ops* avx2_ops_impl() { return nullptr; }
}  // namespace vmr::kernels

#endif
