#pragma once

#include <cstddef>

// Data-parallel inner loops used by the wavelet transforms and the
// diagnostics quadratures. Scalar reference implementations always exist;
// an AVX2 variant is selected at runtime when the CPU supports it.
// Set VMR_KERNELS=scalar (or avx2) to force a variant.

namespace vmr::kernels {

struct Ops {
  // out[k] = sum_i w[i] * in[k+i], k = 0..m-1
  void (*stencil_dot)(const double* in, std::size_t m, const double* w,
                      int taps, double* out);
  // out[k] = fine[k] - sum_i w[i] * in[k+i]
  void (*stencil_residual)(const double* fine, const double* in, std::size_t m,
                           const double* w, int taps, double* out);
  double (*sum)(const double* x, std::size_t n);
  double (*sum_abs)(const double* x, std::size_t n);
  double (*sum_sq)(const double* x, std::size_t n);
  double (*max_abs)(const double* x, std::size_t n);
  const char* name;
};

const Ops& scalar_ops();
const Ops* avx2_ops();  // nullptr when the CPU lacks AVX2
const Ops& active_ops();

}  // namespace vmr::kernels
