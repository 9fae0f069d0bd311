#include "vmr/kernels.hpp"

#include <cmath>

namespace vmr::kernels {
namespace {

void stencil_dot_scalar(const double* in, std::size_t m, const double* w,
                        int taps, double* out) {
  for (std::size_t k = 0; k < m; ++k) {
    double acc = 0.0;
    for (int i = 0; i < taps; ++i) acc += w[i] * in[k + std::size_t(i)];
    out[k] = acc;
  }
}

void stencil_residual_scalar(const double* fine, const double* in,
                             std::size_t m, const double* w, int taps,
                             double* out) {
  for (std::size_t k = 0; k < m; ++k) {
    double acc = 0.0;
    for (int i = 0; i < taps; ++i) acc += w[i] * in[k + std::size_t(i)];
    out[k] = fine[k] - acc;
  }
}

double sum_scalar(const double* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i];
  return s;
}

double sum_abs_scalar(const double* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += std::fabs(x[i]);
  return s;
}

double sum_sq_scalar(const double* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * x[i];
  return s;
}

double max_abs_scalar(const double* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s = std::max(s, std::fabs(x[i]));
  return s;
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops = {stencil_dot_scalar, stencil_residual_scalar,
                          sum_scalar,         sum_abs_scalar,
                          sum_sq_scalar,      max_abs_scalar,
                          "scalar"};
  return ops;
}

}  // namespace vmr::kernels
