#include "vmr/mra1d.hpp"

#include <algorithm>

#include "vmr/kernels.hpp"

namespace vmr {
namespace {

inline double bval(const double* c, long n, long i, Boundary bc) {
  if (i >= 0 && i < n) return c[i];
  if (bc == Boundary::Periodic) return c[wrap_index(i, n)];
  return 0.0;
}

inline double predict_at(const double* c, long n, long k,
                         const PredictionStencil& s, Boundary bc) {
  const int taps = s.taps();
  double acc = 0.0;
  for (int i = 0; i < taps; ++i)
    acc += s.weights[size_t(i)] * bval(c, n, k - s.order_n + i, bc);
  return acc;
}

}  // namespace

void analyze_level(std::span<const double> fine, const PredictionStencil& s,
                   Boundary bc, double* coarse, double* detail) {
  const long n = long(fine.size()) / 2;
  for (long k = 0; k < n; ++k) {
    coarse[k] = fine[size_t(2 * k)];
    detail[k] = fine[size_t(2 * k + 1)];
  }
  const int N = s.order_n;
  const long lo = N;
  const long hi = n - N - 2;  // inclusive interior range for the kernel
  if (hi >= lo) {
    kernels::active_ops().stencil_residual(detail + lo, coarse + lo - N,
                                           std::size_t(hi - lo + 1),
                                           s.weights.data(), s.taps(),
                                           detail + lo);
  }
  for (long k = 0; k < std::min(lo, n); ++k)
    detail[k] -= predict_at(coarse, n, k, s, bc);
  for (long k = std::max(hi + 1, lo); k < n; ++k)
    detail[k] -= predict_at(coarse, n, k, s, bc);
}

void predict_odd(std::span<const double> coarse, const PredictionStencil& s,
                 Boundary bc, double* odd) {
  const long n = long(coarse.size());
  const int N = s.order_n;
  const long lo = N;
  const long hi = n - N - 2;
  if (hi >= lo) {
    kernels::active_ops().stencil_dot(coarse.data() + lo - N,
                                      std::size_t(hi - lo + 1),
                                      s.weights.data(), s.taps(), odd + lo);
  }
  for (long k = 0; k < std::min(lo, n); ++k)
    odd[k] = predict_at(coarse.data(), n, k, s, bc);
  for (long k = std::max(hi + 1, lo); k < n; ++k)
    odd[k] = predict_at(coarse.data(), n, k, s, bc);
}

void synth_level(std::span<const double> coarse, std::span<const double> detail,
                 const PredictionStencil& s, Boundary bc, double* fine) {
  const long n = long(coarse.size());
  std::vector<double> odd(size_t(n), 0.0);
  predict_odd(coarse, s, bc, odd.data());
  for (long k = 0; k < n; ++k) {
    fine[2 * k] = coarse[size_t(k)];
    fine[2 * k + 1] = odd[size_t(k)] + detail[size_t(k)];
  }
}

std::vector<double> predict(std::span<const double> coarse,
                            const PredictionStencil& s, Boundary bc) {
  if (coarse.empty()) throw Error("predict: empty input");
  std::vector<double> zero(coarse.size(), 0.0);
  std::vector<double> out(2 * coarse.size());
  synth_level(coarse, zero, s, bc, out.data());
  return out;
}

std::vector<double> project(std::span<const double> fine) {
  if (fine.size() % 2 != 0)
    throw Error("project: input length must be even (malformed dyadic data)");
  std::vector<double> out(fine.size() / 2);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = fine[2 * k];
  return out;
}

Coeffs1D forward_transform_1d(std::span<const double> values, int j0, int j1,
                              const PredictionStencil& s, Boundary bc) {
  if (j0 >= j1) throw Error("forward_transform_1d: requires j0 < j1");
  const int levels = j1 - j0;
  if (values.size() % (std::size_t(1) << levels) != 0)
    throw Error("forward_transform_1d: length not divisible by 2^(j1-j0)");
  Coeffs1D c;
  c.j0 = j0;
  c.j1 = j1;
  c.bc = bc;
  c.details.resize(size_t(levels));
  std::vector<double> cur(values.begin(), values.end());
  for (int l = levels - 1; l >= 0; --l) {
    const std::size_t n = cur.size() / 2;
    std::vector<double> coarse(n);
    c.details[size_t(l)].resize(n);
    analyze_level(cur, s, bc, coarse.data(), c.details[size_t(l)].data());
    cur = std::move(coarse);
  }
  c.coarse = std::move(cur);
  return c;
}

std::vector<double> inverse_transform_1d(const Coeffs1D& c,
                                         const PredictionStencil& s) {
  std::vector<double> cur = c.coarse;
  for (std::size_t l = 0; l < c.details.size(); ++l) {
    if (c.details[l].size() != cur.size())
      throw Error("inverse_transform_1d: malformed detail level");
    std::vector<double> fine(2 * cur.size());
    synth_level(cur, c.details[l], s, c.bc, fine.data());
    cur = std::move(fine);
  }
  return cur;
}

std::vector<double> scaling_function_eval(int order_n, int depth) {
  if (depth < 1) throw Error("scaling_function_eval: depth must be >= 1");
  const PredictionStencil s = lagrange_midpoint_weights(order_n);
  // Work on a padded integer range [-(2N+2), 2N+1] so every cascade step
  // stays inside the array; the support is [-2N-1, 2N+1].
  const long pad_lo = 2 * order_n + 2;
  std::vector<double> cur(size_t(4 * order_n + 4), 0.0);
  cur[size_t(pad_lo)] = 1.0;  // delta at the origin
  for (int d = 0; d < depth; ++d)
    cur = predict(cur, s, Boundary::ZeroExtension);
  const long step_inv = 1L << depth;
  const long first = (pad_lo - (2 * order_n + 1)) * step_inv;
  const long count = (4 * order_n + 2) * step_inv + 1;
  return std::vector<double>(cur.begin() + first, cur.begin() + first + count);
}

}  // namespace vmr
