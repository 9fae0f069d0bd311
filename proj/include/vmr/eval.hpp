#pragma once

#include <array>
#include <cmath>
#include <utility>
#include <vector>

#include "vmr/common.hpp"
#include "vmr/stencil.hpp"

// Point evaluation of a function living in the finest multiresolution space:
// local dyadic refinement (`depth` prediction levels past the finest grid)
// followed by degree-(2N+1) Lagrange interpolation on the refined window.

namespace vmr {

namespace detail {

inline long floor_div2(long a) { return a >= 0 ? a / 2 : -((-a + 1) / 2); }

constexpr int kMaxDepth = 32;
constexpr int kMaxWindow = 64;

struct RefineRanges {
  std::array<long, kMaxDepth + 1> lo, hi;
};

inline RefineRanges refine_ranges(const PredictionStencil& s, int depth,
                                  double t) {
  if (depth < 0 || depth > kMaxDepth) throw Error("refine depth out of range");
  RefineRanges r;
  const double td = std::ldexp(t, depth);
  r.lo[size_t(depth)] = long(std::floor(td)) - s.order_n;
  r.hi[size_t(depth)] = r.lo[size_t(depth)] + s.taps() - 1;
  for (int d = depth; d > 0; --d) {
    r.lo[size_t(d - 1)] = floor_div2(r.lo[size_t(d)] - 1) - s.order_n;
    r.hi[size_t(d - 1)] = floor_div2(r.hi[size_t(d)]) + s.order_n + 1;
  }
  return r;
}

}  // namespace detail

// Finest-grid index range read by refine_eval_1d for target t (grid units).
inline std::pair<long, long> refine_window(const PredictionStencil& s,
                                           int depth, double t) {
  auto r = detail::refine_ranges(s, depth, t);
  return {r.lo[0], r.hi[0]};
}

// Interpolate samples y[0..npts-1] on nodes 0..npts-1 at tau.
inline double lagrange_uniform(const double* y, int npts, double tau) {
  double acc = 0.0;
  for (int i = 0; i < npts; ++i) {
    double li = 1.0;
    for (int m = 0; m < npts; ++m) {
      if (m != i) li *= (tau - double(m)) / double(i - m);
    }
    acc += li * y[i];
  }
  return acc;
}

// g(i) supplies samples at integer positions (any long); t is the target in
// the same units.
template <class G>
double refine_eval_1d(G&& g, const PredictionStencil& s, int depth, double t) {
  const auto r = detail::refine_ranges(s, depth, t);
  const int N = s.order_n;
  const int taps = s.taps();
  std::array<double, detail::kMaxWindow> buf_a{}, buf_b{};
  double* cur = buf_a.data();
  double* nxt = buf_b.data();
  long w0 = r.hi[0] - r.lo[0] + 1;
  if (w0 > detail::kMaxWindow) throw Error("refine window too large");
  for (long i = 0; i < w0; ++i) cur[i] = g(r.lo[0] + i);
  for (int lev = 1; lev <= depth; ++lev) {
    const long plo = r.lo[size_t(lev)], phi = r.hi[size_t(lev)];
    const long clo = r.lo[size_t(lev - 1)];
    if (phi - plo + 1 > detail::kMaxWindow)
      throw Error("refine window too large");
    for (long p = plo; p <= phi; ++p) {
      double val;
      if ((p & 1) == 0) {
        val = cur[p / 2 - clo];
      } else {
        const long base = (p - 1) / 2 - N - clo;
        double acc = 0.0;
        for (int i = 0; i < taps; ++i)
          acc += s.weights[size_t(i)] * cur[base + i];
        val = acc;
      }
      nxt[p - plo] = val;
    }
    std::swap(cur, nxt);
  }
  const double tau = std::ldexp(t, depth) - double(r.lo[size_t(depth)]);
  return lagrange_uniform(cur, taps, tau);
}

// 2D evaluation at fractional finest-grid coordinates (gx, gv); g(i1,i2)
// reads in-range finest samples, out-of-range handling follows the boundary
// modes. Grid-aligned coordinates short-circuit to exact samples.
template <class G>
double eval_point(G&& g, long nx, long nv, Boundary bcx, Boundary bcv,
                  const PredictionStencil& s, int depth, double gx, double gv) {
  auto getv = [&](long i1, long i2) -> double {
    if (i1 < 0 || i1 >= nx) {
      if (bcx != Boundary::Periodic) return 0.0;
      i1 = wrap_index(i1, nx);
    }
    if (i2 < 0 || i2 >= nv) {
      if (bcv != Boundary::Periodic) return 0.0;
      i2 = wrap_index(i2, nv);
    }
    return g(i1, i2);
  };
  constexpr double tol = 1e-9;
  const double rx = std::nearbyint(gx), rv = std::nearbyint(gv);
  const bool onx = std::fabs(gx - rx) < tol;
  const bool onv = std::fabs(gv - rv) < tol;
  if (onx && onv) return getv(long(rx), long(rv));
  if (onv)
    return refine_eval_1d([&](long i) { return getv(i, long(rv)); }, s, depth,
                          gx);
  if (onx)
    return refine_eval_1d([&](long i) { return getv(long(rx), i); }, s, depth,
                          gv);
  const auto [vlo, vhi] = refine_window(s, depth, gv);
  std::array<double, detail::kMaxWindow> ex{};
  for (long r = vlo; r <= vhi; ++r) {
    ex[size_t(r - vlo)] =
        refine_eval_1d([&](long i) { return getv(i, r); }, s, depth, gx);
  }
  return refine_eval_1d([&](long i) { return ex[size_t(i - vlo)]; }, s, depth,
                        gv);
}

}  // namespace vmr
