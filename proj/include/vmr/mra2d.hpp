#pragma once

#include <unordered_map>
#include <vector>

#include "vmr/common.hpp"
#include "vmr/mra1d.hpp"
#include "vmr/stencil.hpp"

namespace vmr {

// Dense phase-space grid, x-major: d[i1*nv + i2], i1 along x, i2 along v.
struct Grid2D {
  long nx = 0, nv = 0;
  std::vector<double> d;

  Grid2D() = default;
  Grid2D(long nx_, long nv_) : nx(nx_), nv(nv_), d(std::size_t(nx_ * nv_), 0.0) {}
  double& at(long i1, long i2) { return d[std::size_t(i1 * nv + i2)]; }
  double at(long i1, long i2) const { return d[std::size_t(i1 * nv + i2)]; }
  double* row(long i1) { return d.data() + i1 * nv; }
  const double* row(long i1) const { return d.data() + i1 * nv; }
};

struct DetailLevel {
  Grid2D row, col, mid;  // each nx(j) x nv(j)
};

// Multilevel 2D coefficients: coarse grid at j0 plus row/col/mid detail
// grids per level j0..j1-1.
struct Coeffs2D {
  int j0 = 0, j1 = 0;
  Boundary bcx = Boundary::Periodic, bcv = Boundary::Periodic;
  Grid2D coarse;
  std::vector<DetailLevel> levels;  // levels[l] holds level j0+l
};

Coeffs2D forward_transform_2d(const Grid2D& fine, int j0, int j1,
                              const PredictionStencil& s, Boundary bcx,
                              Boundary bcv);
Grid2D inverse_transform_2d(const Coeffs2D& c, const PredictionStencil& s);

// Compressed representation: the full coarse grid plus the detail nodes
// whose magnitude survived the threshold, with the nodal f values cached.
struct SparseRep {
  int j0 = 0, j1 = 0;
  int order_n = 1;
  Axis ax, av;
  Grid2D coarse;
  std::unordered_map<std::uint64_t, double> details;
  std::unordered_map<std::uint64_t, double> nodal;

  long nx_at(int glevel) const { return coarse.nx << (glevel - j0); }
  long nv_at(int glevel) const { return coarse.nv << (glevel - j0); }
  std::size_t active_details() const { return details.size(); }
  std::size_t full_grid_points() const {
    return std::size_t(nx_at(j1)) * std::size_t(nv_at(j1));
  }
};

SparseRep threshold(const Coeffs2D& c, double eps, const PredictionStencil& s,
                    const Axis& ax, const Axis& av);

// Inverse transform with the inactive details read as zero.
Grid2D reconstruct_dense(const SparseRep& rep, const PredictionStencil& s);

// Point evaluation of a SparseRep with memoized local synthesis; meant to be
// constructed once per advection batch. Immutable w.r.t. the rep.
class SparseEvaluator {
 public:
  SparseEvaluator(const SparseRep& rep, const PredictionStencil& s,
                  int refine_depth = 6);
  // Synthesized value at a finest-grid point (indices need not be in range;
  // boundary modes apply).
  double finest(long i1, long i2) const;
  // Value at a physical phase-space point.
  double operator()(double x, double v) const;

 private:
  double node_value(int gl, long p, long q) const;

  const SparseRep& rep_;
  const PredictionStencil& s_;
  int depth_;
  mutable std::unordered_map<std::uint64_t, double> memo_;
};

double evaluate(const SparseRep& rep, const PredictionStencil& s, double x,
                double v, int refine_depth = 6);

}  // namespace vmr
