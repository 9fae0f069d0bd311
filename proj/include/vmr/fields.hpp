#pragma once

#include <utility>
#include <vector>

#include "vmr/common.hpp"
#include "vmr/mra2d.hpp"

namespace vmr {

// Electric field and net charge density on the finest uniform x-grid.
// Normalized units: q = -1, m = 1, eps0 = 1 (electron species with a
// neutralizing ion background), time in inverse plasma frequency.
struct FieldProfile {
  double dx = 0.0;
  std::vector<double> rho;  // net charge density, zero mean
  std::vector<double> e;
  std::vector<double> phi;
};

// Trapezoidal quadrature of f over the v-grid per x-column, times q, with
// the spatial mean subtracted (neutralizing background).
std::vector<double> charge_density(const Grid2D& f, const Axis& av, int j1,
                                   double q = -1.0);

// Spectral solve of -phi'' = rho on the periodic x-grid, E = -phi'.
class PoissonSolver {
 public:
  PoissonSolver(long n, double period);
  ~PoissonSolver();
  PoissonSolver(const PoissonSolver&) = delete;
  PoissonSolver& operator=(const PoissonSolver&) = delete;

  FieldProfile solve(const std::vector<double>& rho_net) const;

  long size() const { return n_; }

 private:
  long n_;
  double period_;
  void* plan_fwd_;
  void* plan_bwd_;
  double* real_buf_;
  void* cplx_buf_;
};

double electric_energy(const FieldProfile& field);

// The rotating-cylinder advection field (dx/dt, dv/dt) = (v, -x).
std::pair<double, double> applied_field_cylinder(double x, double v);

}  // namespace vmr
