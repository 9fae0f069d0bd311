#include "vmr/fields.hpp"

#include <fftw3.h>

#include <cmath>
#include <numbers>

#include "vmr/kernels.hpp"

namespace vmr {

std::vector<double> charge_density(const Grid2D& f, const Axis& av, int j1,
                                   double q) {
  const double hv = av.h(j1);
  std::vector<double> rho(std::size_t(f.nx));
  const auto& ops = kernels::active_ops();
  for (long i1 = 0; i1 < f.nx; ++i1) {
    const double* col = f.row(i1);
    double s = ops.sum(col, std::size_t(f.nv));
    // trapezoid endpoint weights; the missing right endpoint reads 0
    if (av.bc == Boundary::ZeroExtension && f.nv > 0) s -= 0.5 * col[0];
    rho[std::size_t(i1)] = q * hv * s;
  }
  const double mean =
      ops.sum(rho.data(), rho.size()) / double(rho.size());
  for (double& r : rho) r -= mean;
  return rho;
}

PoissonSolver::PoissonSolver(long n, double period) : n_(n), period_(period) {
  real_buf_ = fftw_alloc_real(std::size_t(n));
  cplx_buf_ = fftw_alloc_complex(std::size_t(n / 2 + 1));
  plan_fwd_ = fftw_plan_dft_r2c_1d(int(n), real_buf_,
                                   static_cast<fftw_complex*>(cplx_buf_),
                                   FFTW_ESTIMATE);
  plan_bwd_ = fftw_plan_dft_c2r_1d(int(n), static_cast<fftw_complex*>(cplx_buf_),
                                   real_buf_, FFTW_ESTIMATE);
}

PoissonSolver::~PoissonSolver() {
  fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
  fftw_destroy_plan(static_cast<fftw_plan>(plan_bwd_));
  fftw_free(real_buf_);
  fftw_free(cplx_buf_);
}

FieldProfile PoissonSolver::solve(const std::vector<double>& rho_net) const {
  if (long(rho_net.size()) != n_)
    throw Error("PoissonSolver: density length mismatch");
  const auto& ops = kernels::active_ops();
  const double mean = ops.sum(rho_net.data(), rho_net.size()) / double(n_);
  const double scale = std::max(1.0, ops.max_abs(rho_net.data(), rho_net.size()));
  if (std::fabs(mean) > 1e-10 * scale)
    throw NumericalError("Poisson solve: source has nonzero mean");

  auto* spec = static_cast<fftw_complex*>(cplx_buf_);
  for (long i = 0; i < n_; ++i) real_buf_[i] = rho_net[std::size_t(i)];
  fftw_execute(static_cast<fftw_plan>(plan_fwd_));

  const long nk = n_ / 2 + 1;
  std::vector<double> rho_hat(std::size_t(2 * nk));
  for (long m = 0; m < nk; ++m) {
    rho_hat[std::size_t(2 * m)] = spec[m][0];
    rho_hat[std::size_t(2 * m + 1)] = spec[m][1];
  }

  FieldProfile out;
  out.dx = period_ / double(n_);
  out.rho = rho_net;

  // phi_hat = rho_hat / k^2, zero-mean potential
  spec[0][0] = spec[0][1] = 0.0;
  for (long m = 1; m < nk; ++m) {
    const double k = 2.0 * std::numbers::pi * double(m) / period_;
    spec[m][0] = rho_hat[std::size_t(2 * m)] / (k * k);
    spec[m][1] = rho_hat[std::size_t(2 * m + 1)] / (k * k);
  }
  fftw_execute(static_cast<fftw_plan>(plan_bwd_));
  out.phi.resize(std::size_t(n_));
  for (long i = 0; i < n_; ++i) out.phi[std::size_t(i)] = real_buf_[i] / double(n_);

  // E_hat = -i k phi_hat = -i rho_hat / k
  spec[0][0] = spec[0][1] = 0.0;
  for (long m = 1; m < nk; ++m) {
    const double k = 2.0 * std::numbers::pi * double(m) / period_;
    const double re = rho_hat[std::size_t(2 * m)] / k;
    const double im = rho_hat[std::size_t(2 * m + 1)] / k;
    // -i * (re + i im) = im - i re
    spec[m][0] = im;
    spec[m][1] = -re;
  }
  if (n_ % 2 == 0) {
    // Nyquist mode of a real derivative must stay real; drop its phase
    spec[nk - 1][1] = 0.0;
  }
  fftw_execute(static_cast<fftw_plan>(plan_bwd_));
  out.e.resize(std::size_t(n_));
  for (long i = 0; i < n_; ++i) out.e[std::size_t(i)] = real_buf_[i] / double(n_);
  return out;
}

double electric_energy(const FieldProfile& field) {
  return 0.5 * field.dx *
         kernels::active_ops().sum_sq(field.e.data(), field.e.size());
}

std::pair<double, double> applied_field_cylinder(double x, double v) {
  return {v, -x};
}

}  // namespace vmr
