#include <cmath>
#include <numbers>

#include "doctest.h"
#include "test_util.hpp"
#include "vmr/semilag.hpp"

using namespace vmr;

TEST_CASE("dense advection with dt = 0 is a bitwise identity") {
  const auto s = lagrange_midpoint_weights(1);
  const Axis ax{0.0, 1.0, Boundary::Periodic};
  const Axis av{-1.0, 1.0, Boundary::ZeroExtension};
  const auto f = vmrtest::random_grid(32, 32, 5);
  const auto gx = advect_x_dense(f, ax, av, 5, 0.0, s, 6);
  CHECK(gx.d == f.d);
  const std::vector<double> accel(32, 0.77);
  const auto gv = advect_v_dense(f, ax, av, 5, accel, 0.0, s, 6);
  CHECK(gv.d == f.d);
}

TEST_CASE("x-advection shifts a sine profile") {
  const auto s = lagrange_midpoint_weights(1);
  const int j1 = 7;
  const long n = 1L << j1;
  const Axis ax{0.0, 1.0, Boundary::Periodic};
  const Axis av{0.0, 2.0, Boundary::Periodic};
  Grid2D f(n, n);
  for (long i1 = 0; i1 < n; ++i1)
    for (long i2 = 0; i2 < n; ++i2)
      f.at(i1, i2) = std::sin(2.0 * std::numbers::pi * ax.coord(j1, i1));
  const double dt = 0.25;
  const auto g = advect_x_dense(f, ax, av, j1, dt, s, 6);
  double worst = 0.0;
  for (long i1 = 0; i1 < n; ++i1)
    for (long i2 = 0; i2 < n; ++i2) {
      const double x = ax.coord(j1, i1), v = av.coord(j1, i2);
      const double expect = std::sin(2.0 * std::numbers::pi * (x - v * dt));
      worst = std::max(worst, std::fabs(g.at(i1, i2) - expect));
    }
  CHECK(worst <= 1e-4);
}

TEST_CASE("v-advection shifts a Maxwellian") {
  const auto s = lagrange_midpoint_weights(1);
  const int j1 = 7;
  const long n = 1L << j1;
  const Axis ax{0.0, 1.0, Boundary::Periodic};
  const Axis av{-7.0, 7.0, Boundary::ZeroExtension};
  Grid2D f(n, n);
  for (long i1 = 0; i1 < n; ++i1)
    for (long i2 = 0; i2 < n; ++i2) {
      const double v = av.coord(j1, i2);
      f.at(i1, i2) = std::exp(-0.5 * v * v);
    }
  const double e0 = 0.6, dt = 0.5;  // uniform acceleration -e0 (qm = -1)
  const std::vector<double> accel(std::size_t(n), -e0);
  const auto g = advect_v_dense(f, ax, av, j1, accel, dt, s, 6);
  double worst = 0.0;
  for (long i1 = 0; i1 < n; ++i1)
    for (long i2 = 0; i2 < n; ++i2) {
      const double v = av.coord(j1, i2) + e0 * dt;
      worst = std::max(worst, std::fabs(g.at(i1, i2) - std::exp(-0.5 * v * v)));
    }
  CHECK(worst <= 1e-4);
}

TEST_CASE("unperturbed two-stream equilibrium is stationary") {
  const auto sc = ScenarioConfig::two_stream(0.0);
  const int j1 = 6;
  auto st = init_dense_state(sc, 3, j1);
  const Grid2D f0 = *st.dense;
  PoissonSolver poisson(1L << j1, sc.ax.b - sc.ax.a);
  StepperOptions opt;
  step_nonadaptive(st, 0.125, sc, opt, &poisson);
  CHECK(st.t == 0.125);
  CHECK(st.step == 1);
  CHECK(vmrtest::max_abs_diff(st.dense->d, f0.d) <= 1e-8);
}

TEST_CASE("one two-stream step keeps a sane field and density") {
  const auto sc = ScenarioConfig::two_stream();
  const int j1 = 6;
  auto st = init_dense_state(sc, 3, j1);
  PoissonSolver poisson(1L << j1, sc.ax.b - sc.ax.a);
  StepperOptions opt;
  step_nonadaptive(st, 0.125, sc, opt, &poisson);
  double esum = 0.0;
  for (double e : st.field.e) {
    CHECK(std::isfinite(e));
    esum += e;
  }
  CHECK(std::fabs(esum / double(st.field.e.size())) <= 1e-12);
  for (double v : st.dense->d) CHECK(std::isfinite(v));
}

TEST_CASE("cylinder mass drift over one small step is tiny") {
  const auto sc = ScenarioConfig::cylinder();
  const int j1 = 7;
  auto st = init_dense_state(sc, 4, j1);
  const auto s = lagrange_midpoint_weights(1);
  const auto d0 = compute_diagnostics(st, sc, s);
  StepperOptions opt;
  step_nonadaptive(st, 2.0 * std::numbers::pi / 1000.0, sc, opt, nullptr);
  const auto d1 = compute_diagnostics(st, sc, s);
  // the discontinuous disk limits interpolation accuracy; the measured
  // relative drift at j1 = 7 is ~1.6e-5 per step
  CHECK(std::fabs(d1.mass - d0.mass) <= 1e-4 * d0.mass);
}

TEST_CASE("strang splitting also advances the state") {
  const auto sc = ScenarioConfig::cylinder();
  auto st = init_dense_state(sc, 3, 6);
  StepperOptions opt;
  opt.splitting = Splitting::Strang;
  step_nonadaptive(st, 0.01, sc, opt, nullptr);
  CHECK(st.t == 0.01);
  for (double v : st.dense->d) CHECK(std::isfinite(v));
}

TEST_CASE("adaptive stepper with eps = 0 and full prediction matches dense") {
  const auto sc = ScenarioConfig::two_stream();
  const int j0 = 3, j1 = 5;
  const auto s = lagrange_midpoint_weights(1);
  auto dense = init_dense_state(sc, j0, j1);
  auto sparse = init_adaptive_state(sc, j0, j1, 0.0, s);
  PoissonSolver p1(1L << j1, sc.ax.b - sc.ax.a);
  PoissonSolver p2(1L << j1, sc.ax.b - sc.ax.a);
  StepperOptions opt;
  StepperOptions opt_full = opt;
  opt_full.full_prediction = true;
  for (int k = 0; k < 2; ++k) {
    step_nonadaptive(dense, 0.125, sc, opt, &p1);
    step_adaptive(sparse, 0.125, 0.0, sc, opt_full, &p2);
    const auto rec = reconstruct_dense(*sparse.rep, s);
    CHECK(vmrtest::max_abs_diff(rec.d, dense.dense->d) <= 1e-10);
  }
}

TEST_CASE("constant field stays coarse-only under the adaptive stepper") {
  // constant data on a fully periodic domain: both substeps preserve it
  // exactly (feet wrap; the neutralized density gives E = 0). A zero
  // extension edge would truncate the prediction stencil and create real
  // boundary details, so periodicity in v is part of the setup here.
  auto sc = ScenarioConfig::two_stream();
  sc.av.bc = Boundary::Periodic;
  const auto s = lagrange_midpoint_weights(1);
  const int j0 = 3, j1 = 5;
  SimState st;
  st.j0 = j0;
  st.j1 = j1;
  Grid2D f(1L << j1, 1L << j1);
  for (double& v : f.d) v = 1.0;
  const auto c = forward_transform_2d(f, j0, j1, s, sc.ax.bc, sc.av.bc);
  st.rep = threshold(c, 1e-6, s, sc.ax, sc.av);
  CHECK(st.rep->active_details() == 0);
  PoissonSolver poisson(1L << j1, sc.ax.b - sc.ax.a);
  StepperOptions opt;
  for (int k = 0; k < 3; ++k) step_adaptive(st, 0.125, 1e-6, sc, opt, &poisson);
  CHECK(st.rep->active_details() == 0);
  for (double v : st.rep->coarse.d) CHECK(v == doctest::Approx(1.0));
}

TEST_CASE("run driver emits diagnostics at the configured cadence") {
  const auto sc = ScenarioConfig::cylinder();
  auto st = init_dense_state(sc, 3, 5);
  StepperOptions opt;
  int diag_count = 0, snap_count = 0;
  RunSinks sinks;
  sinks.diag = [&](const DiagnosticsRecord& r) {
    CHECK(std::isfinite(r.mass));
    ++diag_count;
  };
  sinks.snapshot = [&](const SimState&) { ++snap_count; };
  SUBCASE("zero steps yields the initial records only") {
    run(st, sc, opt, 0.01, 0, std::nullopt, 1, 1, sinks);
    CHECK(diag_count == 1);
    CHECK(snap_count == 1);
  }
  SUBCASE("cadence plus final") {
    run(st, sc, opt, 0.01, 5, std::nullopt, 2, 0, sinks);
    // steps 0 (initial), 2, 4, 5 (final)
    CHECK(diag_count == 4);
    CHECK(snap_count == 2);  // initial and final
  }
}
