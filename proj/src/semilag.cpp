#include "vmr/semilag.hpp"

#include <cmath>

#include "vmr/eval.hpp"
#include "vmr/kernels.hpp"

namespace vmr {
namespace {

constexpr double kGridTol = 1e-9;

Grid2D sample_initial(const ScenarioConfig& sc, int j1) {
  const long n = 1L << j1;
  Grid2D f(n, n);
  for (long i1 = 0; i1 < n; ++i1) {
    const double x = sc.ax.coord(j1, i1);
    for (long i2 = 0; i2 < n; ++i2)
      f.at(i1, i2) = sc.initial(x, sc.av.coord(j1, i2));
  }
  return f;
}

// 1D semi-Lagrangian update of one line: out[i] = f(t_i - shift) where f is
// the V_{j1} function interpolating `line`.
void advect_line(std::span<const double> line, Boundary bc, double shift,
                 const PredictionStencil& s, int depth, double* out) {
  const long n = long(line.size());
  auto g = [&](long i) -> double {
    if (i >= 0 && i < n) return line[std::size_t(i)];
    if (bc == Boundary::Periodic) return line[std::size_t(wrap_index(i, n))];
    return 0.0;
  };
  const double rs = std::nearbyint(shift);
  if (std::fabs(shift - rs) < kGridTol) {
    const long sh = long(rs);
    if (sh == 0) {
      std::copy(line.begin(), line.end(), out);
      return;
    }
    for (long i = 0; i < n; ++i) out[i] = g(i - sh);
    return;
  }
  for (long i = 0; i < n; ++i) {
    const double t = double(i) - shift;
    if (bc == Boundary::ZeroExtension && (t < 0.0 || t >= double(n))) {
      out[i] = 0.0;
      continue;
    }
    out[i] = refine_eval_1d(g, s, depth, t);
  }
}

std::vector<double> accel_profile(const ScenarioConfig& sc, int j1, double qm,
                                  const FieldProfile* field) {
  const long n = 1L << j1;
  std::vector<double> a(std::size_t(n), 0.0);
  if (sc.self_consistent) {
    for (long i = 0; i < n; ++i) a[std::size_t(i)] = qm * field->e[std::size_t(i)];
  } else {
    for (long i = 0; i < n; ++i)
      a[std::size_t(i)] = applied_field_cylinder(sc.ax.coord(j1, i), 0.0).second;
  }
  return a;
}

}  // namespace

SimState init_dense_state(const ScenarioConfig& sc, int j0, int j1) {
  SimState st;
  st.j0 = j0;
  st.j1 = j1;
  st.dense = sample_initial(sc, j1);
  return st;
}

SimState init_adaptive_state(const ScenarioConfig& sc, int j0, int j1,
                             double eps, const PredictionStencil& s) {
  SimState st;
  st.j0 = j0;
  st.j1 = j1;
  const Grid2D f0 = sample_initial(sc, j1);
  const Coeffs2D c = forward_transform_2d(f0, j0, j1, s, sc.ax.bc, sc.av.bc);
  st.rep = threshold(c, eps, s, sc.ax, sc.av);
  return st;
}

Grid2D advect_x_dense(const Grid2D& f, const Axis& ax, const Axis& av, int j1,
                      double dt, const PredictionStencil& s, int depth) {
  Grid2D out(f.nx, f.nv);
  const double hx = ax.h(j1);
  std::vector<double> line(std::size_t(f.nx)), res(std::size_t(f.nx));
  for (long i2 = 0; i2 < f.nv; ++i2) {
    const double shift = av.coord(j1, i2) * dt / hx;
    for (long i1 = 0; i1 < f.nx; ++i1) line[std::size_t(i1)] = f.at(i1, i2);
    advect_line(line, ax.bc, shift, s, depth, res.data());
    for (long i1 = 0; i1 < f.nx; ++i1) out.at(i1, i2) = res[std::size_t(i1)];
  }
  return out;
}

Grid2D advect_v_dense(const Grid2D& f, const Axis& ax, const Axis& av, int j1,
                      std::span<const double> accel, double dt,
                      const PredictionStencil& s, int depth) {
  (void)ax;
  Grid2D out(f.nx, f.nv);
  const double hv = av.h(j1);
  for (long i1 = 0; i1 < f.nx; ++i1) {
    const double shift = accel[std::size_t(i1)] * dt / hv;
    advect_line(std::span(f.row(i1), std::size_t(f.nv)), av.bc, shift, s,
                depth, out.row(i1));
  }
  return out;
}

void step_nonadaptive(SimState& state, double dt, const ScenarioConfig& sc,
                      const StepperOptions& opt, const PoissonSolver* poisson) {
  if (!state.dense) throw Error("step_nonadaptive: state is not dense");
  const PredictionStencil s = lagrange_midpoint_weights(opt.order_n);
  const int j1 = state.j1;
  const bool strang = opt.splitting == Splitting::Strang;
  const double dtx = strang ? 0.5 * dt : dt;

  Grid2D f1 = advect_x_dense(*state.dense, sc.ax, sc.av, j1, dtx, s,
                             opt.eval_depth);
  if (sc.self_consistent) {
    state.field =
        poisson->solve(charge_density(f1, sc.av, j1));
  }
  const auto accel = accel_profile(sc, j1, opt.qm,
                                   sc.self_consistent ? &state.field : nullptr);
  Grid2D f2 =
      advect_v_dense(f1, sc.ax, sc.av, j1, accel, dt, s, opt.eval_depth);
  if (strang)
    f2 = advect_x_dense(f2, sc.ax, sc.av, j1, 0.5 * dt, s, opt.eval_depth);
  state.dense = std::move(f2);
  state.t += dt;
  ++state.step;
}

namespace {

// Wavelet transform at the induced nodes from point values, then threshold
// compression; the coarse grid is always kept.
SparseRep assemble_rep(
    const std::unordered_map<std::uint64_t, double>& vals,
    const ComputeMesh& cm, double eps, const SparseRep& proto,
    const PredictionStencil& s) {
  SparseRep rep;
  rep.j0 = proto.j0;
  rep.j1 = proto.j1;
  rep.order_n = proto.order_n;
  rep.ax = proto.ax;
  rep.av = proto.av;
  rep.coarse = Grid2D(proto.coarse.nx, proto.coarse.nv);
  const int s0 = rep.j1 - rep.j0;
  for (long k1 = 0; k1 < rep.coarse.nx; ++k1) {
    for (long k2 = 0; k2 < rep.coarse.nv; ++k2) {
      const auto it = vals.find(point_key(k1 << s0, k2 << s0));
      rep.coarse.at(k1, k2) = it == vals.end() ? 0.0 : it->second;
    }
  }
  const int N = s.order_n;
  const int taps = s.taps();
  for (const auto key : cm.nodes) {
    const Node node = Node::from_key(key);
    const int jd = node.level;
    const long nxd = proto.coarse.nx << (jd - rep.j0);
    const long nvd = proto.coarse.nv << (jd - rep.j0);
    const int shift = rep.j1 - jd;
    auto depval = [&](long d1, long d2) -> double {
      if (d1 < 0 || d1 >= nxd) {
        if (rep.ax.bc != Boundary::Periodic) return 0.0;
        d1 = wrap_index(d1, nxd);
      }
      if (d2 < 0 || d2 >= nvd) {
        if (rep.av.bc != Boundary::Periodic) return 0.0;
        d2 = wrap_index(d2, nvd);
      }
      const auto it = vals.find(point_key(d1 << shift, d2 << shift));
      return it == vals.end() ? 0.0 : it->second;
    };
    double pred = 0.0;
    switch (node.kind) {
      case NodeKind::Row:
        for (int i = 0; i < taps; ++i)
          pred += s.weights[std::size_t(i)] * depval(node.k1 - N + i, node.k2);
        break;
      case NodeKind::Col:
        for (int l = 0; l < taps; ++l)
          pred += s.weights[std::size_t(l)] * depval(node.k1, node.k2 - N + l);
        break;
      case NodeKind::Mid:
        for (int i = 0; i < taps; ++i) {
          double inner = 0.0;
          for (int l = 0; l < taps; ++l)
            inner += s.weights[std::size_t(l)] *
                     depval(node.k1 - N + i, node.k2 - N + l);
          pred += s.weights[std::size_t(i)] * inner;
        }
        break;
      case NodeKind::Coarse:
        continue;
    }
    const int pos_shift = rep.j1 - node.glevel();
    const auto vit =
        vals.find(point_key(node.p1() << pos_shift, node.p2() << pos_shift));
    const double val = vit == vals.end() ? 0.0 : vit->second;
    const double d = val - pred;
    if (d != 0.0 && std::fabs(d) >= eps) {
      rep.details.emplace(key, d);
      rep.nodal.emplace(key, val);
    }
  }
  if (rep.details.empty()) {
    const double cmax =
        kernels::active_ops().max_abs(rep.coarse.d.data(), rep.coarse.d.size());
    if (cmax == 0.0)
      throw NumericalError("degenerate state: representation is empty");
  }
  return rep;
}

}  // namespace

void step_adaptive(SimState& state, double dt, double eps,
                   const ScenarioConfig& sc, const StepperOptions& opt,
                   const PoissonSolver* poisson) {
  if (!state.rep) throw Error("step_adaptive: state is not adaptive");
  const PredictionStencil s = lagrange_midpoint_weights(opt.order_n);
  const int j1 = state.j1;
  const double hx = sc.ax.h(j1);
  SparseRep& rep = *state.rep;

  // Prediction in x, mesh construction
  const ActiveSet g0 = opt.full_prediction
                           ? full_active_set(state.j0, j1, sc.ax, sc.av)
                           : active_set_of(rep);
  const ActiveSet gx =
      opt.full_prediction
          ? g0
          : predict_active_set(
                g0, [dt](double, double v) { return v * dt; }, Phase::X,
                opt.order_n);
  const ComputeMesh cmx = closure(gx, opt.order_n);

  // Advection in x at the points of the compute mesh
  std::unordered_map<std::uint64_t, double> vals;
  vals.reserve(cmx.points.size());
  {
    const SparseEvaluator ev(rep, s, opt.eval_depth);
    for (const auto pk : cmx.points) {
      const auto [i1, i2] = point_from_key(pk);
      const double v = sc.av.coord(j1, i2);
      vals.emplace(pk, ev(sc.ax.coord(j1, i1) - v * dt, v));
    }
  }
  // Wavelet transform + compression
  SparseRep rep1 = assemble_rep(vals, cmx, eps, rep, s);

  // Electric field
  if (sc.self_consistent) {
    const Grid2D dense = reconstruct_dense(rep1, s);
    state.field = poisson->solve(charge_density(dense, sc.av, j1));
  }
  const auto accel = accel_profile(sc, j1, opt.qm,
                                   sc.self_consistent ? &state.field : nullptr);

  // Prediction in v, mesh construction
  const ActiveSet g1 = opt.full_prediction
                           ? full_active_set(state.j0, j1, sc.ax, sc.av)
                           : active_set_of(rep1);
  auto disp_v = [&](double x, double) {
    const long i1 = wrap_index(long(std::nearbyint((x - sc.ax.a) / hx)),
                               1L << j1);
    return accel[std::size_t(i1)] * dt;
  };
  const ActiveSet gv =
      opt.full_prediction ? g1
                          : predict_active_set(g1, disp_v, Phase::V,
                                               opt.order_n);
  const ComputeMesh cmv = closure(gv, opt.order_n);

  // Advection in v
  std::unordered_map<std::uint64_t, double> vals2;
  vals2.reserve(cmv.points.size());
  {
    const SparseEvaluator ev(rep1, s, opt.eval_depth);
    for (const auto pk : cmv.points) {
      const auto [i1, i2] = point_from_key(pk);
      const double x = sc.ax.coord(j1, i1);
      vals2.emplace(pk, ev(x, sc.av.coord(j1, i2) -
                                  accel[std::size_t(i1)] * dt));
    }
  }
  state.rep = assemble_rep(vals2, cmv, eps, rep1, s);
  state.t += dt;
  ++state.step;
}

DiagnosticsRecord compute_diagnostics(const SimState& state,
                                      const ScenarioConfig& sc,
                                      const PredictionStencil& s) {
  DiagnosticsRecord rec;
  rec.t = state.t;
  const Grid2D dense =
      state.dense ? *state.dense : reconstruct_dense(*state.rep, s);
  const double hx = sc.ax.h(state.j1), hv = sc.av.h(state.j1);
  const auto& ops = kernels::active_ops();
  double mass = 0.0, l1 = 0.0, l2 = 0.0, fmax = 0.0;
  for (long i1 = 0; i1 < dense.nx; ++i1) {
    const double wx =
        (sc.ax.bc == Boundary::ZeroExtension && i1 == 0) ? 0.5 : 1.0;
    const double* row = dense.row(i1);
    const std::size_t n = std::size_t(dense.nv);
    double rm = ops.sum(row, n);
    double r1 = ops.sum_abs(row, n);
    double r2 = ops.sum_sq(row, n);
    if (sc.av.bc == Boundary::ZeroExtension && n > 0) {
      rm -= 0.5 * row[0];
      r1 -= 0.5 * std::fabs(row[0]);
      r2 -= 0.5 * row[0] * row[0];
    }
    mass += wx * rm;
    l1 += wx * r1;
    l2 += wx * r2;
    fmax = std::max(fmax, ops.max_abs(row, n));
  }
  rec.mass = mass * hx * hv;
  rec.l1 = l1 * hx * hv;
  rec.l2 = std::sqrt(l2 * hx * hv);
  rec.fmax = fmax;
  rec.e_energy = sc.self_consistent ? electric_energy(state.field) : 0.0;
  const std::size_t full =
      std::size_t(dense.nx) * std::size_t(dense.nv);
  if (state.rep) {
    rec.active = count_active(active_set_of(*state.rep)).total;
    rec.ratio = double(rec.active) / double(full);
  } else {
    rec.active = full;
    rec.ratio = 1.0;
  }
  return rec;
}

SimState run(SimState state, const ScenarioConfig& sc,
             const StepperOptions& opt, double dt, long n_steps,
             std::optional<double> eps, long diag_every, long snapshot_every,
             const RunSinks& sinks) {
  if (n_steps < 0) throw Error("run: n_steps must be >= 0");
  const PredictionStencil s = lagrange_midpoint_weights(opt.order_n);
  std::optional<PoissonSolver> poisson;
  if (sc.self_consistent) {
    poisson.emplace(1L << state.j1, sc.ax.b - sc.ax.a);
    const Grid2D dense =
        state.dense ? *state.dense : reconstruct_dense(*state.rep, s);
    state.field = poisson->solve(charge_density(dense, sc.av, state.j1));
  }
  auto emit = [&](bool force_snapshot) {
    if (sinks.diag) sinks.diag(compute_diagnostics(state, sc, s));
    if (sinks.snapshot && force_snapshot) sinks.snapshot(state);
  };
  emit(true);
  for (long k = 1; k <= n_steps; ++k) {
    if (eps)
      step_adaptive(state, dt, *eps, sc, opt, poisson ? &*poisson : nullptr);
    else
      step_nonadaptive(state, dt, sc, opt, poisson ? &*poisson : nullptr);
    const bool last = k == n_steps;
    const bool diag_now = last || (diag_every > 0 && k % diag_every == 0);
    const bool snap_now =
        last || (snapshot_every > 0 && k % snapshot_every == 0);
    if (diag_now && sinks.diag) sinks.diag(compute_diagnostics(state, sc, s));
    if (snap_now && sinks.snapshot) sinks.snapshot(state);
  }
  return state;
}

}  // namespace vmr
