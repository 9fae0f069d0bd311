#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "vmr/config.hpp"
#include "vmr/io.hpp"
#include "vmr/kernels.hpp"

namespace {

std::string numbered(const std::string& dir, const std::string& stem,
                     long step) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "_%06ld.csv", step);
  return dir + "/" + stem + buf;
}

int cmd_run(const std::string& cfg_path, const std::optional<std::string>& out,
            const std::optional<double>& eps_flag, bool dense_flag,
            const std::optional<long>& steps_flag) {
  vmr::RunConfig cfg = vmr::parse_config(vmr::read_text_file(cfg_path));
  if (out) cfg.out_dir = *out;
  if (eps_flag) cfg.eps = *eps_flag;
  if (dense_flag) cfg.eps.reset();
  if (steps_flag) cfg.steps = *steps_flag;

  std::error_code ec;
  std::filesystem::create_directories(cfg.out_dir, ec);
  if (ec) throw vmr::IoError("cannot create output directory: " + cfg.out_dir);

  const vmr::ScenarioConfig sc = cfg.make_scenario();
  const vmr::StepperOptions opt = cfg.make_options();
  const vmr::PredictionStencil s = vmr::lagrange_midpoint_weights(cfg.order_n);

  vmr::SimState state =
      cfg.eps ? vmr::init_adaptive_state(sc, cfg.j0, cfg.j1, *cfg.eps, s)
              : vmr::init_dense_state(sc, cfg.j0, cfg.j1);

  const std::string ts_path = cfg.out_dir + "/timeseries.csv";
  std::filesystem::remove(ts_path, ec);

  vmr::RunSinks sinks;
  sinks.diag = [&](const vmr::DiagnosticsRecord& rec) {
    vmr::append_timeseries(rec, ts_path);
  };
  sinks.snapshot = [&](const vmr::SimState& st) {
    const vmr::Grid2D f =
        st.dense ? *st.dense : vmr::reconstruct_dense(*st.rep, s);
    vmr::write_snapshot(f, sc.ax, sc.av, cfg.j1,
                        numbered(cfg.out_dir, "snapshot", st.step));
    if (st.rep)
      vmr::write_mesh(*st.rep, numbered(cfg.out_dir, "mesh", st.step));
  };

  vmr::run(std::move(state), sc, opt, cfg.dt, cfg.steps, cfg.eps,
           cfg.diag_every, cfg.snapshot_every, sinks);
  std::cout << "run complete: " << cfg.steps << " steps, output in "
            << cfg.out_dir << "\n";
  return 0;
}

int cmd_transform(const std::string& in_path, const std::string& out_path,
                  int j0, int j1, int order_n, double eps) {
  if (j0 < 1 || j0 >= j1 || j1 > 20)
    throw vmr::ConfigError("transform: requires 1 <= j0 < j1 <= 20");
  if (order_n < 0 || order_n > 3)
    throw vmr::ConfigError("transform: n must be in {0,1,2,3}");
  if (eps < 0.0) throw vmr::ConfigError("transform: eps must be >= 0");

  const vmr::SnapshotData snap = vmr::read_snapshot(in_path);
  const long n = 1L << j1;
  if (long(snap.f.size()) != n * n)
    throw vmr::ConfigError("transform: input has " +
                           std::to_string(snap.f.size()) + " rows, expected " +
                           std::to_string(n * n) + " for j1=" +
                           std::to_string(j1));
  // Recover the axis ranges from the corner coordinates (uniform grid on
  // [a, b) with step (b - a) / 2^j1).
  const double hx = snap.x[std::size_t(n)] - snap.x[0];
  const double hv = snap.v[1] - snap.v[0];
  vmr::Axis ax{snap.x.front(), snap.x.front() + hx * double(n),
               vmr::Boundary::Periodic};
  vmr::Axis av{snap.v.front(), snap.v.front() + hv * double(n),
               vmr::Boundary::Periodic};

  vmr::Grid2D f(n, n);
  for (long i = 0; i < n * n; ++i) f.d[std::size_t(i)] = snap.f[std::size_t(i)];

  const vmr::PredictionStencil s = vmr::lagrange_midpoint_weights(order_n);
  const vmr::Coeffs2D c =
      vmr::forward_transform_2d(f, j0, j1, s, ax.bc, av.bc);
  const vmr::SparseRep rep = vmr::threshold(c, eps, s, ax, av);
  const vmr::Grid2D back = vmr::reconstruct_dense(rep, s);
  vmr::write_snapshot(back, ax, av, j1, out_path);
  std::cout << "transform complete: " << rep.active_details()
            << " detail nodes retained of " << rep.full_grid_points()
            << " grid points\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adaptive multiresolution semi-Lagrangian phase-space solver"};
  app.require_subcommand(1);

  std::string cfg_path, out_dir_flag;
  std::optional<double> eps_flag;
  std::optional<long> steps_flag;
  bool dense_flag = false;
  auto* run = app.add_subcommand("run", "Run a simulation from a config file");
  run->add_option("config", cfg_path, "Path to the config file")->required();
  run->add_option("--out", out_dir_flag, "Output directory (overrides config)");
  run->add_option("--eps", eps_flag, "Compression threshold (overrides config)");
  run->add_flag("--dense", dense_flag, "Force the dense non-adaptive stepper");
  run->add_option("--steps", steps_flag, "Step count (overrides config)");

  std::string in_path, out_path;
  int t_j0 = 0, t_j1 = 0, t_n = 1;
  double t_eps = 0.0;
  auto* tr = app.add_subcommand(
      "transform", "Wavelet transform + compression of a snapshot CSV");
  tr->add_option("input", in_path, "Input snapshot CSV")->required();
  tr->add_option("output", out_path, "Output snapshot CSV")->required();
  tr->add_option("--j0", t_j0, "Coarse level")->required();
  tr->add_option("--j1", t_j1, "Fine level")->required();
  tr->add_option("--n", t_n, "Stencil order N");
  tr->add_option("--eps", t_eps, "Compression threshold");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed())
      return cmd_run(cfg_path, run->count("--out") ? std::optional(out_dir_flag)
                                                   : std::nullopt,
                     eps_flag, dense_flag, steps_flag);
    return cmd_transform(in_path, out_path, t_j0, t_j1, t_n, t_eps);
  } catch (const vmr::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const vmr::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  } catch (const vmr::IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
