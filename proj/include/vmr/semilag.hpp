#pragma once

#include <functional>
#include <optional>
#include <span>

#include "vmr/adaptive.hpp"
#include "vmr/fields.hpp"
#include "vmr/mra2d.hpp"
#include "vmr/scenarios.hpp"

namespace vmr {

enum class Splitting { Lie, Strang };

struct StepperOptions {
  int order_n = 1;
  int eval_depth = 6;
  Splitting splitting = Splitting::Lie;
  bool full_prediction = false;  // test hook: treat every node as predicted
  double qm = -1.0;              // charge-to-mass ratio of the species
};

struct SimState {
  double t = 0.0;
  long step = 0;
  int j0 = 0, j1 = 0;
  std::optional<Grid2D> dense;    // non-adaptive representation
  std::optional<SparseRep> rep;   // adaptive representation
  FieldProfile field;             // field of the last substep (self-consistent runs)
};

SimState init_dense_state(const ScenarioConfig& sc, int j0, int j1);
SimState init_adaptive_state(const ScenarioConfig& sc, int j0, int j1,
                             double eps, const PredictionStencil& s);

// Split x-advection: new f(x_i, v_j) = old f(x_i - v_j dt, v_j), exact
// characteristics within the substep.
Grid2D advect_x_dense(const Grid2D& f, const Axis& ax, const Axis& av, int j1,
                      double dt, const PredictionStencil& s, int depth);
// Split v-advection with per-column acceleration a(x_i): new f(x_i, v_j) =
// old f(x_i, v_j - a(x_i) dt).
Grid2D advect_v_dense(const Grid2D& f, const Axis& ax, const Axis& av, int j1,
                      std::span<const double> accel, double dt,
                      const PredictionStencil& s, int depth);

void step_nonadaptive(SimState& state, double dt, const ScenarioConfig& sc,
                      const StepperOptions& opt, const PoissonSolver* poisson);
void step_adaptive(SimState& state, double dt, double eps,
                   const ScenarioConfig& sc, const StepperOptions& opt,
                   const PoissonSolver* poisson);

struct DiagnosticsRecord {
  double t = 0.0;
  double mass = 0.0, l1 = 0.0, l2 = 0.0, fmax = 0.0, e_energy = 0.0;
  std::size_t active = 0;
  double ratio = 1.0;
};

DiagnosticsRecord compute_diagnostics(const SimState& state,
                                      const ScenarioConfig& sc,
                                      const PredictionStencil& s);

struct RunSinks {
  std::function<void(const DiagnosticsRecord&)> diag;
  std::function<void(const SimState&)> snapshot;
};

// Driver loop: applies the configured stepper n_steps times; diagnostics at
// step 0, every diag_every steps and at the end; snapshots likewise when
// snapshot_every > 0 (always initial and final).
SimState run(SimState state, const ScenarioConfig& sc,
             const StepperOptions& opt, double dt, long n_steps,
             std::optional<double> eps, long diag_every, long snapshot_every,
             const RunSinks& sinks);

}  // namespace vmr
