#pragma once

#include <optional>
#include <string>

#include "vmr/scenarios.hpp"
#include "vmr/semilag.hpp"

namespace vmr {

// A full run description; fully deterministic (no seeds). eps absent means a
// dense non-adaptive run.
struct RunConfig {
  ScenarioKind scenario = ScenarioKind::TwoStream;
  int j0 = 0, j1 = 0;
  int order_n = 1;
  double dt = 0.0;
  long steps = 0;
  std::optional<double> eps;
  Splitting splitting = Splitting::Lie;
  std::string out_dir = "out";
  long diag_every = 1;
  long snapshot_every = 0;
  double alpha = 0.25;
  double k0 = 0.5;
  double vmax = 7.0;
  int eval_depth = 6;

  ScenarioConfig make_scenario() const;
  StepperOptions make_options() const;
};

// Parses the `key = value` format (# comments, blank lines allowed).
// Required keys: scenario, j0, j1, dt, steps. Unknown keys are rejected;
// errors name the offending key and line.
RunConfig parse_config(const std::string& text);

}  // namespace vmr
