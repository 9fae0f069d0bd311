#pragma once

#include "vmr/common.hpp"

namespace vmr {

enum class ScenarioKind { Cylinder, TwoStream };

struct ScenarioConfig {
  ScenarioKind kind = ScenarioKind::TwoStream;
  Axis ax, av;
  double alpha = 0.25;
  double k0 = 0.5;
  bool self_consistent = true;

  static ScenarioConfig cylinder();
  static ScenarioConfig two_stream(double alpha = 0.25, double k0 = 0.5,
                                   double vmax = 7.0);

  double initial(double x, double v) const;
};

// Slotted-cylinder indicator: 1 inside the disk of radius 1/2 except in the
// slot x >= 0, |v| <= 1/8.
double init_cylinder(double x, double v);

double init_two_stream(double x, double v, double alpha, double k0);

// Exact transport solution for the advection field (v, -x): rigid rotation.
double exact_cylinder_solution(double t, double x, double v);

}  // namespace vmr
