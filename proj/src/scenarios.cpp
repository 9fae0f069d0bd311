#include "vmr/scenarios.hpp"

#include <cmath>
#include <numbers>

namespace vmr {

ScenarioConfig ScenarioConfig::cylinder() {
  ScenarioConfig c;
  c.kind = ScenarioKind::Cylinder;
  c.ax = {-0.5, 0.5, Boundary::ZeroExtension};
  c.av = {-0.5, 0.5, Boundary::ZeroExtension};
  c.self_consistent = false;
  return c;
}

ScenarioConfig ScenarioConfig::two_stream(double alpha, double k0,
                                          double vmax) {
  ScenarioConfig c;
  c.kind = ScenarioKind::TwoStream;
  c.alpha = alpha;
  c.k0 = k0;
  c.ax = {0.0, 2.0 * std::numbers::pi / k0, Boundary::Periodic};
  c.av = {-vmax, vmax, Boundary::ZeroExtension};
  c.self_consistent = true;
  return c;
}

double ScenarioConfig::initial(double x, double v) const {
  return kind == ScenarioKind::Cylinder ? init_cylinder(x, v)
                                        : init_two_stream(x, v, alpha, k0);
}

double init_cylinder(double x, double v) {
  const double r = std::sqrt(x * x + v * v);
  return (r < 0.5 && (x < 0.0 || std::fabs(v) > 0.125)) ? 1.0 : 0.0;
}

double init_two_stream(double x, double v, double alpha, double k0) {
  return (1.0 / std::sqrt(2.0 * std::numbers::pi)) * v * v *
         std::exp(-0.5 * v * v) * (1.0 + alpha * std::cos(k0 * x));
}

double exact_cylinder_solution(double t, double x, double v) {
  const double c = std::cos(t), s = std::sin(t);
  return init_cylinder(x * c - v * s, x * s + v * c);
}

}  // namespace vmr
