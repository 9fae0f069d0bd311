#pragma once

#include <random>
#include <vector>

#include "vmr/mra2d.hpp"

namespace vmrtest {

inline std::vector<double> random_vector(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> v(n);
  for (double& x : v) x = dist(rng);
  return v;
}

inline vmr::Grid2D random_grid(long nx, long nv, std::uint64_t seed) {
  vmr::Grid2D g(nx, nv);
  g.d = random_vector(g.d.size(), seed);
  return g;
}

inline double max_abs_diff(const std::vector<double>& a,
                           const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::fabs(a[i] - b[i]));
  return m;
}

}  // namespace vmrtest
