#pragma once

#include <functional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "vmr/common.hpp"
#include "vmr/mra2d.hpp"

namespace vmr {

// The adaptive mesh: retained detail nodes. Every coarse node is active
// unconditionally and is kept implicit.
struct ActiveSet {
  int j0 = 0, j1 = 0;
  Axis ax, av;
  long nx0 = 0, nv0 = 0;  // coarse grid dimensions
  std::unordered_set<std::uint64_t> details;

  long nx_at(int glevel) const { return nx0 << (glevel - j0); }
  long nv_at(int glevel) const { return nv0 << (glevel - j0); }
};

ActiveSet active_set_of(const SparseRep& rep);
// Test hook: every detail node at every level marked active.
ActiveSet full_active_set(int j0, int j1, const Axis& ax, const Axis& av);

enum class Phase { X, V };

// Forward-Euler prediction of where details will matter after a transport
// substep: each active node's characteristic endpoint is bracketed at one
// level finer (capped at j1) and the surrounding stencil-wide run of grid
// points becomes candidate detail nodes. `displacement(x, v)` returns the
// move along the phase axis, already multiplied by dt.
ActiveSet predict_active_set(
    const ActiveSet& g,
    const std::function<double(double, double)>& displacement, Phase phase,
    int order_n);

// Transform-dependency closure: every finest-grid sample needed to compute
// the details of the target set, plus the induced (transitively required)
// detail nodes.
struct ComputeMesh {
  std::unordered_set<std::uint64_t> points;  // finest-grid point keys
  std::unordered_set<std::uint64_t> nodes;   // induced detail node keys
  std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> served_by;
};

ComputeMesh closure(const ActiveSet& g, int order_n);

struct ActiveCounts {
  std::size_t total = 0;
  std::size_t coarse = 0;
  std::vector<std::size_t> details_per_level;  // index l -> level j0+l
};

ActiveCounts count_active(const ActiveSet& g);

}  // namespace vmr
