#pragma once

#include <vector>

#include "vmr/common.hpp"

namespace vmr {

struct Rational {
  long long num = 0;
  long long den = 1;  // > 0, reduced
  bool operator==(const Rational& o) const {
    return num == o.num && den == o.den;
  }
};

// Midpoint weights of the degree-(2N+1) Lagrange interpolant on 2N+2
// consecutive grid points. Applied to c^j_{k-N}..c^j_{k+N+1} it predicts
// c^{j+1}_{2k+1}.
struct PredictionStencil {
  int order_n = 1;
  std::vector<Rational> exact;   // 2N+2 entries
  std::vector<double> weights;   // exact, converted

  int taps() const { return 2 * order_n + 2; }
};

// Weights computed as exact rationals from the product formula; total for
// any order_n >= 0.
PredictionStencil lagrange_midpoint_weights(int order_n);

}  // namespace vmr
