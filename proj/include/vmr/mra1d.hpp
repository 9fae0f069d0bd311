#pragma once

#include <span>
#include <vector>

#include "vmr/common.hpp"
#include "vmr/stencil.hpp"

namespace vmr {

// Multilevel coefficients of a 1D signal: coarse values on level j0 plus
// detail (prediction error) arrays per level j0..j1-1. Coefficients are in
// function units (unnormalized interpolatory convention).
struct Coeffs1D {
  int j0 = 0;
  int j1 = 0;
  Boundary bc = Boundary::Periodic;
  std::vector<double> coarse;
  std::vector<std::vector<double>> details;  // details[l]: level j0+l, length |coarse|*2^l
};

// One refinement step: even outputs copy the input, odd outputs are the
// stencil prediction. Output has twice the input length; out-of-range
// neighbors wrap (Periodic) or read 0 (ZeroExtension).
std::vector<double> predict(std::span<const double> coarse,
                            const PredictionStencil& s, Boundary bc);

// Restriction to even indices. Throws on odd input length.
std::vector<double> project(std::span<const double> fine);

// In-place one-level analysis/synthesis primitives used by the 1D and 2D
// transforms. `fine` has length 2n, `coarse` and `detail` length n.
void analyze_level(std::span<const double> fine, const PredictionStencil& s,
                   Boundary bc, double* coarse, double* detail);
// odd[k] = stencil prediction of c^{j+1}_{2k+1} from `coarse`.
void predict_odd(std::span<const double> coarse, const PredictionStencil& s,
                 Boundary bc, double* odd);
void synth_level(std::span<const double> coarse, std::span<const double> detail,
                 const PredictionStencil& s, Boundary bc, double* fine);

Coeffs1D forward_transform_1d(std::span<const double> values, int j0, int j1,
                              const PredictionStencil& s, Boundary bc);
std::vector<double> inverse_transform_1d(const Coeffs1D& c,
                                         const PredictionStencil& s);

// Samples of the scaling function at step 2^-depth over [-2N-1, 2N+1],
// built by cascading the prediction operator from a Kronecker delta.
std::vector<double> scaling_function_eval(int order_n, int depth);

}  // namespace vmr
