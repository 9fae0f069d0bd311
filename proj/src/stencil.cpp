#include "vmr/stencil.hpp"

#include <numeric>

namespace vmr {
namespace {

using int128 = __int128;

long long reduce_to_ll(int128 num, int128 den) {
  // caller splits sign handling; here just a gcd helper on magnitudes
  return (long long)(num / den);
}

int128 gcd128(int128 a, int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

PredictionStencil lagrange_midpoint_weights(int order_n) {
  if (order_n < 0) throw Error("stencil order must be >= 0");
  const int taps = 2 * order_n + 2;
  PredictionStencil s;
  s.order_n = order_n;
  s.exact.resize(taps);
  s.weights.resize(taps);
  // Nodes are the odd integers -(2N+1), ..., 2N+1; the midpoint is 0.
  for (int i = 0; i < taps; ++i) {
    int128 num = 1, den = 1;
    const int xi = 2 * (i - order_n) - 1;
    for (int m = 0; m < taps; ++m) {
      if (m == i) continue;
      const int xm = 2 * (m - order_n) - 1;
      num *= int128(-xm);
      den *= int128(xi - xm);
    }
    int128 g = gcd128(num, den);
    if (g != 0) {
      num /= g;
      den /= g;
    }
    if (den < 0) {
      num = -num;
      den = -den;
    }
    s.exact[i] = {reduce_to_ll(num, 1), reduce_to_ll(den, 1)};
    s.weights[i] = double(s.exact[i].num) / double(s.exact[i].den);
  }
  return s;
}

const char* node_kind_name(NodeKind k) {
  switch (k) {
    case NodeKind::Coarse: return "coarse";
    case NodeKind::Row: return "row";
    case NodeKind::Col: return "col";
    case NodeKind::Mid: return "mid";
  }
  return "?";
}

}  // namespace vmr
