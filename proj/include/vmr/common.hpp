#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace vmr {

// Error categories mapped to CLI exit diagnostics.
class Error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};
class ConfigError : public Error {
  using Error::Error;
};
class NumericalError : public Error {
  using Error::Error;
};
class IoError : public Error {
  using Error::Error;
};

enum class Boundary { Periodic, ZeroExtension };

// One phase-space axis: dyadic grid of 2^j points on [a,b), step (b-a)/2^j.
struct Axis {
  double a = 0.0;
  double b = 1.0;
  Boundary bc = Boundary::Periodic;

  long npts(int level) const { return 1L << level; }
  double h(int level) const { return (b - a) / double(npts(level)); }
  double coord(int level, long i) const { return a + double(i) * h(level); }
  bool inside(double t) const { return t >= a && t < b; }
};

inline long wrap_index(long i, long n) {
  long r = i % n;
  return r < 0 ? r + n : r;
}

enum class NodeKind : std::uint8_t { Coarse = 0, Row = 1, Col = 2, Mid = 3 };

// A node of the dyadic hierarchy. For detail kinds `level` is the detail
// level j in [j0, j1-1] and the node's grid position lives on level j+1:
//   Row -> (2k1+1, 2k2), Col -> (2k1, 2k2+1), Mid -> (2k1+1, 2k2+1).
struct Node {
  int level = 0;
  NodeKind kind = NodeKind::Coarse;
  long k1 = 0;
  long k2 = 0;

  int glevel() const { return kind == NodeKind::Coarse ? level : level + 1; }
  long p1() const {
    switch (kind) {
      case NodeKind::Coarse: return k1;
      case NodeKind::Row: return 2 * k1 + 1;
      case NodeKind::Col: return 2 * k1;
      case NodeKind::Mid: return 2 * k1 + 1;
    }
    return 0;
  }
  long p2() const {
    switch (kind) {
      case NodeKind::Coarse: return k2;
      case NodeKind::Row: return 2 * k2;
      case NodeKind::Col: return 2 * k2 + 1;
      case NodeKind::Mid: return 2 * k2 + 1;
    }
    return 0;
  }

  std::uint64_t key() const {
    return (std::uint64_t(level & 0x3f) << 58) |
           (std::uint64_t(kind) << 56) |
           (std::uint64_t(k1) << 28) | std::uint64_t(k2);
  }
  static Node from_key(std::uint64_t k) {
    Node n;
    n.level = int((k >> 58) & 0x3f);
    n.kind = NodeKind((k >> 56) & 0x3);
    n.k1 = long((k >> 28) & 0xfffffff);
    n.k2 = long(k & 0xfffffff);
    return n;
  }
  bool operator==(const Node& o) const {
    return level == o.level && kind == o.kind && k1 == o.k1 && k2 == o.k2;
  }
};

// Unique owner of a finest-grid position (i1,i2): the node at which that
// position first appears when descending from j0.
inline Node canonical_node(long i1, long i2, int j0, int j1) {
  int gl = j1;
  while (gl > j0 && (i1 & 1) == 0 && (i2 & 1) == 0) {
    i1 >>= 1;
    i2 >>= 1;
    --gl;
  }
  Node n;
  if (gl == j0) {
    n = {j0, NodeKind::Coarse, i1, i2};
  } else if ((i1 & 1) && (i2 & 1)) {
    n = {gl - 1, NodeKind::Mid, (i1 - 1) / 2, (i2 - 1) / 2};
  } else if (i1 & 1) {
    n = {gl - 1, NodeKind::Row, (i1 - 1) / 2, i2 / 2};
  } else {
    n = {gl - 1, NodeKind::Col, i1 / 2, (i2 - 1) / 2};
  }
  return n;
}

inline std::uint64_t point_key(long i1, long i2) {
  return (std::uint64_t(std::uint32_t(i1)) << 32) | std::uint64_t(std::uint32_t(i2));
}
inline std::pair<long, long> point_from_key(std::uint64_t k) {
  return {long(std::int32_t(k >> 32)), long(std::int32_t(k & 0xffffffff))};
}

const char* node_kind_name(NodeKind k);

}  // namespace vmr
