#include "vmr/adaptive.hpp"

#include <cmath>
#include <deque>

namespace vmr {

ActiveSet active_set_of(const SparseRep& rep) {
  ActiveSet g;
  g.j0 = rep.j0;
  g.j1 = rep.j1;
  g.ax = rep.ax;
  g.av = rep.av;
  g.nx0 = rep.coarse.nx;
  g.nv0 = rep.coarse.nv;
  g.details.reserve(rep.details.size());
  for (const auto& [key, d] : rep.details) g.details.insert(key);
  return g;
}

ActiveSet full_active_set(int j0, int j1, const Axis& ax, const Axis& av) {
  ActiveSet g;
  g.j0 = j0;
  g.j1 = j1;
  g.ax = ax;
  g.av = av;
  g.nx0 = 1L << j0;
  g.nv0 = 1L << j0;
  for (int level = j0; level < j1; ++level) {
    const long m = g.nx_at(level), n = g.nv_at(level);
    for (long k1 = 0; k1 < m; ++k1) {
      for (long k2 = 0; k2 < n; ++k2) {
        g.details.insert(Node{level, NodeKind::Row, k1, k2}.key());
        g.details.insert(Node{level, NodeKind::Col, k1, k2}.key());
        g.details.insert(Node{level, NodeKind::Mid, k1, k2}.key());
      }
    }
  }
  return g;
}

namespace {

void predict_one(const ActiveSet& g, const Node& node,
                 const std::function<double(double, double)>& displacement,
                 Phase phase, int order_n, ActiveSet& out) {
  const int gl = node.glevel();
  const double xpos = g.ax.coord(gl, node.p1());
  const double vpos = g.av.coord(gl, node.p2());
  const double disp = displacement(xpos, vpos);
  if (!std::isfinite(disp)) throw NumericalError("non-finite displacement");
  const Axis& axis = (phase == Phase::X) ? g.ax : g.av;
  const long p_along = (phase == Phase::X) ? node.p1() : node.p2();
  const long p_orth = (phase == Phase::X) ? node.p2() : node.p1();
  const double end = ((phase == Phase::X) ? xpos : vpos) + disp;
  if (axis.bc == Boundary::ZeroExtension && !axis.inside(end)) return;
  const int jg = std::min(gl + 1, g.j1);
  const long n_along =
      (phase == Phase::X) ? g.nx_at(jg) : g.nv_at(jg);
  const long m_start = p_along << (jg - gl);
  const long m_end = long(std::floor((end - axis.a) / axis.h(jg)));
  // full swept range of cells plus the interpolation stencil margin
  const long lo = std::min(m_start, m_end) - order_n;
  const long hi = std::max(m_start, m_end) + order_n + 1;
  const long orth = p_orth << (jg - gl);
  const int shift = g.j1 - jg;
  for (long i = lo; i <= hi; ++i) {
    long ii = i;
    if (ii < 0 || ii >= n_along) {
      if (axis.bc != Boundary::Periodic) continue;
      ii = wrap_index(ii, n_along);
    }
    const long a1 = (phase == Phase::X) ? (ii << shift) : (orth << shift);
    const long a2 = (phase == Phase::X) ? (orth << shift) : (ii << shift);
    const Node cn = canonical_node(a1, a2, g.j0, g.j1);
    if (cn.kind != NodeKind::Coarse) out.details.insert(cn.key());
  }
}

}  // namespace

ActiveSet predict_active_set(
    const ActiveSet& g,
    const std::function<double(double, double)>& displacement, Phase phase,
    int order_n) {
  ActiveSet out;
  out.j0 = g.j0;
  out.j1 = g.j1;
  out.ax = g.ax;
  out.av = g.av;
  out.nx0 = g.nx0;
  out.nv0 = g.nv0;
  out.details.reserve(g.details.size() * 2);
  for (long k1 = 0; k1 < g.nx0; ++k1) {
    for (long k2 = 0; k2 < g.nv0; ++k2) {
      predict_one(g, Node{g.j0, NodeKind::Coarse, k1, k2}, displacement, phase,
                  order_n, out);
    }
  }
  for (const auto key : g.details)
    predict_one(g, Node::from_key(key), displacement, phase, order_n, out);
  return out;
}

ComputeMesh closure(const ActiveSet& g, int order_n) {
  ComputeMesh cm;
  const int s0 = g.j1 - g.j0;
  for (long k1 = 0; k1 < g.nx0; ++k1)
    for (long k2 = 0; k2 < g.nv0; ++k2)
      cm.points.insert(point_key(k1 << s0, k2 << s0));
  std::deque<std::uint64_t> work(g.details.begin(), g.details.end());
  cm.nodes.insert(g.details.begin(), g.details.end());
  const int N = order_n;
  const int taps = 2 * N + 2;
  while (!work.empty()) {
    const std::uint64_t key = work.front();
    work.pop_front();
    const Node node = Node::from_key(key);
    const int jd = node.level;  // stencil lives on grid level jd
    const int shift_pos = g.j1 - node.glevel();
    const std::uint64_t pos =
        point_key(node.p1() << shift_pos, node.p2() << shift_pos);
    cm.points.insert(pos);
    cm.served_by[pos].push_back(key);
    const long nxd = g.nx_at(jd), nvd = g.nv_at(jd);
    const int shift = g.j1 - jd;
    auto add_dep = [&](long d1, long d2) {
      if (d1 < 0 || d1 >= nxd) {
        if (g.ax.bc != Boundary::Periodic) return;
        d1 = wrap_index(d1, nxd);
      }
      if (d2 < 0 || d2 >= nvd) {
        if (g.av.bc != Boundary::Periodic) return;
        d2 = wrap_index(d2, nvd);
      }
      const long a1 = d1 << shift, a2 = d2 << shift;
      const std::uint64_t pk = point_key(a1, a2);
      cm.points.insert(pk);
      cm.served_by[pk].push_back(key);
      const Node cn = canonical_node(a1, a2, g.j0, g.j1);
      if (cn.kind != NodeKind::Coarse && cm.nodes.insert(cn.key()).second)
        work.push_back(cn.key());
    };
    switch (node.kind) {
      case NodeKind::Row:
        for (int i = 0; i < taps; ++i) add_dep(node.k1 - N + i, node.k2);
        break;
      case NodeKind::Col:
        for (int l = 0; l < taps; ++l) add_dep(node.k1, node.k2 - N + l);
        break;
      case NodeKind::Mid:
        for (int i = 0; i < taps; ++i)
          for (int l = 0; l < taps; ++l)
            add_dep(node.k1 - N + i, node.k2 - N + l);
        break;
      case NodeKind::Coarse:
        break;
    }
  }
  return cm;
}

ActiveCounts count_active(const ActiveSet& g) {
  ActiveCounts c;
  c.coarse = std::size_t(g.nx0) * std::size_t(g.nv0);
  c.details_per_level.assign(std::size_t(g.j1 - g.j0), 0);
  for (const auto key : g.details) {
    const Node node = Node::from_key(key);
    ++c.details_per_level[std::size_t(node.level - g.j0)];
  }
  c.total = c.coarse + g.details.size();
  return c;
}

}  // namespace vmr
