#include "vmr/mra2d.hpp"

#include <algorithm>
#include <cmath>

#include "vmr/eval.hpp"

namespace vmr {
namespace {

// out[k2] = sum_i w[i] * row(k1 - N + i)[k2], x-boundary applied to the
// row index, zero extension reads nothing.
void weighted_rows(const Grid2D& g, long k1, const PredictionStencil& s,
                   Boundary bcx, double* out, long n) {
  std::fill(out, out + n, 0.0);
  for (int i = 0; i < s.taps(); ++i) {
    long r = k1 - s.order_n + i;
    if (r < 0 || r >= g.nx) {
      if (bcx != Boundary::Periodic) continue;
      r = wrap_index(r, g.nx);
    }
    const double w = s.weights[size_t(i)];
    const double* src = g.row(r);
    for (long k2 = 0; k2 < n; ++k2) out[k2] += w * src[k2];
  }
}

// One level of the three-case analysis: even-even restriction, row/col/mid
// details as prediction errors from the level-j (even-even) values only.
void analyze_level_2d(const Grid2D& fine, const PredictionStencil& s,
                      Boundary bcx, Boundary bcv, Grid2D& C, DetailLevel& dl) {
  const long m = fine.nx / 2, n = fine.nv / 2;
  C = Grid2D(m, n);
  dl.row = Grid2D(m, n);
  dl.col = Grid2D(m, n);
  dl.mid = Grid2D(m, n);
  for (long k1 = 0; k1 < m; ++k1) {
    analyze_level(std::span(fine.row(2 * k1), std::size_t(fine.nv)), s, bcv,
                  C.row(k1), dl.col.row(k1));
  }
  Grid2D PV(m, n);  // prediction of the odd-v positions at even x
  for (long k1 = 0; k1 < m; ++k1)
    predict_odd(std::span(C.row(k1), std::size_t(n)), s, bcv, PV.row(k1));
  std::vector<double> pred(std::size_t(n), 0.0);
  for (long k1 = 0; k1 < m; ++k1) {
    const double* fo = fine.row(2 * k1 + 1);
    weighted_rows(C, k1, s, bcx, pred.data(), n);
    double* rd = dl.row.row(k1);
    for (long k2 = 0; k2 < n; ++k2) rd[k2] = fo[2 * k2] - pred[std::size_t(k2)];
    weighted_rows(PV, k1, s, bcx, pred.data(), n);
    double* md = dl.mid.row(k1);
    for (long k2 = 0; k2 < n; ++k2)
      md[k2] = fo[2 * k2 + 1] - pred[std::size_t(k2)];
  }
}

void synth_level_2d(const Grid2D& C, const DetailLevel& dl,
                    const PredictionStencil& s, Boundary bcx, Boundary bcv,
                    Grid2D& fine) {
  const long m = C.nx, n = C.nv;
  fine = Grid2D(2 * m, 2 * n);
  for (long k1 = 0; k1 < m; ++k1) {
    synth_level(std::span(C.row(k1), std::size_t(n)),
                std::span(dl.col.row(k1), std::size_t(n)), s, bcv,
                fine.row(2 * k1));
  }
  Grid2D PV(m, n);
  for (long k1 = 0; k1 < m; ++k1)
    predict_odd(std::span(C.row(k1), std::size_t(n)), s, bcv, PV.row(k1));
  std::vector<double> pred(std::size_t(n), 0.0);
  for (long k1 = 0; k1 < m; ++k1) {
    double* fo = fine.row(2 * k1 + 1);
    weighted_rows(C, k1, s, bcx, pred.data(), n);
    const double* rd = dl.row.row(k1);
    for (long k2 = 0; k2 < n; ++k2) fo[2 * k2] = pred[std::size_t(k2)] + rd[k2];
    weighted_rows(PV, k1, s, bcx, pred.data(), n);
    const double* md = dl.mid.row(k1);
    for (long k2 = 0; k2 < n; ++k2)
      fo[2 * k2 + 1] = pred[std::size_t(k2)] + md[k2];
  }
}

}  // namespace

Coeffs2D forward_transform_2d(const Grid2D& fine, int j0, int j1,
                              const PredictionStencil& s, Boundary bcx,
                              Boundary bcv) {
  if (j0 >= j1) throw Error("forward_transform_2d: requires j0 < j1");
  const int levels = j1 - j0;
  const long f = 1L << levels;
  if (fine.nx % f != 0 || fine.nv % f != 0)
    throw Error("forward_transform_2d: grid dimensions do not match levels");
  Coeffs2D c;
  c.j0 = j0;
  c.j1 = j1;
  c.bcx = bcx;
  c.bcv = bcv;
  c.levels.resize(std::size_t(levels));
  Grid2D cur = fine;
  for (int l = levels - 1; l >= 0; --l) {
    Grid2D coarser;
    analyze_level_2d(cur, s, bcx, bcv, coarser, c.levels[std::size_t(l)]);
    cur = std::move(coarser);
  }
  c.coarse = std::move(cur);
  return c;
}

Grid2D inverse_transform_2d(const Coeffs2D& c, const PredictionStencil& s) {
  Grid2D cur = c.coarse;
  for (const auto& dl : c.levels) {
    if (dl.row.nx != cur.nx || dl.row.nv != cur.nv)
      throw Error("inverse_transform_2d: malformed detail level");
    Grid2D fine;
    synth_level_2d(cur, dl, s, c.bcx, c.bcv, fine);
    cur = std::move(fine);
  }
  return cur;
}

SparseRep threshold(const Coeffs2D& c, double eps, const PredictionStencil& s,
                    const Axis& ax, const Axis& av) {
  if (eps < 0) throw Error("threshold: eps must be >= 0");
  SparseRep rep;
  rep.j0 = c.j0;
  rep.j1 = c.j1;
  rep.order_n = s.order_n;
  rep.ax = ax;
  rep.av = av;
  rep.coarse = c.coarse;
  const Grid2D dense = inverse_transform_2d(c, s);
  for (std::size_t l = 0; l < c.levels.size(); ++l) {
    const int level = c.j0 + int(l);
    const auto scan = [&](const Grid2D& g, NodeKind kind) {
      for (long k1 = 0; k1 < g.nx; ++k1) {
        for (long k2 = 0; k2 < g.nv; ++k2) {
          const double d = g.at(k1, k2);
          if (d == 0.0 || std::fabs(d) < eps) continue;
          Node node{level, kind, k1, k2};
          const int shift = c.j1 - node.glevel();
          rep.details.emplace(node.key(), d);
          rep.nodal.emplace(node.key(),
                            dense.at(node.p1() << shift, node.p2() << shift));
        }
      }
    };
    scan(c.levels[l].row, NodeKind::Row);
    scan(c.levels[l].col, NodeKind::Col);
    scan(c.levels[l].mid, NodeKind::Mid);
  }
  return rep;
}

Grid2D reconstruct_dense(const SparseRep& rep, const PredictionStencil& s) {
  Coeffs2D c;
  c.j0 = rep.j0;
  c.j1 = rep.j1;
  c.bcx = rep.ax.bc;
  c.bcv = rep.av.bc;
  c.coarse = rep.coarse;
  c.levels.resize(std::size_t(rep.j1 - rep.j0));
  for (std::size_t l = 0; l < c.levels.size(); ++l) {
    const long m = rep.coarse.nx << l, n = rep.coarse.nv << l;
    c.levels[l].row = Grid2D(m, n);
    c.levels[l].col = Grid2D(m, n);
    c.levels[l].mid = Grid2D(m, n);
  }
  for (const auto& [key, d] : rep.details) {
    const Node node = Node::from_key(key);
    auto& dl = c.levels[std::size_t(node.level - rep.j0)];
    Grid2D& g = node.kind == NodeKind::Row   ? dl.row
                : node.kind == NodeKind::Col ? dl.col
                                             : dl.mid;
    g.at(node.k1, node.k2) = d;
  }
  return inverse_transform_2d(c, s);
}

SparseEvaluator::SparseEvaluator(const SparseRep& rep,
                                 const PredictionStencil& s, int refine_depth)
    : rep_(rep), s_(s), depth_(refine_depth) {
  memo_.reserve(1024);
}

double SparseEvaluator::node_value(int gl, long p, long q) const {
  const long nx = rep_.nx_at(gl), nv = rep_.nv_at(gl);
  if (p < 0 || p >= nx) {
    if (rep_.ax.bc != Boundary::Periodic) return 0.0;
    p = wrap_index(p, nx);
  }
  if (q < 0 || q >= nv) {
    if (rep_.av.bc != Boundary::Periodic) return 0.0;
    q = wrap_index(q, nv);
  }
  if (gl == rep_.j0) return rep_.coarse.at(p, q);
  if ((p & 1) == 0 && (q & 1) == 0) return node_value(gl - 1, p >> 1, q >> 1);
  const std::uint64_t mkey =
      (std::uint64_t(gl) << 52) | (std::uint64_t(p) << 26) | std::uint64_t(q);
  if (auto it = memo_.find(mkey); it != memo_.end()) return it->second;
  const int N = s_.order_n;
  const int taps = s_.taps();
  Node node;
  double pred = 0.0;
  if ((p & 1) && (q & 1)) {
    node = {gl - 1, NodeKind::Mid, (p - 1) / 2, (q - 1) / 2};
    for (int i = 0; i < taps; ++i) {
      double inner = 0.0;
      for (int l = 0; l < taps; ++l) {
        inner += s_.weights[size_t(l)] *
                 node_value(gl - 1, node.k1 - N + i, node.k2 - N + l);
      }
      pred += s_.weights[size_t(i)] * inner;
    }
  } else if (p & 1) {
    node = {gl - 1, NodeKind::Row, (p - 1) / 2, q / 2};
    for (int i = 0; i < taps; ++i)
      pred += s_.weights[size_t(i)] *
              node_value(gl - 1, node.k1 - N + i, node.k2);
  } else {
    node = {gl - 1, NodeKind::Col, p / 2, (q - 1) / 2};
    for (int l = 0; l < taps; ++l)
      pred += s_.weights[size_t(l)] *
              node_value(gl - 1, node.k1, node.k2 - N + l);
  }
  double val = pred;
  if (auto it = rep_.details.find(node.key()); it != rep_.details.end())
    val += it->second;
  memo_.emplace(mkey, val);
  return val;
}

double SparseEvaluator::finest(long i1, long i2) const {
  return node_value(rep_.j1, i1, i2);
}

double SparseEvaluator::operator()(double x, double v) const {
  const long nx = rep_.nx_at(rep_.j1), nv = rep_.nv_at(rep_.j1);
  double gx = (x - rep_.ax.a) / rep_.ax.h(rep_.j1);
  double gv = (v - rep_.av.a) / rep_.av.h(rep_.j1);
  constexpr double tol = 1e-9;
  // snap near-grid coordinates before the domain check so a shift below the
  // tolerance keeps boundary samples instead of falling outside
  const double rx = std::nearbyint(gx), rv = std::nearbyint(gv);
  if (std::fabs(gx - rx) < tol) gx = rx;
  if (std::fabs(gv - rv) < tol) gv = rv;
  if (rep_.ax.bc == Boundary::ZeroExtension && (gx < 0.0 || gx >= double(nx)))
    return 0.0;
  if (rep_.av.bc == Boundary::ZeroExtension && (gv < 0.0 || gv >= double(nv)))
    return 0.0;
  if (std::fabs(gx - rx) < tol && std::fabs(gv - rv) < tol) {
    long i1 = long(rx), i2 = long(rv);
    if (rep_.ax.bc == Boundary::Periodic) i1 = wrap_index(i1, nx);
    if (rep_.av.bc == Boundary::Periodic) i2 = wrap_index(i2, nv);
    if (i1 >= 0 && i1 < nx && i2 >= 0 && i2 < nv) {
      const Node node = canonical_node(i1, i2, rep_.j0, rep_.j1);
      if (node.kind != NodeKind::Coarse) {
        if (auto it = rep_.nodal.find(node.key()); it != rep_.nodal.end())
          return it->second;
      }
    }
    return node_value(rep_.j1, i1, i2);
  }
  return eval_point([this](long i1, long i2) { return finest(i1, i2); }, nx,
                    nv, rep_.ax.bc, rep_.av.bc, s_, depth_, gx, gv);
}

double evaluate(const SparseRep& rep, const PredictionStencil& s, double x,
                double v, int refine_depth) {
  return SparseEvaluator(rep, s, refine_depth)(x, v);
}

}  // namespace vmr
