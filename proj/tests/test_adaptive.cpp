#include <cmath>

#include "doctest.h"
#include "test_util.hpp"
#include "vmr/adaptive.hpp"

using namespace vmr;

namespace {

ActiveSet coarse_only(int j0, int j1) {
  ActiveSet g;
  g.j0 = j0;
  g.j1 = j1;
  g.ax = {0.0, 1.0, Boundary::Periodic};
  g.av = {0.0, 1.0, Boundary::Periodic};
  g.nx0 = 1L << j0;
  g.nv0 = 1L << j0;
  return g;
}

}  // namespace

TEST_CASE("closure of a coarse-only mesh is the coarse grid") {
  const auto g = coarse_only(4, 8);
  const auto cm = closure(g, 1);
  CHECK(cm.nodes.empty());
  CHECK(cm.points.size() == 256);
  // all points sit at coarse positions on the finest grid
  for (const auto pk : cm.points) {
    const auto [i1, i2] = point_from_key(pk);
    CHECK(i1 % 16 == 0);
    CHECK(i2 % 16 == 0);
  }
}

TEST_CASE("closure of a single coarse-level detail adds its stencil") {
  auto g = coarse_only(4, 8);
  // a row detail at level j0: prediction from 4 level-j0 points (N=1), all
  // coarse, so no recursion
  g.details.insert(Node{4, NodeKind::Row, 7, 5}.key());
  const auto cm = closure(g, 1);
  CHECK(cm.nodes.size() == 1);
  CHECK(cm.points.size() == 256 + 1);  // stencil deps are coarse points
  const auto pos = point_key(15L << 3, 10L << 3);  // (2*7+1, 2*5) at level 5
  CHECK(cm.points.count(pos) == 1);
  CHECK(cm.served_by.at(pos).size() == 1);
}

TEST_CASE("closure recursion pulls finer nodes down to coarse") {
  auto g = coarse_only(3, 6);
  // a mid detail at the finest detail level; its stencil points at level 5
  // canonicalize to coarser detail nodes which must join the mesh
  g.details.insert(Node{5, NodeKind::Mid, 9, 9}.key());
  const auto cm = closure(g, 1);
  CHECK(cm.nodes.size() > 1);
  for (const auto nk : cm.nodes) {
    const Node n = Node::from_key(nk);
    CHECK(n.level >= 3);
    CHECK(n.level <= 5);
    // every induced node's own position is a compute point
    const int shift = 6 - n.glevel();
    CHECK(cm.points.count(point_key(n.p1() << shift, n.p2() << shift)) == 1);
  }
  SUBCASE("closure is idempotent") {
    ActiveSet g2 = g;
    g2.details = cm.nodes;
    const auto cm2 = closure(g2, 1);
    CHECK(cm2.nodes == cm.nodes);
    CHECK(cm2.points == cm.points);
  }
}

TEST_CASE("closure is monotone") {
  auto g1 = coarse_only(3, 6);
  g1.details.insert(Node{3, NodeKind::Mid, 2, 2}.key());
  auto g2 = g1;
  g2.details.insert(Node{4, NodeKind::Row, 5, 7}.key());
  const auto cm1 = closure(g1, 1);
  const auto cm2 = closure(g2, 1);
  for (const auto p : cm1.points) CHECK(cm2.points.count(p) == 1);
  for (const auto n : cm1.nodes) CHECK(cm2.nodes.count(n) == 1);
}

TEST_CASE("zero displacement prediction refines the active set in place") {
  auto g = coarse_only(3, 6);
  g.details.insert(Node{3, NodeKind::Mid, 4, 4}.key());
  g.details.insert(Node{4, NodeKind::Row, 3, 6}.key());
  const auto out = predict_active_set(
      g, [](double, double) { return 0.0; }, Phase::X, 1);
  // each active node's own position reappears (bracketing run includes the
  // start cell), canonicalized at one level finer where possible
  for (const auto key : g.details) {
    const Node n = Node::from_key(key);
    const int shift = 6 - n.glevel();
    const Node cn = canonical_node(n.p1() << shift, n.p2() << shift, 3, 6);
    CHECK(out.details.count(cn.key()) == 1);
  }
  CHECK(!out.details.empty());
}

TEST_CASE("prediction drops nodes leaving a zero-extension axis") {
  ActiveSet g = coarse_only(3, 6);
  g.av = {0.0, 1.0, Boundary::ZeroExtension};
  g.details.insert(Node{5, NodeKind::Col, 31, 31}.key());  // v near the top
  const auto out = predict_active_set(
      g, [](double, double) { return 0.5; }, Phase::V, 1);
  // the tracked endpoint leaves [0,1): that node contributes nothing
  for (const auto key : out.details) {
    const Node n = Node::from_key(key);
    CHECK(n.level <= 5);
  }
}

TEST_CASE("prediction shifts the refined region with the displacement") {
  auto g = coarse_only(4, 8);
  g.details.insert(Node{6, NodeKind::Mid, 10, 20}.key());
  const double disp = 0.25;  // one quarter of the x-period
  const auto out = predict_active_set(
      g, [disp](double, double) { return disp; }, Phase::X, 1);
  // some predicted node must sit near the displaced x position
  const Node src{6, NodeKind::Mid, 10, 20};
  const double x_end = g.ax.coord(7, src.p1()) + disp;
  bool found = false;
  for (const auto key : out.details) {
    const Node n = Node::from_key(key);
    const double x = g.ax.coord(n.glevel(), n.p1());
    const double v = g.av.coord(n.glevel(), n.p2());
    if (std::fabs(x - x_end) < 0.02 &&
        std::fabs(v - g.av.coord(7, src.p2())) < 1e-12)
      found = true;
  }
  CHECK(found);
}

TEST_CASE("count_active tallies coarse plus details per level") {
  auto g = coarse_only(3, 6);
  g.details.insert(Node{3, NodeKind::Row, 0, 0}.key());
  g.details.insert(Node{3, NodeKind::Col, 1, 1}.key());
  g.details.insert(Node{5, NodeKind::Mid, 2, 2}.key());
  const auto c = count_active(g);
  CHECK(c.coarse == 64);
  CHECK(c.total == 67);
  REQUIRE(c.details_per_level.size() == 3);
  CHECK(c.details_per_level[0] == 2);
  CHECK(c.details_per_level[1] == 0);
  CHECK(c.details_per_level[2] == 1);
}

TEST_CASE("full active set covers every detail node") {
  const Axis ax{0.0, 1.0, Boundary::Periodic};
  const auto g = full_active_set(2, 4, ax, ax);
  // levels 2 and 3: 3*(16 + 64) detail nodes
  CHECK(g.details.size() == 3 * (16 + 64));
  const auto c = count_active(g);
  CHECK(c.total == 16 + g.details.size());
}
