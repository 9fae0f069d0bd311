#include <cmath>

#include "doctest.h"
#include "test_util.hpp"
#include "vmr/mra1d.hpp"
#include "vmr/mra2d.hpp"

using namespace vmr;

TEST_CASE("2D forward/inverse round trip") {
  for (const auto bcx : {Boundary::Periodic, Boundary::ZeroExtension}) {
    for (const auto bcv : {Boundary::Periodic, Boundary::ZeroExtension}) {
      for (int order_n : {0, 1, 2}) {
        const auto s = lagrange_midpoint_weights(order_n);
        const auto f = vmrtest::random_grid(64, 64, 7u + std::size_t(order_n));
        const auto c = forward_transform_2d(f, 2, 6, s, bcx, bcv);
        const auto back = inverse_transform_2d(c, s);
        CHECK(vmrtest::max_abs_diff(f.d, back.d) <= 1e-12);
      }
    }
  }
}

TEST_CASE("constant field has zero details at every level") {
  const auto s = lagrange_midpoint_weights(1);
  Grid2D f(32, 32);
  for (double& v : f.d) v = -1.5;
  const auto c = forward_transform_2d(f, 2, 5, s, Boundary::Periodic,
                                      Boundary::Periodic);
  for (double v : c.coarse.d) CHECK(v == -1.5);
  for (const auto& lvl : c.levels) {
    for (double d : lvl.row.d) CHECK(d == 0.0);
    for (double d : lvl.col.d) CHECK(d == 0.0);
    for (double d : lvl.mid.d) CHECK(d == 0.0);
  }
}

TEST_CASE("detail structure matches the 1D transforms") {
  // Row details at level j are the x-direction prediction errors of the
  // even-v columns; col details are v-direction prediction errors of even-x
  // rows. Cross-check one analysis level against 1D transforms.
  const auto s = lagrange_midpoint_weights(1);
  const auto f = vmrtest::random_grid(32, 32, 99);
  const auto c = forward_transform_2d(f, 4, 5, s, Boundary::Periodic,
                                      Boundary::Periodic);
  const auto& dl = c.levels[0];

  // col details: for fixed even x-row, 1D analysis along v
  for (long k1 = 0; k1 < 16; ++k1) {
    std::vector<double> line(32);
    for (long i2 = 0; i2 < 32; ++i2) line[std::size_t(i2)] = f.at(2 * k1, i2);
    const auto c1 = forward_transform_1d(line, 4, 5, s, Boundary::Periodic);
    for (long k2 = 0; k2 < 16; ++k2) {
      CHECK(dl.col.at(k1, k2) ==
            doctest::Approx(c1.details[0][std::size_t(k2)]).epsilon(1e-13));
      CHECK(c.coarse.at(k1, k2) ==
            doctest::Approx(c1.coarse[std::size_t(k2)]).epsilon(1e-13));
    }
  }
  // row details: for fixed even v-column, 1D analysis along x
  for (long k2 = 0; k2 < 16; ++k2) {
    std::vector<double> line(32);
    for (long i1 = 0; i1 < 32; ++i1) line[std::size_t(i1)] = f.at(i1, 2 * k2);
    const auto c1 = forward_transform_1d(line, 4, 5, s, Boundary::Periodic);
    for (long k1 = 0; k1 < 16; ++k1)
      CHECK(dl.row.at(k1, k2) ==
            doctest::Approx(c1.details[0][std::size_t(k1)]).epsilon(1e-13));
  }
  // mid details: odd-odd value minus the x-prediction of the v-predictions
  // built from the level-4 values
  for (long k1 = 0; k1 < 16; ++k1) {
    for (long k2 = 0; k2 < 16; ++k2) {
      double pred = 0.0;
      for (int i = 0; i < s.taps(); ++i) {
        double inner = 0.0;
        for (int l = 0; l < s.taps(); ++l)
          inner += s.weights[std::size_t(l)] *
                   c.coarse.at(wrap_index(k1 - 1 + i, 16),
                               wrap_index(k2 - 1 + l, 16));
        pred += s.weights[std::size_t(i)] * inner;
      }
      CHECK(dl.mid.at(k1, k2) ==
            doctest::Approx(f.at(2 * k1 + 1, 2 * k2 + 1) - pred)
                .epsilon(1e-12));
    }
  }
}

TEST_CASE("single mid detail synthesizes the tensor scaling bump") {
  const int j0 = 3, j1 = 6, order_n = 1;
  const auto s = lagrange_midpoint_weights(order_n);
  Coeffs2D c;
  c.j0 = j0;
  c.j1 = j1;
  c.bcx = c.bcv = Boundary::Periodic;
  c.coarse = Grid2D(8, 8);
  c.levels.resize(std::size_t(j1 - j0));
  for (int l = 0; l < j1 - j0; ++l) {
    const long n = 8L << l;
    c.levels[std::size_t(l)].row = Grid2D(n, n);
    c.levels[std::size_t(l)].col = Grid2D(n, n);
    c.levels[std::size_t(l)].mid = Grid2D(n, n);
  }
  const double d = 0.75;
  const long k1 = 4, k2 = 3;  // level j0 mid detail, interior support
  c.levels[0].mid.at(k1, k2) = d;
  const auto f = inverse_transform_2d(c, s);

  const int depth = j1 - j0 - 1;  // grid refinements below the detail's level
  const auto phi = scaling_function_eval(order_n, depth);
  const long step = 1L << depth;
  const long half = (2 * order_n + 1) * step;
  const long c1 = (2 * k1 + 1) * step, c2 = (2 * k2 + 1) * step;
  for (long i1 = 0; i1 < 64; ++i1) {
    for (long i2 = 0; i2 < 64; ++i2) {
      const long o1 = i1 - c1, o2 = i2 - c2;
      double expect = 0.0;
      if (std::labs(o1) < half && std::labs(o2) < half)
        expect = d * phi[std::size_t(half + o1)] * phi[std::size_t(half + o2)];
      CHECK(f.at(i1, i2) == doctest::Approx(expect).epsilon(1e-12));
    }
  }
}

TEST_CASE("threshold keeps large details and reconstructs") {
  const auto s = lagrange_midpoint_weights(1);
  const Axis ax{0.0, 1.0, Boundary::Periodic};
  const Axis av{0.0, 1.0, Boundary::Periodic};
  Grid2D f(64, 64);
  for (long i1 = 0; i1 < 64; ++i1)
    for (long i2 = 0; i2 < 64; ++i2)
      f.at(i1, i2) = std::sin(2.0 * M_PI * double(i1) / 64.0) *
                     std::cos(2.0 * M_PI * double(i2) / 64.0);
  const auto c = forward_transform_2d(f, 3, 6, s, ax.bc, av.bc);

  SUBCASE("eps = 0 is lossless") {
    const auto rep = threshold(c, 0.0, s, ax, av);
    const auto back = reconstruct_dense(rep, s);
    CHECK(vmrtest::max_abs_diff(f.d, back.d) <= 1e-12);
  }
  SUBCASE("compression is monotone in eps") {
    const auto r1 = threshold(c, 1e-6, s, ax, av);
    const auto r2 = threshold(c, 1e-3, s, ax, av);
    const auto r3 = threshold(c, 1e-1, s, ax, av);
    CHECK(r1.active_details() >= r2.active_details());
    CHECK(r2.active_details() >= r3.active_details());
    CHECK(r3.active_details() < r1.full_grid_points());
  }
  SUBCASE("retained details all meet the threshold") {
    const auto rep = threshold(c, 1e-3, s, ax, av);
    for (const auto& [key, d] : rep.details) CHECK(std::fabs(d) >= 1e-3);
  }
}

TEST_CASE("sparse evaluation") {
  const auto s = lagrange_midpoint_weights(1);
  const Axis ax{0.0, 1.0, Boundary::Periodic};
  const Axis av{-1.0, 1.0, Boundary::ZeroExtension};
  Grid2D f(64, 64);
  for (long i1 = 0; i1 < 64; ++i1)
    for (long i2 = 0; i2 < 64; ++i2) {
      const double x = ax.coord(6, i1), v = av.coord(6, i2);
      f.at(i1, i2) = std::sin(2.0 * M_PI * x) * std::exp(-4.0 * v * v);
    }
  const auto c = forward_transform_2d(f, 3, 6, s, ax.bc, av.bc);

  SUBCASE("lossless rep evaluates to the grid values at grid points") {
    const auto rep = threshold(c, 0.0, s, ax, av);
    const SparseEvaluator ev(rep, s);
    for (long i1 = 0; i1 < 64; i1 += 7)
      for (long i2 = 0; i2 < 64; i2 += 5)
        CHECK(ev(ax.coord(6, i1), av.coord(6, i2)) ==
              doctest::Approx(f.at(i1, i2)).epsilon(1e-12));
  }
  SUBCASE("active nodes evaluate to their cached nodal values exactly") {
    const auto rep = threshold(c, 1e-3, s, ax, av);
    const SparseEvaluator ev(rep, s);
    for (const auto& [key, val] : rep.nodal) {
      const Node n = Node::from_key(key);
      const int shift = rep.j1 - n.glevel();
      const double x = ax.coord(rep.j1, n.p1() << shift);
      const double v = av.coord(rep.j1, n.p2() << shift);
      CHECK(ev(x, v) == val);
    }
  }
  SUBCASE("grid evaluation matches dense reconstruction") {
    const auto rep = threshold(c, 1e-4, s, ax, av);
    const auto dense = reconstruct_dense(rep, s);
    const SparseEvaluator ev(rep, s);
    for (long i1 = 0; i1 < 64; i1 += 3)
      for (long i2 = 0; i2 < 64; i2 += 3) {
        const double got = ev.finest(i1, i2);
        CHECK(got == doctest::Approx(dense.at(i1, i2)).epsilon(1e-10));
      }
  }
  SUBCASE("off-grid evaluation approximates the smooth function") {
    const auto rep = threshold(c, 0.0, s, ax, av);
    const SparseEvaluator ev(rep, s);
    const double x = 0.3711, v = 0.1377;
    const double expect = std::sin(2.0 * M_PI * x) * std::exp(-4.0 * v * v);
    CHECK(ev(x, v) == doctest::Approx(expect).epsilon(5e-4));
  }
  SUBCASE("outside a zero-extension axis the value is 0") {
    const auto rep = threshold(c, 1e-4, s, ax, av);
    const SparseEvaluator ev(rep, s);
    CHECK(ev(0.5, 1.5) == 0.0);
    CHECK(ev(0.5, -1.25) == 0.0);
  }
}
