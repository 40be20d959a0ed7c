#include "cantorlab/boxdim.hpp"

#include "cantorlab/digit_sets.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

using namespace cantorlab;
using Catch::Approx;

TEST_CASE("box_count_1d on canonical sets") {
  const PointSet1D c6 = enumerate_points(cantor_c(), 6);
  for (int m = 0; m <= 6; ++m) {
    REQUIRE(box_count_1d(c6, 4, m) == (1LL << m));  // one cell per prefix
  }
  const PointSet1D grid = enumerate_points(full_grid_4(), 4);
  for (int m = 0; m <= 4; ++m) {
    REQUIRE(box_count_1d(grid, 4, m) == (1LL << (2 * m)));
  }
  PointSet1D single;
  single.depth = 3;
  single.points = {Rational(0)};
  for (int m = 0; m <= 3; ++m) CHECK(box_count_1d(single, 4, m) == 1);
}

TEST_CASE("boundary points belong to the upper cell") {
  PointSet1D pts;
  pts.depth = 1;
  pts.points = {Rational(0), Rational(1, 4)};  // 1/4 sits exactly on a cell edge
  CHECK(box_count_1d(pts, 4, 1) == 2);
  PointSet1D edge;
  edge.depth = 2;
  edge.points = {Rational(3, 16), Rational(1, 4)};
  // at m = 1 the first point is in cell 0, the second exactly at cell 1
  CHECK(box_count_1d(edge, 4, 1) == 2);
}

TEST_CASE("counts are invariant under permutation and duplicates") {
  PlanarPointSet a;
  a.depth = 2;
  a.points = {{Rational(0), Rational(0)},
              {Rational(3, 4), Rational(3, 16)},
              {Rational(1, 2), Rational(1, 2)}};
  PlanarPointSet b;
  b.depth = 2;
  b.points = {{Rational(1, 2), Rational(1, 2)},
              {Rational(3, 4), Rational(3, 16)},
              {Rational(0), Rational(0)},
              {Rational(3, 4), Rational(3, 16)}};
  for (int m = 0; m <= 2; ++m) {
    REQUIRE(box_count_2d(a, 4, m) == box_count_2d(b, 4, m));
  }
}

TEST_CASE("box_count_2d on canonical sets") {
  const PlanarPointSet fc = four_corner(5);
  for (int m = 0; m <= 5; ++m) {
    REQUIRE(box_count_2d(fc, 4, m) == (1LL << (2 * m)));  // 4^m cells
  }
  PlanarPointSet single;
  single.depth = 4;
  single.points = {{Rational(1, 3), Rational(1, 7)}};
  for (int m = 0; m <= 4; ++m) CHECK(box_count_2d(single, 4, m) == 1);

  // full binary planar grid: (2^m)^2 squares at base 2
  PlanarPointSet grid2;
  grid2.depth = 3;
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      grid2.points.emplace_back(Rational(i, 8), Rational(j, 8));
    }
  }
  for (int m = 0; m <= 3; ++m) {
    REQUIRE(box_count_2d(grid2, 2, m) == (1LL << (2 * m)));
  }
}

TEST_CASE("count_series guards the resolution depth and stays monotone") {
  const PointSet1D c5 = enumerate_points(cantor_c(), 5);
  CHECK_THROWS_AS(count_series_1d(c5, 4, 0, 6), ValidationError);
  const BoxCountSeries s = count_series_1d(c5, 4, 0, 5);
  for (std::size_t i = 1; i < s.entries.size(); ++i) {
    const auto& [m0, n0] = s.entries[i - 1];
    const auto& [m1, n1] = s.entries[i];
    REQUIRE(m1 == m0 + 1);
    REQUIRE(n1 >= n0);
    REQUIRE(n1 <= n0 * 4);  // 1D ratio bound
  }
  const PlanarPointSet fc3 = four_corner(3);
  const BoxCountSeries s2 = count_series_2d(fc3, 4, 0, 3);
  for (std::size_t i = 1; i < s2.entries.size(); ++i) {
    REQUIRE(s2.entries[i].second <= s2.entries[i - 1].second * 16);
  }
}

TEST_CASE("regress_dim recovers exact slopes") {
  BoxCountSeries half;
  half.base = 4;
  for (int m = 1; m <= 10; ++m) half.entries.emplace_back(m, 1LL << m);
  const DimEstimate e1 = regress_dim(half);
  CHECK(e1.slope == Approx(0.5).margin(1e-9));
  CHECK(e1.r_squared == Approx(1.0).margin(1e-12));

  BoxCountSeries full;
  full.base = 4;
  for (int m = 1; m <= 8; ++m) full.entries.emplace_back(m, 1LL << (2 * m));
  CHECK(regress_dim(full).slope == Approx(1.0).margin(1e-9));

  BoxCountSeries flat;
  flat.base = 4;
  for (int m = 1; m <= 5; ++m) flat.entries.emplace_back(m, 1);
  const DimEstimate e3 = regress_dim(flat);
  CHECK(e3.slope == 0.0);
  CHECK(e3.r_squared == 1.0);

  BoxCountSeries tiny;
  tiny.base = 4;
  tiny.entries = {{1, 2}, {2, 4}};
  CHECK_THROWS_AS(regress_dim(tiny), ValidationError);
}

TEST_CASE("max_gap basics") {
  PointSet1D p;
  p.depth = 1;
  p.points = {Rational(0), Rational(3, 4)};
  CHECK(max_gap(p) == Rational(3, 4));

  const PointSet1D grid = enumerate_points(full_grid_4(), 3);
  CHECK(max_gap(grid) == Rational(1, 64));

  PointSet1D one;
  one.depth = 0;
  one.points = {Rational(0)};
  CHECK_THROWS_AS(max_gap(one), ValidationError);
}
