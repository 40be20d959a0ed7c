// Covering counts on b-adic grids in one and two dimensions, least-squares
// dimension estimation from log-counts, and the max-gap certificate used for
// interval-filling claims. Cells are half-open [j b^-m, (j+1) b^-m) with
// exact rational floors, so counts are bit-exact.
#pragma once

#include "cantorlab/digit_sets.hpp"
#include "cantorlab/rational.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

namespace cantorlab {

struct BoxCountSeries {
  int base = 0;
  std::vector<std::pair<int, long long>> entries;  // (m, N_m), m increasing
};

struct DimEstimate {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  int m_lo = 0;
  int m_hi = 0;
};

namespace detail {

inline Int cell_index(const Rational& x, const Int& scale) {
  return rational_floor(x * scale);
}

}  // namespace detail

// Number of occupied cells at side b^-m.
inline long long box_count_1d(const PointSet1D& points, int base, int m) {
  if (m < 0) throw ValidationError("box_count_1d: m must be >= 0");
  const Int scale = ipow(base, static_cast<unsigned>(m));
  std::vector<Int> cells;
  cells.reserve(points.points.size());
  for (const Rational& x : points.points) {
    cells.push_back(detail::cell_index(x, scale));
  }
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  return static_cast<long long>(cells.size());
}

// 2D analogue with square cells.
inline long long box_count_2d(const PlanarPointSet& points, int base, int m) {
  if (m < 0) throw ValidationError("box_count_2d: m must be >= 0");
  const Int scale = ipow(base, static_cast<unsigned>(m));
  std::vector<std::pair<Int, Int>> cells;
  cells.reserve(points.points.size());
  for (const auto& [x, y] : points.points) {
    cells.emplace_back(detail::cell_index(x, scale),
                       detail::cell_index(y, scale));
  }
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  return static_cast<long long>(cells.size());
}

inline BoxCountSeries count_series_1d(const PointSet1D& points, int base,
                                      int m_lo, int m_hi) {
  if (m_lo > m_hi) throw ValidationError("count_series_1d: empty m range");
  if (m_hi > points.depth) {
    throw ValidationError(
        "count_series_1d: m_hi exceeds the point set's resolution depth");
  }
  BoxCountSeries s;
  s.base = base;
  for (int m = m_lo; m <= m_hi; ++m) {
    s.entries.emplace_back(m, box_count_1d(points, base, m));
  }
  return s;
}

inline BoxCountSeries count_series_2d(const PlanarPointSet& points, int base,
                                      int m_lo, int m_hi) {
  if (m_lo > m_hi) throw ValidationError("count_series_2d: empty m range");
  if (m_hi > points.depth) {
    throw ValidationError(
        "count_series_2d: m_hi exceeds the point set's resolution depth");
  }
  BoxCountSeries s;
  s.base = base;
  for (int m = m_lo; m <= m_hi; ++m) {
    s.entries.emplace_back(m, box_count_2d(points, base, m));
  }
  return s;
}

// Least-squares fit of log N_m against m log(base); the slope is the
// box-dimension estimate. A constant series fits exactly with slope 0.
inline DimEstimate regress_dim(const BoxCountSeries& series) {
  const std::size_t n = series.entries.size();
  if (n < 3) throw ValidationError("regress_dim: need at least 3 entries");
  const double logb = std::log(static_cast<double>(series.base));
  double mean_x = 0.0, mean_y = 0.0;
  for (const auto& [m, cnt] : series.entries) {
    mean_x += m * logb;
    mean_y += std::log(static_cast<double>(cnt));
  }
  mean_x /= static_cast<double>(n);
  mean_y /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (const auto& [m, cnt] : series.entries) {
    const double dx = m * logb - mean_x;
    const double dy = std::log(static_cast<double>(cnt)) - mean_y;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  DimEstimate est;
  est.m_lo = series.entries.front().first;
  est.m_hi = series.entries.back().first;
  est.slope = sxx == 0.0 ? 0.0 : sxy / sxx;
  est.intercept = mean_y - est.slope * mean_x;
  if (syy == 0.0) {
    est.r_squared = 1.0;  // constant data, exact fit
  } else {
    double ss_res = 0.0;
    for (const auto& [m, cnt] : series.entries) {
      const double r = std::log(static_cast<double>(cnt)) -
                       (est.intercept + est.slope * m * logb);
      ss_res += r * r;
    }
    est.r_squared = 1.0 - ss_res / syy;
  }
  return est;
}

// Maximum difference of consecutive points; certifies interval filling at
// finite depth when it decays at the expected rate.
inline Rational max_gap(const PointSet1D& points) {
  if (points.points.size() < 2) {
    throw ValidationError("max_gap: need at least 2 points");
  }
  Rational best(0);
  for (std::size_t i = 1; i < points.points.size(); ++i) {
    const Rational gap = points.points[i] - points.points[i - 1];
    if (gap > best) best = gap;
  }
  return best;
}

}  // namespace cantorlab
