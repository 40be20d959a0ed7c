// The toy sets built from projections of the four-corner set: per-parameter
// projections (1-x) c1 + x c2 / 2, sumsets c1 + t c2, the planar union over a
// digit-restricted parameter set, per-parameter dimension profiles, and the
// comparison table of dimension bounds.
#pragma once

#include "cantorlab/boxdim.hpp"
#include "cantorlab/digit_sets.hpp"
#include "cantorlab/integrals.hpp"
#include "cantorlab/rational.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_set>
#include <vector>

namespace cantorlab {

struct BoundsReport {
  double alpha = 0.0;
  double lower_wolff = 0.0;    // max(1/2 + alpha, 2 alpha)
  double lower_oberlin = 0.0;  // c + 3 alpha / 2
  double lower_l3 = 0.0;       // c' + 4 alpha / 3
  double upper = 0.0;          // 1/2 + 3 alpha / 2
};

inline BoundsReport bounds_report(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw ValidationError("bounds_report: alpha must be in (0, 1)");
  }
  const Constants cs = constants();
  BoundsReport r;
  r.alpha = alpha;
  r.lower_wolff = std::max(0.5 + alpha, 2.0 * alpha);
  r.lower_oberlin = cs.c + 1.5 * alpha;
  r.lower_l3 = cs.c_prime + 4.0 * alpha / 3.0;
  r.upper = 0.5 + 1.5 * alpha;
  return r;
}

struct ProfilePoint {
  Rational x;
  DimEstimate dim;
  long long n_points = 0;
};

namespace detail {

// Deduplicated sorted numerators of {(a * C1 + b * C2) / den} over all pairs
// of depth-n points of the base-4 set C, where C1, C2 are numerators in
// units of 4^-depth. Exact int64 arithmetic; callers guarantee the bounds.
inline std::vector<long long> pair_values(long long a, long long b,
                                          int depth) {
  // numerators of C_depth in units of 4^-depth, most-significant digit first
  std::vector<long long> cnum{0};
  for (int j = 0; j < depth; ++j) {
    std::vector<long long> next;
    next.reserve(cnum.size() * 2);
    for (long long p : cnum) {
      next.push_back(p * 4);
      next.push_back(p * 4 + 3);
    }
    cnum = std::move(next);
  }
  std::vector<long long> values;
  values.reserve(cnum.size() * cnum.size());
  for (long long c1 : cnum) {
    const long long base = a * c1;
    for (long long c2 : cnum) values.push_back(base + b * c2);
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

inline void check_scaled_bounds(const Int& den, const char* what) {
  if (den >= (Int(1) << 62)) {
    throw BudgetError(std::string(what) +
                      ": exact int64 representation out of range");
  }
}

}  // namespace detail

namespace detail {

// Sorted (value, multiplicity) pairs of {a C1 + b C2} over all digit pairs.
inline std::vector<std::pair<long long, long long>> pair_values_counted(
    long long a, long long b, int depth) {
  std::vector<long long> cnum{0};
  for (int j = 0; j < depth; ++j) {
    std::vector<long long> next;
    next.reserve(cnum.size() * 2);
    for (long long p : cnum) {
      next.push_back(p * 4);
      next.push_back(p * 4 + 3);
    }
    cnum = std::move(next);
  }
  std::vector<long long> values;
  values.reserve(cnum.size() * cnum.size());
  for (long long c1 : cnum) {
    const long long base = a * c1;
    for (long long c2 : cnum) values.push_back(base + b * c2);
  }
  std::sort(values.begin(), values.end());
  std::vector<std::pair<long long, long long>> out;
  for (std::size_t i = 0; i < values.size();) {
    std::size_t j = i;
    while (j < values.size() && values[j] == values[i]) ++j;
    out.emplace_back(values[i], static_cast<long long>(j - i));
    i = j;
  }
  return out;
}

}  // namespace detail

// Pushforward of the uniform pair measure under (c1, c2) -> (1-x) c1 + x
// c2/2: each image point carries (number of preimages) / 4^depth.
inline DiscreteMeasure project_px_measure(const Rational& x, int depth,
                                          std::int64_t budget =
                                              kDefaultBudget) {
  if (x < 0 || x > 1) {
    throw ValidationError("project_px_measure: x must be in [0,1]");
  }
  if (depth < 0) throw ValidationError("project_px_measure: depth >= 0");
  checked_count(4, depth, budget, "project_px_measure");
  const Int q = denominator(x), p = numerator(x);
  const Int den = 2 * q * ipow(Int(4), static_cast<unsigned>(depth));
  detail::check_scaled_bounds(den, "project_px_measure");
  const Int total = ipow(Int(4), static_cast<unsigned>(depth));
  DiscreteMeasure out;
  for (const auto& [v, count] : detail::pair_values_counted(
           static_cast<long long>(2 * (q - p)), static_cast<long long>(p),
           depth)) {
    out.atoms.emplace_back(Rational(Int(v), den), Rational(count, total));
  }
  return out;
}

// Pushforward under (c1, c2) -> c1 + t c2.
inline DiscreteMeasure sumset_measure(const Rational& t, int depth,
                                      std::int64_t budget = kDefaultBudget) {
  if (depth < 0) throw ValidationError("sumset_measure: depth >= 0");
  checked_count(4, depth, budget, "sumset_measure");
  const Int q = denominator(t), p = numerator(t);
  const Int den = q * ipow(Int(4), static_cast<unsigned>(depth));
  detail::check_scaled_bounds(
      (abs(p) + q) * ipow(Int(4), static_cast<unsigned>(depth)),
      "sumset_measure");
  const Int total = ipow(Int(4), static_cast<unsigned>(depth));
  DiscreteMeasure out;
  for (const auto& [v, count] : detail::pair_values_counted(
           static_cast<long long>(q), static_cast<long long>(p), depth)) {
    out.atoms.emplace_back(Rational(Int(v), den), Rational(count, total));
  }
  return out;
}

// The projected set {(1-x) c1 + x c2 / 2 : c1, c2 in C_depth}, deduplicated
// and exact. Common denominator 2 q 4^depth with x = p/q.
inline PointSet1D project_px(const Rational& x, int depth,
                             std::int64_t budget = kDefaultBudget) {
  if (x < 0 || x > 1) throw ValidationError("project_px: x must be in [0,1]");
  if (depth < 0) throw ValidationError("project_px: depth must be >= 0");
  checked_count(4, depth, budget, "project_px");
  const Int q = denominator(x), p = numerator(x);
  const Int den = 2 * q * ipow(Int(4), static_cast<unsigned>(depth));
  detail::check_scaled_bounds(den, "project_px");
  // (1-x) c1 + x c2/2 = (2 (q-p) C1 + p C2) / (2 q 4^depth)
  const long long a = static_cast<long long>(2 * (q - p));
  const long long b = static_cast<long long>(p);
  std::vector<long long> vals = detail::pair_values(a, b, depth);
  PointSet1D out;
  out.depth = depth;
  out.points.reserve(vals.size());
  for (long long v : vals) out.points.emplace_back(Rational(Int(v), den));
  return out;
}

// The sumset {c1 + t c2 : c1, c2 in C_depth}, deduplicated and exact.
inline PointSet1D sumset(const Rational& t, int depth,
                         std::int64_t budget = kDefaultBudget) {
  if (depth < 0) throw ValidationError("sumset: depth must be >= 0");
  checked_count(4, depth, budget, "sumset");
  const Int q = denominator(t), p = numerator(t);
  const Int den = q * ipow(Int(4), static_cast<unsigned>(depth));
  detail::check_scaled_bounds((abs(p) + q) * ipow(Int(4),
                                                  static_cast<unsigned>(depth)),
                              "sumset");
  // c1 + t c2 = (q C1 + p C2) / (q 4^depth)
  std::vector<long long> vals = detail::pair_values(
      static_cast<long long>(q), static_cast<long long>(p), depth);
  PointSet1D out;
  out.depth = depth;
  out.points.reserve(vals.size());
  for (long long v : vals) out.points.emplace_back(Rational(Int(v), den));
  return out;
}

// Picks round(base^alpha) evenly spread digits; the achieved dimension
// log(d)/log(base) may differ from the requested alpha and is what reports
// carry.
inline CantorSpec build_k_spec(double alpha, int base = 4) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw ValidationError("build_k_spec: alpha must be in (0, 1)");
  }
  if (base < 2) throw ValidationError("build_k_spec: base must be >= 2");
  const long long d = std::llround(std::pow(static_cast<double>(base), alpha));
  if (d < 2) {
    throw ValidationError("build_k_spec: alpha too small for this base");
  }
  if (d > base - 1) {
    throw ValidationError(
        "build_k_spec: alpha too close to 1, digit set would be full");
  }
  std::vector<int> digits;
  digits.reserve(static_cast<std::size_t>(d));
  for (long long i = 0; i < d; ++i) {
    digits.push_back(static_cast<int>(
        std::llround(static_cast<double>(i) * (base - 1) /
                     static_cast<double>(d - 1))));
  }
  return make_spec(base, digits);
}

// Resolution of a parameter denominator in base-4 cells: the largest m with
// 4^m <= B.
namespace detail {
inline int base4_resolution(const Int& B) {
  int m = 0;
  Int p = 4;
  while (p <= B) {
    ++m;
    p *= 4;
  }
  return m;
}
}  // namespace detail

// The planar point cloud {(x, (1-x) c1 + x c2/2) : x in K_depthK, (c1, c2) in
// C_depthC^2}; the x-section at each x equals project_px(x, depthC) exactly.
inline PlanarPointSet build_e(const CantorSpec& spec_k, int depth_k,
                              int depth_c,
                              std::int64_t budget = kDefaultBudget) {
  const std::int64_t kcount = checked_count(
      static_cast<std::int64_t>(spec_k.digits.size()), depth_k, budget,
      "build_e");
  const std::int64_t ccount = checked_count(4, depth_c, budget, "build_e");
  if (kcount > budget / ccount) {
    throw BudgetError("build_e: enumeration budget exceeded");
  }
  PointSet1D xs = enumerate_points(spec_k, depth_k, budget);
  PlanarPointSet out;
  out.depth = std::min(depth_c,
                       detail::base4_resolution(
                           ipow(spec_k.base, static_cast<unsigned>(depth_k))));
  for (const Rational& x : xs.points) {
    PointSet1D section = project_px(x, depth_c, budget);
    for (Rational& y : section.points) {
      out.points.emplace_back(x, std::move(y));
    }
  }
  return out;
}

// Streaming b-adic covering counts of the same cloud without materializing
// it: per parameter, the section values are produced as exact scaled
// integers and only the occupied-cell sets per scale are kept.
inline BoxCountSeries e_count_series(const CantorSpec& spec_k, int depth_k,
                                     int depth_c, int m_lo, int m_hi,
                                     std::int64_t budget = kDefaultBudget) {
  const std::int64_t kcount = checked_count(
      static_cast<std::int64_t>(spec_k.digits.size()), depth_k, budget,
      "e_count_series");
  const std::int64_t ccount = checked_count(4, depth_c, budget,
                                            "e_count_series");
  if (kcount > budget / ccount) {
    throw BudgetError("e_count_series: enumeration budget exceeded");
  }
  const Int B_big = ipow(spec_k.base, static_cast<unsigned>(depth_k));
  const int x_res = detail::base4_resolution(B_big);
  if (m_lo > m_hi) throw ValidationError("e_count_series: empty m range");
  if (m_hi > std::min(depth_c, x_res)) {
    throw ValidationError(
        "e_count_series: m_hi exceeds the cloud's resolution depth");
  }
  const Int pow4c = ipow(Int(4), static_cast<unsigned>(depth_c));
  detail::check_scaled_bounds(2 * B_big * pow4c, "e_count_series");
  const long long B = static_cast<long long>(B_big);
  const long long den = static_cast<long long>(2 * B_big * pow4c);

  // numerators of C_depthC in units of 4^-depthC
  std::vector<long long> cnum{0};
  for (int j = 0; j < depth_c; ++j) {
    std::vector<long long> next;
    next.reserve(cnum.size() * 2);
    for (long long p : cnum) {
      next.push_back(p * 4);
      next.push_back(p * 4 + 3);
    }
    cnum = std::move(next);
  }
  std::vector<Int> xs = detail::enumerate_numerators(spec_k, depth_k);

  const int n_scales = m_hi - m_lo + 1;
  std::vector<std::unordered_set<std::uint64_t>> cells(
      static_cast<std::size_t>(n_scales));
  std::vector<long long> section;
  section.reserve(cnum.size() * cnum.size());
  for (const Int& xi_big : xs) {
    const long long xi = static_cast<long long>(xi_big);
    // y = (2 (B - X) C1 + X C2) / (2 B 4^depthC)
    const long long a = 2 * (B - xi), b = xi;
    section.clear();
    for (long long c1 : cnum) {
      const long long base_v = a * c1;
      for (long long c2 : cnum) section.push_back(base_v + b * c2);
    }
    std::sort(section.begin(), section.end());
    for (int m = m_lo; m <= m_hi; ++m) {
      long long pow4m = 1;
      for (int i = 0; i < m; ++i) pow4m *= 4;
      const long long ix = xi * pow4m / B;
      const long long div = den / pow4m;
      auto& set = cells[static_cast<std::size_t>(m - m_lo)];
      long long last_iy = -1;
      for (long long v : section) {
        const long long iy = v / div;
        if (iy != last_iy) {
          set.insert((static_cast<std::uint64_t>(ix) << 32) |
                     static_cast<std::uint64_t>(iy));
          last_iy = iy;
        }
      }
    }
  }
  BoxCountSeries out;
  out.base = 4;
  for (int m = m_lo; m <= m_hi; ++m) {
    out.entries.emplace_back(
        m, static_cast<long long>(
               cells[static_cast<std::size_t>(m - m_lo)].size()));
  }
  return out;
}

// Per-parameter box-dimension estimates of the projected sets.
inline std::vector<ProfilePoint> dimension_profile(
    int depth, const std::vector<Rational>& xs, int m_lo, int m_hi,
    std::int64_t budget = kDefaultBudget, int jobs = 1) {
  if (m_hi < 0) m_hi = depth - 1;
  std::vector<ProfilePoint> rows(xs.size());
  detail::parallel_chunks(
      static_cast<long long>(xs.size()), 1, jobs,
      [&](long long lo, long long hi) {
        for (long long i = lo; i < hi; ++i) {
          const Rational& x = xs[static_cast<std::size_t>(i)];
          PointSet1D section = project_px(x, depth, budget);
          BoxCountSeries series = count_series_1d(section, 4, m_lo, m_hi);
          ProfilePoint row;
          row.x = x;
          row.dim = regress_dim(series);
          row.n_points = static_cast<long long>(section.points.size());
          rows[static_cast<std::size_t>(i)] = std::move(row);
        }
      });
  return rows;
}

}  // namespace cantorlab
