// Finite-depth approximations of digit-restricted Cantor sets, their natural
// measures, and the four-corner planar set. Everything here is exact: points
// and weights are rationals with denominators dividing base^depth.
#pragma once

#include "cantorlab/rational.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

namespace cantorlab {

// A digit-restricted self-similar subset of [0, 1]: the points whose base-b
// expansion uses only the allowed digits.
struct CantorSpec {
  int base = 0;
  std::vector<int> digits;  // strictly increasing, each in [0, base)
};

inline double similarity_dim(const CantorSpec& spec) {
  if (spec.digits.size() <= 1) return 0.0;
  return std::log(static_cast<double>(spec.digits.size())) /
         std::log(static_cast<double>(spec.base));
}

inline CantorSpec make_spec(int base, std::vector<int> digits) {
  if (base < 2) throw ValidationError("make_spec: base must be >= 2");
  if (digits.empty()) throw ValidationError("make_spec: digit list is empty");
  std::sort(digits.begin(), digits.end());
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] < 0 || digits[i] >= base) {
      throw ValidationError("make_spec: digit out of range [0, base)");
    }
    if (i > 0 && digits[i] == digits[i - 1]) {
      throw ValidationError("make_spec: duplicate digit");
    }
  }
  return CantorSpec{base, std::move(digits)};
}

// The base-4 digit set {0, 3}: the standard 1/2-dimensional set C.
inline CantorSpec cantor_c() { return make_spec(4, {0, 3}); }

// The full base-4 digit set; its points at depth n form the uniform 4^-n grid.
inline CantorSpec full_grid_4() { return make_spec(4, {0, 1, 2, 3}); }

struct PointSet1D {
  int depth = 0;
  std::vector<Rational> points;  // strictly increasing
};

struct DiscreteMeasure {
  // (position, weight) pairs; positions strictly increasing, weights > 0
  // summing exactly to 1.
  std::vector<std::pair<Rational, Rational>> atoms;
};

struct PlanarPointSet {
  int depth = 0;
  std::vector<std::pair<Rational, Rational>> points;  // deduplicated
};

namespace detail {

// Numerators of all depth-n points in units of base^-depth, sorted strictly
// increasing. Lexicographic digit order equals numeric order because the
// maximal tail below any level is strictly smaller than one unit of it.
inline std::vector<Int> enumerate_numerators(const CantorSpec& spec,
                                             int depth) {
  std::vector<Int> cur{Int(0)};
  for (int level = 0; level < depth; ++level) {
    std::vector<Int> next;
    next.reserve(cur.size() * spec.digits.size());
    for (const Int& prefix : cur) {
      for (int d : spec.digits) next.push_back(prefix * spec.base + d);
    }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace detail

// All depth-n truncations sum_{j=1..n} d_j base^-j with allowed digits d_j.
inline PointSet1D enumerate_points(const CantorSpec& spec, int depth,
                                   std::int64_t budget = kDefaultBudget) {
  if (depth < 0) throw ValidationError("enumerate_points: depth must be >= 0");
  checked_count(static_cast<std::int64_t>(spec.digits.size()), depth, budget,
                "enumerate_points");
  const Int den = ipow(spec.base, static_cast<unsigned>(depth));
  PointSet1D out;
  out.depth = depth;
  std::vector<Int> nums = detail::enumerate_numerators(spec, depth);
  out.points.reserve(nums.size());
  for (const Int& p : nums) out.points.emplace_back(Rational(p, den));
  return out;
}

// Uniform weights |digits|^-depth on the depth-n points; the depth-n
// truncation of the natural self-similar measure.
inline DiscreteMeasure natural_measure(const CantorSpec& spec, int depth,
                                       std::int64_t budget = kDefaultBudget) {
  PointSet1D pts = enumerate_points(spec, depth, budget);
  const Rational w(Int(1),
                   ipow(static_cast<Int>(spec.digits.size()),
                        static_cast<unsigned>(depth)));
  DiscreteMeasure mu;
  mu.atoms.reserve(pts.points.size());
  for (Rational& p : pts.points) mu.atoms.emplace_back(std::move(p), w);
  return mu;
}

inline DiscreteMeasure dirac_zero() {
  DiscreteMeasure mu;
  mu.atoms.emplace_back(Rational(0), Rational(1));
  return mu;
}

// Atoms transported by t -> t * s (weights unchanged).
inline DiscreteMeasure dilate(const DiscreteMeasure& mu, const Rational& s) {
  DiscreteMeasure out;
  out.atoms.reserve(mu.atoms.size());
  for (const auto& [pos, w] : mu.atoms) out.atoms.emplace_back(pos * s, w);
  if (s < 0) {
    std::reverse(out.atoms.begin(), out.atoms.end());
  }
  return out;
}

// The Cartesian square of the depth-n set C_n; exactly 4^depth points,
// ordered x-major.
inline PlanarPointSet four_corner(int depth,
                                  std::int64_t budget = kDefaultBudget) {
  if (depth < 0) throw ValidationError("four_corner: depth must be >= 0");
  checked_count(4, depth, budget, "four_corner");
  PointSet1D c = enumerate_points(cantor_c(), depth, budget);
  PlanarPointSet out;
  out.depth = depth;
  out.points.reserve(c.points.size() * c.points.size());
  for (const Rational& x : c.points) {
    for (const Rational& y : c.points) out.points.emplace_back(x, y);
  }
  return out;
}

}  // namespace cantorlab
