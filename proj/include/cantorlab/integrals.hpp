// Numerical verification of the estimate chain: block integrals of the
// infinite cosine product, atom-sum pairings of the degree-K polynomial with
// discrete measures, the two-factor block integral behind the energy bound,
// and the tabulation of lhs/envelope ratios.
//
// Oscillatory block integrals use the exact factorization
//   P(4^j s) = P_j(s) * P(s)
// so the fast polynomial part is either integrated exactly against a
// piecewise-sampled slow tail (pest1) or resolved on a uniform grid with
// three-term cosine recurrences (mainest2, energy). Quadrature results carry
// an error estimate; summation orders are fixed so results are identical for
// any worker count.
#pragma once

#include "cantorlab/digit_sets.hpp"
#include "cantorlab/rational.hpp"
#include "cantorlab/spectral.hpp"

#include <atomic>
#include <cmath>
#include <string>
#include <thread>
#include <vector>

namespace cantorlab {

struct Constants {
  double c;        // log(8/3) / log(16)
  double c_prime;  // log(32/5) / (6 log 2)
};

inline Constants constants() {
  Constants k{};
  k.c = std::log(8.0 / 3.0) / std::log(16.0);
  k.c_prime = std::log(32.0 / 5.0) / (6.0 * std::log(2.0));
  // sanity: 16^c = 8/3 forces 4^(1-c) = sqrt(6)
  if (std::abs(std::pow(4.0, 1.0 - k.c) - std::sqrt(6.0)) > 1e-12) {
    throw std::runtime_error("constants: 4^(1-c) != sqrt(6)");
  }
  return k;
}

struct VerificationRow {
  int K = 0;
  double lhs = 0.0;
  double envelope = 1.0;
  double ratio = 0.0;
  std::string method;   // "exact" | "atom-sum" | "spectral" | "quadrature"
  double error = 0.0;   // error estimate for quadrature rows, else 0
};

struct QuadEstimate {
  double value = 0.0;
  double error = 0.0;
};

namespace detail {

inline void parallel_chunks(long long total, long long chunk, int jobs,
                            const std::function<void(long long, long long)>& fn) {
  if (jobs <= 1 || total <= chunk) {
    for (long long lo = 0; lo < total; lo += chunk) {
      fn(lo, std::min(total, lo + chunk));
    }
    return;
  }
  std::atomic<long long> next{0};
  auto worker = [&]() {
    for (;;) {
      const long long idx = next.fetch_add(1);
      const long long lo = idx * chunk;
      if (lo >= total) return;
      fn(lo, std::min(total, lo + chunk));
    }
  };
  std::vector<std::thread> pool;
  const int n = std::min<long long>(jobs, (total + chunk - 1) / chunk);
  pool.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

// Angular coefficients (radians per unit sigma) of the truncated product
// |lambda_hat(c * 4^K sigma)|^2 = prod_{k=1..K+m} cos^2(3 pi c 4^{K-k} sigma).
// Levels whose angle stays below ~1e-7 over sigma in [lo, hi] are dropped;
// their factors differ from 1 by less than 1e-14 each.
inline std::vector<double> level_omegas(double c, int K, int m, double hi) {
  std::vector<double> omegas;
  omegas.reserve(static_cast<std::size_t>(K + m));
  for (int k = 1; k <= K + m; ++k) {
    const double w = 3.0 * M_PI * c * std::pow(4.0, K - k);
    if (std::abs(w) * hi < 1e-7) break;  // decreasing in k
    omegas.push_back(w);
  }
  return omegas;
}

// Multiplies target[j] (j in [j0, j1)) by prod_k cos^2(omega_k sigma_j) or
// accumulates weight * product into target, using three-term cosine
// recurrences seeded at j0.
struct CosProductSweep {
  const std::vector<double>& omegas;
  double sigma0, h;
  std::vector<double> two_cos, prev, cur;

  CosProductSweep(const std::vector<double>& om, double s0, double step,
                  long long j0)
      : omegas(om), sigma0(s0), h(step) {
    const std::size_t L = omegas.size();
    two_cos.resize(L);
    prev.resize(L);
    cur.resize(L);
    const double s_at = sigma0 + static_cast<double>(j0) * h;
    for (std::size_t l = 0; l < L; ++l) {
      two_cos[l] = 2.0 * std::cos(omegas[l] * h);
      cur[l] = std::cos(omegas[l] * s_at);
      prev[l] = std::cos(omegas[l] * (s_at - h));
    }
  }

  double product_and_advance() {
    double p = 1.0;
    for (std::size_t l = 0; l < omegas.size(); ++l) {
      const double c = cur[l];
      p *= c * c;
      const double nxt = two_cos[l] * c - prev[l];
      prev[l] = c;
      cur[l] = nxt;
    }
    return p;
  }
};

// Composite-Simpson reduction with an embedded coarse grid (every other
// node); the difference of the two rules gives the error estimate for free.
struct SimpsonBins {
  double ends = 0.0, odd = 0.0, two_mod4 = 0.0, zero_mod4 = 0.0;

  void add(long long j, long long n_sub, double v) {
    if (j == 0 || j == n_sub) {
      ends += v;
    } else if (j % 2 == 1) {
      odd += v;
    } else if (j % 4 == 2) {
      two_mod4 += v;
    } else {
      zero_mod4 += v;
    }
  }

  QuadEstimate reduce(double h) const {
    const double fine =
        h / 3.0 * (ends + 4.0 * odd + 2.0 * (two_mod4 + zero_mod4));
    const double coarse =
        2.0 * h / 3.0 * (ends + 4.0 * two_mod4 + 2.0 * zero_mod4);
    return {fine, std::abs(fine - coarse) / 15.0};
  }
};

inline long long auto_block_nodes(int K) {
  // ~8 nodes per period of the fastest cos^2 factor over sigma in [1, 4]
  long long n = 512;
  const long long want = 18LL << (2 * K);
  n = std::max(n, want);
  n = std::min(n, 1LL << 22);
  return (n + 3) / 4 * 4;
}

}  // namespace detail

// --- Spectral pairing with the Cantor-Lebesgue measure ----------------------

// sum over the polynomial's spectrum of a_n conj(lambda_hat(n)), each factor
// of the transform truncated to tolerance tol.
inline double integrate_pk_dlambda(int K, double tol,
                                   std::int64_t budget = kDefaultBudget) {
  TrigPolynomial c = pk_coefficients(K, budget);
  return integrate_against(
      c, [tol](long long n) { return lambda_hat_int(n, tol); });
}

// Independent route: exact atom sum against the depth-n truncation of the
// measure.
inline double integrate_pk_dlambda_atoms(int K, int depth,
                                         std::int64_t budget = kDefaultBudget) {
  DiscreteMeasure mu = natural_measure(cantor_c(), depth, budget);
  double acc = 0.0;
  for (const auto& [pos, w] : mu.atoms) {
    acc += to_double(w) * pk_eval(K, to_double(pos));
  }
  return acc;
}

// --- Atom-sum pairings -------------------------------------------------------

// Exact atom sum of the degree-K polynomial against mu (stable product form).
inline double est2_value(int K, const DiscreteMeasure& mu) {
  double acc = 0.0;
  for (const auto& [pos, w] : mu.atoms) {
    acc += to_double(w) * pk_eval(K, to_double(pos));
  }
  return acc;
}

// Atom sum of the truncated infinite product at dilation s, 4^K <= s <=
// 4^{K+2}. With tail_depth = K the truncation is exactly the degree-K
// polynomial part, which is the substitution step of the chain.
inline double pest2_value(int K, double s, const DiscreteMeasure& mu,
                          int tail_depth) {
  const double lo = std::pow(4.0, K), hi = std::pow(4.0, K + 2);
  if (!(s >= lo && s <= hi)) {
    throw ValidationError("pest2_value: s outside [4^K, 4^{K+2}]");
  }
  double acc = 0.0;
  for (const auto& [pos, w] : mu.atoms) {
    acc += to_double(w) * tail_product(to_double(pos) * s, tail_depth);
  }
  return acc;
}

// --- Block integrals of the infinite product ---------------------------------

namespace detail {

// 4^j * int_{sigma_lo}^{sigma_hi} P_j(sigma) T(sigma) dsigma where T is the
// tail product truncated at tail_depth factors. The polynomial part is
// integrated exactly (antiderivative per subinterval); the slowly varying
// tail is sampled at subinterval midpoints. The returned error bound is
// rigorous: Lip(T) * h/2 per subinterval plus the tail truncation defect.
inline QuadEstimate block_integral_p(int j, double sigma_lo, double sigma_hi,
                                     int tail_depth, long long midpoints,
                                     std::int64_t budget = kDefaultBudget) {
  if (midpoints < 1) throw ValidationError("block_integral_p: midpoints < 1");
  TrigPolynomial poly = pk_coefficients(j, budget);
  const double h = (sigma_hi - sigma_lo) / static_cast<double>(midpoints);
  const double a0 = to_double(poly.constant_term());

  // per-subinterval exact integrals of P_j
  std::vector<double> delta(static_cast<std::size_t>(midpoints), a0 * h);
  for (auto it = poly.coeffs().upper_bound(0); it != poly.coeffs().end();
       ++it) {
    const double n = static_cast<double>(it->first);
    const double cn = 2.0 * to_double(it->second);  // a_n + a_{-n}
    const double w = 2.0 * M_PI * n;
    const double cd = std::cos(w * h), sd = std::sin(w * h);
    double cs = std::cos(w * sigma_lo), sn = std::sin(w * sigma_lo);
    const double scale = cn / (M_PI * n);
    for (long long i = 0; i < midpoints; ++i) {
      const double c_next = cs * cd - sn * sd;
      const double s_next = sn * cd + cs * sd;
      delta[static_cast<std::size_t>(i)] += scale * 0.5 * (s_next - sn);
      cs = c_next;
      sn = s_next;
    }
  }

  double value = 0.0, abs_delta = 0.0;
  for (long long i = 0; i < midpoints; ++i) {
    const double mid = sigma_lo + (static_cast<double>(i) + 0.5) * h;
    const double t = tail_product(mid, tail_depth);
    value += t * delta[static_cast<std::size_t>(i)];
    abs_delta += std::abs(delta[static_cast<std::size_t>(i)]);
  }
  // Lip(T) <= sum_{k<=m} 2 pi 4^-k < 2 pi / 3
  const double lip = 2.0 * M_PI * (1.0 - std::pow(0.25, tail_depth)) / 3.0;
  const double tail_defect = tail_product_error_bound(sigma_hi, tail_depth);
  double err = (h / 2.0) * lip * abs_delta + tail_defect * abs_delta +
               1e-12 * std::abs(value);
  const double scale4 = std::pow(4.0, j);
  return {scale4 * value, scale4 * err};
}

}  // namespace detail

// Factorized block integral int_{4^K}^{4^{K+1}} P(s) ds = 4^K int_1^4
// P_K(sigma) P(sigma) dsigma; the spelled-out form of the chain's first
// estimate. quad_points counts the tail-sampling subintervals.
inline QuadEstimate pest1_value(int K, int tail_depth, long long quad_points) {
  if (K < 1) throw ValidationError("pest1_value: K must be >= 1");
  return detail::block_integral_p(K, 1.0, 4.0, tail_depth, quad_points);
}

// Direct Simpson quadrature of the truncated product over [4^K, 4^{K+1}];
// the independent cross-check path (cost grows like 4^K).
inline QuadEstimate pest1_direct(int K, int tail_depth, long long quad_points) {
  if (K < 1) throw ValidationError("pest1_direct: K must be >= 1");
  if (K > 8) throw BudgetError("pest1_direct: K > 8");
  long long n = std::max<long long>(quad_points, 64);
  n = (n + 3) / 4 * 4;
  const double lo = std::pow(4.0, K), hi = std::pow(4.0, K + 1);
  const double h = (hi - lo) / static_cast<double>(n);
  const int m = K + tail_depth;
  detail::SimpsonBins bins;
  for (long long j = 0; j <= n; ++j) {
    const double s = lo + static_cast<double>(j) * h;
    bins.add(j, n, tail_product(s, m));
  }
  QuadEstimate q = bins.reduce(h);
  q.error += tail_product_error_bound(hi, m) * std::abs(q.value);
  return q;
}

// --- The two-factor block integral (outer estimate) --------------------------

namespace detail {

// Composite Simpson over sigma in [1, 4] of
//   extra(sigma) * |L(4^K sigma)|^2 * sum_i w_i |L(t_i 4^K sigma)|^2
// where |L(s)|^2 is the truncated squared transform and extra is a slow
// power factor (4^K sigma)^p. Deterministic for any job count: each node is
// written by exactly one chunk and atoms accumulate in index order.
inline QuadEstimate two_factor_block(int K,
                                     const std::vector<double>& atom_pos,
                                     const std::vector<double>& atom_w,
                                     double extra_exponent, long long n_sub,
                                     int tail_depth, int jobs) {
  const long long n = std::max<long long>(8, (n_sub + 3) / 4 * 4);
  const double h = 3.0 / static_cast<double>(n);
  const double four_k = std::pow(4.0, K);
  std::vector<double> f_arr(static_cast<std::size_t>(n + 1));
  std::vector<double> g_arr(static_cast<std::size_t>(n + 1), 0.0);

  const std::vector<double> omegas_f = level_omegas(1.0, K, tail_depth, 4.0);
  constexpr long long kChunk = 8192;

  parallel_chunks(n + 1, kChunk, jobs, [&](long long j0, long long j1) {
    // |lambda_hat|^2 factor times the slow extra factor
    CosProductSweep sweep_f(omegas_f, 1.0, h, j0);
    for (long long j = j0; j < j1; ++j) {
      const double sigma = 1.0 + static_cast<double>(j) * h;
      double v = sweep_f.product_and_advance();
      if (extra_exponent != 0.0) v *= std::pow(four_k * sigma, extra_exponent);
      f_arr[static_cast<std::size_t>(j)] = v;
    }
    // inner atom sum, atoms in fixed order
    for (std::size_t i = 0; i < atom_pos.size(); ++i) {
      const std::vector<double> om =
          level_omegas(atom_pos[i], K, tail_depth, 4.0);
      if (om.empty()) {
        for (long long j = j0; j < j1; ++j) {
          g_arr[static_cast<std::size_t>(j)] += atom_w[i];
        }
        continue;
      }
      CosProductSweep sweep(om, 1.0, h, j0);
      for (long long j = j0; j < j1; ++j) {
        g_arr[static_cast<std::size_t>(j)] +=
            atom_w[i] * sweep.product_and_advance();
      }
    }
  });

  detail::SimpsonBins bins;
  for (long long j = 0; j <= n; ++j) {
    bins.add(j, n,
             f_arr[static_cast<std::size_t>(j)] *
                 g_arr[static_cast<std::size_t>(j)]);
  }
  QuadEstimate q = bins.reduce(h);
  q.value *= four_k;
  q.error *= four_k;
  // truncated tail factors: relative defect per source is (12 pi c)^2 16^-m/15
  const double tail_rel = 2.0 * std::pow(12.0 * M_PI, 2) *
                          std::pow(16.0, -tail_depth) / 15.0;
  q.error += std::abs(q.value) * tail_rel;
  return q;
}

}  // namespace detail

// Outer quadrature of |lambda_hat(s)|^2 times the atom sum of
// |lambda_hat(t s)|^2 over the block [4^K, 4^{K+1}]. quad_points = 0 picks
// the oscillation-resolving default.
inline QuadEstimate mainest2_value(int K, const DiscreteMeasure& mu,
                                   long long quad_points = 0,
                                   int tail_depth = 8, int jobs = 1) {
  if (K < 1) throw ValidationError("mainest2_value: K must be >= 1");
  std::vector<double> pos, w;
  pos.reserve(mu.atoms.size());
  w.reserve(mu.atoms.size());
  for (const auto& [p, q] : mu.atoms) {
    pos.push_back(to_double(p));
    w.push_back(to_double(q));
  }
  const long long n =
      quad_points > 0 ? quad_points : detail::auto_block_nodes(K);
  return detail::two_factor_block(K, pos, w, 0.0, n, tail_depth, jobs);
}

// Same outer integral with the inner measure replaced by Lebesgue measure on
// [0, 1] (the exact alpha' = 1 member of the family). Uses
//   int_0^1 |L(t s)|^2 dt = Phi(3s/2) / (3s/2),  Phi(w) = int_0^w P,
// with Phi marched along the same grid as the outer quadrature.
inline QuadEstimate mainest2_lebesgue(int K, long long quad_points = 0,
                                      int tail_depth = 8) {
  if (K < 1) throw ValidationError("mainest2_lebesgue: K must be >= 1");
  const double w_lo = 1.5 * std::pow(4.0, K);
  const double w_hi = 6.0 * std::pow(4.0, K);

  // Phi(w_lo): unit interval + full blocks + the partial block [4^K, 1.5 4^K]
  double phi = 0.0, phi_err = 0.0;
  {
    detail::SimpsonBins bins;
    const long long n0 = 512;
    const double h0 = 1.0 / static_cast<double>(n0);
    for (long long j = 0; j <= n0; ++j) {
      bins.add(j, n0, tail_product(static_cast<double>(j) * h0, tail_depth + K));
    }
    QuadEstimate q = bins.reduce(h0);
    phi += q.value;
    phi_err += q.error;
  }
  for (int j = 0; j < K; ++j) {
    QuadEstimate q = detail::block_integral_p(j, 1.0, 4.0, tail_depth + K - j,
                                              2048);
    phi += q.value;
    phi_err += q.error;
  }
  {
    QuadEstimate q = detail::block_integral_p(K, 1.0, 1.5, tail_depth, 2048);
    phi += q.value;
    phi_err += q.error;
  }

  // march w over [1.5 4^K, 6 4^K]: running Phi (trapezoid) and Simpson bins
  // of P(w) Phi(w) / w
  long long n = quad_points > 0 ? quad_points : detail::auto_block_nodes(K);
  n = std::max<long long>(n, 512);
  n = (n + 3) / 4 * 4;
  const double h = (w_hi - w_lo) / static_cast<double>(n);
  // levels of P(w) for w up to 6 4^K: k = 1 .. K+2+tail
  std::vector<double> omegas;
  for (int k = 1; k <= K + 2 + tail_depth; ++k) {
    const double om = 2.0 * M_PI * std::pow(4.0, -k);
    if (om * w_hi < 1e-7) break;
    omegas.push_back(om);
  }
  detail::SimpsonBins bins;
  double p_prev = 0.0;
  constexpr long long kChunk = 8192;
  for (long long j0 = 0; j0 <= n; j0 += kChunk) {
    const long long j1 = std::min<long long>(n + 1, j0 + kChunk);
    detail::CosProductSweep sweep(omegas, w_lo, h, j0);
    for (long long j = j0; j < j1; ++j) {
      const double w = w_lo + static_cast<double>(j) * h;
      const double pv = sweep.product_and_advance();
      if (j > 0) phi += 0.5 * h * (p_prev + pv);
      p_prev = pv;
      bins.add(j, n, pv * phi / w);
    }
  }
  QuadEstimate q = bins.reduce(h);
  q.value *= 2.0 / 3.0;
  q.error = (2.0 / 3.0) * q.error + phi_err * std::log(4.0) +
            std::abs(q.value) * 1e-9;
  return q;
}

// Partial sums over 4-adic blocks of the energy integrand
// s^{tau-1} |lambda_hat(s)|^2 int |lambda_hat(t s)|^2 d mu(t); entry J is the
// cumulative sum of blocks K = 1..J, so decay of the increments is visible.
inline std::vector<double> energy_integral(double tau,
                                           const DiscreteMeasure& mu,
                                           int K_max,
                                           long long quad_points = 0,
                                           int tail_depth = 8, int jobs = 1) {
  if (!(tau > 0.0 && tau < 1.0)) {
    throw ValidationError("energy_integral: tau must be in (0, 1)");
  }
  if (K_max < 1) throw ValidationError("energy_integral: K_max must be >= 1");
  std::vector<double> pos, w;
  for (const auto& [p, q] : mu.atoms) {
    pos.push_back(to_double(p));
    w.push_back(to_double(q));
  }
  std::vector<double> cum;
  cum.reserve(static_cast<std::size_t>(K_max));
  double acc = 0.0;
  for (int K = 1; K <= K_max; ++K) {
    const long long n =
        quad_points > 0 ? quad_points : detail::auto_block_nodes(K);
    QuadEstimate q =
        detail::two_factor_block(K, pos, w, tau - 1.0, n, tail_depth, jobs);
    acc += q.value;
    cum.push_back(acc);
  }
  return cum;
}

// --- Tabulation ---------------------------------------------------------------

enum class EstimateId {
  kPest1,
  kPest2,
  kEst2,
  kMainest2,
  kPkDlambda,
  kEq10Failure,
};

inline const char* estimate_name(EstimateId id) {
  switch (id) {
    case EstimateId::kPest1: return "pest1";
    case EstimateId::kPest2: return "pest2";
    case EstimateId::kEst2: return "est2";
    case EstimateId::kMainest2: return "mainest2";
    case EstimateId::kPkDlambda: return "pk-dlambda";
    case EstimateId::kEq10Failure: return "eq10-failure";
  }
  return "?";
}

inline EstimateId parse_estimate(const std::string& s) {
  if (s == "pest1") return EstimateId::kPest1;
  if (s == "pest2") return EstimateId::kPest2;
  if (s == "est2") return EstimateId::kEst2;
  if (s == "mainest2") return EstimateId::kMainest2;
  if (s == "pk-dlambda") return EstimateId::kPkDlambda;
  if (s == "eq10-failure") return EstimateId::kEq10Failure;
  throw ValidationError("unknown estimate id: " + s);
}

// A measure together with the Frostman exponent its envelope uses. The exact
// Lebesgue member has no atoms; est2/mainest2 use analytic fast paths for it.
struct MeasureFamily {
  std::string label;
  DiscreteMeasure atoms;
  double alpha_prime = 1.0;
  bool exact_lebesgue = false;
};

inline MeasureFamily cantor_family(int depth,
                                   std::int64_t budget = kDefaultBudget) {
  return {"cantor", natural_measure(cantor_c(), depth, budget), 0.5, false};
}

inline MeasureFamily grid_family(int depth,
                                 std::int64_t budget = kDefaultBudget) {
  return {"grid", natural_measure(full_grid_4(), depth, budget), 1.0, false};
}

inline MeasureFamily lebesgue_family() {
  return {"lebesgue", DiscreteMeasure{}, 1.0, true};
}

inline MeasureFamily dirac_family() {
  return {"dirac", dirac_zero(), 1.0, false};
}

// General digit-set family: alpha' = log |digits| / log base.
inline MeasureFamily digit_family(const CantorSpec& spec, int depth,
                                  std::int64_t budget = kDefaultBudget) {
  return {"digits", natural_measure(spec, depth, budget),
          similarity_dim(spec), false};
}

struct VerifyOptions {
  MeasureFamily measure = cantor_family(10);
  double s0 = 1.0;           // pest2 dilation: s = s0 * 4^K, 1 <= s0 <= 16
  double tol = 1e-12;        // transform truncation tolerance
  long long quad_points = 0; // 0 = oscillation-resolving default
  int tail_depth = 0;        // 0 = per-estimate default
  int jobs = 1;
  std::int64_t budget = kDefaultBudget;
};

// One row per K; rows are independent and deterministic.
inline std::vector<VerificationRow> verify_sequence(EstimateId id, int k_lo,
                                                    int k_hi,
                                                    const VerifyOptions& opt) {
  if (k_lo > k_hi) throw ValidationError("verify_sequence: empty K range");
  const Constants cs = constants();
  const double ap = opt.measure.alpha_prime;
  std::vector<VerificationRow> rows;
  rows.reserve(static_cast<std::size_t>(k_hi - k_lo + 1));
  for (int K = k_lo; K <= k_hi; ++K) {
    VerificationRow row;
    row.K = K;
    switch (id) {
      case EstimateId::kPest1: {
        const int m = opt.tail_depth > 0 ? opt.tail_depth : 12;
        const long long q = opt.quad_points > 0 ? opt.quad_points : 2048;
        QuadEstimate v = pest1_value(K, m, q);
        row.lhs = v.value;
        row.error = v.error;
        row.envelope = std::pow(4.0, 0.5 * K);
        row.method = "quadrature";
        break;
      }
      case EstimateId::kPest2: {
        if (!(opt.s0 >= 1.0 && opt.s0 <= 16.0)) {
          throw ValidationError("verify_sequence: pest2 s0 must be in [1,16]");
        }
        const int m = opt.tail_depth > 0 ? opt.tail_depth : K + 10;
        row.lhs = pest2_value(K, opt.s0 * std::pow(4.0, K),
                              opt.measure.atoms, m);
        row.envelope =
            std::pow(std::sqrt(6.0) * std::pow(4.0, -0.5 * (1.0 + ap)), K);
        row.method = "atom-sum";
        break;
      }
      case EstimateId::kEst2: {
        if (opt.measure.exact_lebesgue) {
          row.lhs = std::pow(0.5, K);  // exact mean of the polynomial
          row.method = "exact";
        } else {
          row.lhs = est2_value(K, opt.measure.atoms);
          row.method = "atom-sum";
        }
        row.envelope =
            std::pow(std::sqrt(6.0) * std::pow(4.0, -0.5 * (1.0 + ap)), K);
        break;
      }
      case EstimateId::kMainest2: {
        const int m = opt.tail_depth > 0 ? opt.tail_depth : 8;
        QuadEstimate v =
            opt.measure.exact_lebesgue
                ? mainest2_lebesgue(K, opt.quad_points, m)
                : mainest2_value(K, opt.measure.atoms, opt.quad_points, m,
                                 opt.jobs);
        row.lhs = v.value;
        row.error = v.error;
        row.envelope = std::pow(std::pow(4.0, 1.0 - cs.c - 0.5 * ap), K);
        row.method = "quadrature";
        break;
      }
      case EstimateId::kPkDlambda: {
        row.lhs = integrate_pk_dlambda(K, opt.tol, opt.budget);
        row.envelope = std::pow(0.75, K);
        row.method = "spectral";
        break;
      }
      case EstimateId::kEq10Failure: {
        row.lhs = integrate_pk_dlambda(K, opt.tol, opt.budget);
        row.envelope = std::pow(std::pow(2.0, -ap), K);
        row.method = "spectral";
        break;
      }
    }
    row.ratio = row.lhs / row.envelope;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace cantorlab
