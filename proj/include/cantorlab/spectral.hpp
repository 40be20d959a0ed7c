// Fourier-side machinery: the transform of the Cantor-Lebesgue measure, the
// infinite cosine-squared product and its degree-K polynomial part, exact
// Fourier coefficients via signed-digit representation counting, and exact
// L^p norms via coefficient convolution.
#pragma once

#include "cantorlab/rational.hpp"

#include <cmath>
#include <complex>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cantorlab {

// A finitely supported map from integer frequencies to exact rational
// coefficients; represents sum_n a_n e^{2 pi i n s}.
class TrigPolynomial {
public:
  using Map = std::map<long long, Rational>;

  TrigPolynomial() = default;

  // Builds from (frequency, coefficient) pairs sorted by frequency.
  static TrigPolynomial from_sorted(
      std::vector<std::pair<long long, Rational>> terms) {
    TrigPolynomial p;
    for (auto& [n, a] : terms) {
      if (a != 0) p.coeffs_.emplace_hint(p.coeffs_.end(), n, std::move(a));
    }
    return p;
  }

  static TrigPolynomial unit() {
    TrigPolynomial p;
    p.coeffs_.emplace(0, Rational(1));
    return p;
  }

  void set(long long n, Rational a) {
    if (a == 0) {
      coeffs_.erase(n);
    } else {
      coeffs_[n] = std::move(a);
    }
  }

  Rational at(long long n) const {
    auto it = coeffs_.find(n);
    return it == coeffs_.end() ? Rational(0) : it->second;
  }

  const Map& coeffs() const { return coeffs_; }
  std::size_t support_size() const { return coeffs_.size(); }
  bool empty() const { return coeffs_.empty(); }

  Rational constant_term() const { return at(0); }

  // Value at s = 0, i.e. the plain sum of coefficients.
  Rational coefficient_sum() const {
    Rational s(0);
    for (const auto& [n, a] : coeffs_) s += a;
    return s;
  }

  bool is_real_even() const {
    for (const auto& [n, a] : coeffs_) {
      if (n > 0 && at(-n) != a) return false;
    }
    return true;
  }

  // Real part of the value at s; equals the full value for real-even
  // polynomials (the only kind produced here).
  double eval_real(double s) const {
    double acc = to_double(at(0));
    for (auto it = coeffs_.upper_bound(0); it != coeffs_.end(); ++it) {
      const double pair_coeff = to_double(it->second + at(-it->first));
      acc += pair_coeff *
             std::cos(2.0 * M_PI * static_cast<double>(it->first) * s);
    }
    return acc;
  }

private:
  Map coeffs_;
};

// One signed-digit string n = sum_k delta_k 4^k with delta_k in {-2, 0, 2}.
struct RepDigits {
  int K = 0;
  std::vector<int> delta;
};

// Extracts the unique representation of n over {-2, 0, 2} digits if one
// exists. Greedy and deterministic: a digit of +-2 is resolved by requiring
// the remaining quotient to be even (digit strings only represent even
// values), and exactly one of the two candidate quotients is even.
inline std::optional<RepDigits> rep_digits(long long n, int K) {
  if (K < 0) throw ValidationError("rep_digits: K must be >= 0");
  RepDigits rep;
  rep.K = K;
  rep.delta.assign(static_cast<std::size_t>(K), 0);
  long long m = n;
  for (int k = 0; k < K; ++k) {
    const long long r = ((m % 4) + 4) % 4;
    if (r == 0) {
      rep.delta[static_cast<std::size_t>(k)] = 0;
      m /= 4;
    } else if (r == 2) {
      const long long q_plus = (m - 2) / 4;
      if (q_plus % 2 == 0) {
        rep.delta[static_cast<std::size_t>(k)] = 2;
        m = q_plus;
      } else {
        rep.delta[static_cast<std::size_t>(k)] = -2;
        m = q_plus + 1;  // (m + 2) / 4
      }
    } else {
      return std::nullopt;  // odd residue: not representable
    }
  }
  if (m != 0) return std::nullopt;
  return rep;
}

// Number of zero digits in the representation; the coefficient at n is
// 2^{zeros} / 4^K.
inline int zero_digit_count(const RepDigits& rep) {
  int s = 0;
  for (int d : rep.delta) {
    if (d == 0) ++s;
  }
  return s;
}

// Exhaustive count of sign-pair tuples (eps, eps') in {-1,1}^K x {-1,1}^K
// with sum (eps_k + eps'_k) 4^k = n. Independent of rep_digits by design;
// used as the counting oracle.
inline long long brute_force_rep_count(long long n, int K) {
  if (K < 0) throw ValidationError("brute_force_rep_count: K must be >= 0");
  if (K > 8) throw BudgetError("brute_force_rep_count: K > 8");
  std::vector<long long> pow4(static_cast<std::size_t>(K));
  long long p = 1;
  for (int k = 0; k < K; ++k, p *= 4) pow4[static_cast<std::size_t>(k)] = p;
  const long long tuples = p;  // 4^K
  long long count = 0;
  for (long long e = 0; e < tuples; ++e) {
    long long sum = 0, t = e;
    for (int k = 0; k < K; ++k, t >>= 2) {
      // two bits encode (eps_k, eps'_k); eps_k + eps'_k in {-2, 0, 0, 2}
      switch (t & 3) {
        case 0: sum -= 2 * pow4[static_cast<std::size_t>(k)]; break;
        case 3: sum += 2 * pow4[static_cast<std::size_t>(k)]; break;
        default: break;
      }
    }
    if (sum == n) ++count;
  }
  return count;
}

// Fourier coefficients of prod_{l<K} cos^2(2 pi 4^l s): support is the set of
// signed-digit representable frequencies, coefficient 2^{zeros(n)} / 4^K.
inline TrigPolynomial pk_coefficients(int K,
                                      std::int64_t budget = kDefaultBudget) {
  if (K < 0) throw ValidationError("pk_coefficients: K must be >= 0");
  checked_count(3, K, budget, "pk_coefficients");
  std::vector<std::pair<long long, long long>> terms{{0, 1}};  // (freq, r)
  long long pow4 = 1;
  for (int l = 0; l < K; ++l, pow4 *= 4) {
    std::vector<std::pair<long long, long long>> next;
    next.reserve(terms.size() * 3);
    for (const auto& [f, r] : terms) {
      next.emplace_back(f - 2 * pow4, r);
      next.emplace_back(f, 2 * r);
      next.emplace_back(f + 2 * pow4, r);
    }
    terms = std::move(next);
  }
  std::sort(terms.begin(), terms.end());
  const Int den = ipow(Int(4), static_cast<unsigned>(K));
  std::vector<std::pair<long long, Rational>> out;
  out.reserve(terms.size());
  for (const auto& [f, r] : terms) out.emplace_back(f, Rational(r, den));
  return TrigPolynomial::from_sorted(std::move(out));
}

namespace detail {

struct IntegerPoly {
  Int den;  // common denominator
  std::vector<std::pair<long long, Int>> terms;  // sorted by frequency
};

inline IntegerPoly to_integer_poly(const TrigPolynomial& p) {
  IntegerPoly ip;
  ip.den = 1;
  for (const auto& [n, a] : p.coeffs()) {
    ip.den = lcm(ip.den, Int(denominator(a)));
  }
  ip.terms.reserve(p.support_size());
  for (const auto& [n, a] : p.coeffs()) {
    ip.terms.emplace_back(n, numerator(a) * (ip.den / denominator(a)));
  }
  return ip;
}

inline Int max_abs_num(const IntegerPoly& p) {
  Int m = 0;
  for (const auto& [n, v] : p.terms) {
    if (abs(v) > m) m = abs(v);
  }
  return m;
}

}  // namespace detail

// Exact coefficient convolution (the product polynomial). Work is |a| * |b|
// coefficient pairs; the dense accumulator path is used when products are
// provably within int64 range, which covers all P_K powers in scope.
inline TrigPolynomial trigpoly_convolve(const TrigPolynomial& a,
                                        const TrigPolynomial& b,
                                        std::int64_t budget = kDefaultBudget) {
  if (a.empty() || b.empty()) return TrigPolynomial{};
  const std::int64_t sa = static_cast<std::int64_t>(a.support_size());
  const std::int64_t sb = static_cast<std::int64_t>(b.support_size());
  constexpr std::int64_t kWorkLimit = std::int64_t{1} << 28;
  if (sa > kWorkLimit / sb) {
    throw BudgetError("trigpoly_convolve: pair count exceeds work limit");
  }
  detail::IntegerPoly ia = detail::to_integer_poly(a);
  detail::IntegerPoly ib = detail::to_integer_poly(b);
  const long long lo =
      ia.terms.front().first + ib.terms.front().first;
  const long long hi = ia.terms.back().first + ib.terms.back().first;
  const long long span = hi - lo + 1;
  if (span > budget && sa * sb > budget) {
    throw BudgetError("trigpoly_convolve: support budget exceeded");
  }
  const Int den = ia.den * ib.den;
  std::vector<std::pair<long long, Rational>> out;

  const Int bound = detail::max_abs_num(ia) * detail::max_abs_num(ib) *
                    std::min(sa, sb);
  const bool fits_i64 = bound < (Int(1) << 62);
  if (fits_i64 && span <= (std::int64_t{1} << 23)) {
    std::vector<long long> acc(static_cast<std::size_t>(span), 0);
    std::vector<std::pair<long long, long long>> fa, fb;
    fa.reserve(ia.terms.size());
    fb.reserve(ib.terms.size());
    for (const auto& [n, v] : ia.terms)
      fa.emplace_back(n, v.convert_to<long long>());
    for (const auto& [n, v] : ib.terms)
      fb.emplace_back(n, v.convert_to<long long>());
    for (const auto& [na, va] : fa) {
      for (const auto& [nb, vb] : fb) {
        acc[static_cast<std::size_t>(na + nb - lo)] += va * vb;
      }
    }
    for (long long i = 0; i < span; ++i) {
      const long long v = acc[static_cast<std::size_t>(i)];
      if (v != 0) out.emplace_back(lo + i, Rational(Int(v), den));
    }
  } else {
    std::map<long long, Int> acc;
    for (const auto& [na, va] : ia.terms) {
      for (const auto& [nb, vb] : ib.terms) {
        acc[na + nb] += va * vb;
      }
    }
    for (const auto& [n, v] : acc) {
      if (v != 0) out.emplace_back(n, Rational(v, den));
    }
  }
  return TrigPolynomial::from_sorted(std::move(out));
}

// Exact e-fold power by repeated convolution (binary exponentiation).
inline TrigPolynomial trigpoly_power(const TrigPolynomial& p, int e,
                                     std::int64_t budget = kDefaultBudget) {
  if (e < 1) throw ValidationError("trigpoly_power: exponent must be >= 1");
  TrigPolynomial result = TrigPolynomial::unit();
  TrigPolynomial base = p;
  int k = e;
  while (k > 0) {
    if (k & 1) {
      result = (result.support_size() == 1 && result.at(0) == 1)
                   ? base
                   : trigpoly_convolve(result, base, budget);
    }
    k >>= 1;
    if (k > 0) base = trigpoly_convolve(base, base, budget);
  }
  return result;
}

// Constant term of a * b, i.e. sum_n a_n b_{-n}; exact.
inline Rational trigpoly_dot_constant(const TrigPolynomial& a,
                                      const TrigPolynomial& b) {
  const TrigPolynomial& small = a.support_size() <= b.support_size() ? a : b;
  const TrigPolynomial& big = a.support_size() <= b.support_size() ? b : a;
  Rational acc(0);
  for (const auto& [n, v] : small.coeffs()) {
    const Rational w = big.at(-n);
    if (w != 0) acc += v * w;
  }
  return acc;
}

// Exact integral over one period of the p-th power of the degree-K product:
// the constant term of the p-fold coefficient convolution, computed as a dot
// product of two half powers.
inline Rational pk_lp_norm_exact(int K, int p,
                                 std::int64_t budget = kDefaultBudget) {
  if (p < 1) throw ValidationError("pk_lp_norm_exact: p must be >= 1");
  TrigPolynomial c = pk_coefficients(K, budget);
  if (p == 1) return c.constant_term();
  const int q1 = p / 2;
  const int q2 = p - q1;
  TrigPolynomial A = trigpoly_power(c, q1, budget);
  if (q1 == q2) return trigpoly_dot_constant(A, A);
  TrigPolynomial B = trigpoly_power(c, q2, budget);
  return trigpoly_dot_constant(A, B);
}

// --- Infinite products -----------------------------------------------------

// frac(|x|) without precision loss: multiplications by 4 and floors are exact
// in binary floating point for |x| < 2^52.
namespace detail {
inline double frac_abs(double x) {
  const double a = std::abs(x);
  return a - std::floor(a);
}
}  // namespace detail

// Value of prod_{l<K} cos^2(2 pi 4^l s); in [0, 1], 1-periodic, exact digit
// shifts keep the phase error at the last-bit level.
inline double pk_eval(int K, double s) {
  if (K < 0) throw ValidationError("pk_eval: K must be >= 0");
  double u = detail::frac_abs(s);
  double prod = 1.0;
  for (int l = 0; l < K; ++l) {
    const double c = std::cos(2.0 * M_PI * u);
    prod *= c * c;
    u = detail::frac_abs(4.0 * u);
  }
  return prod;
}

// Truncation prod_{k<=m} cos^2(2 pi 4^-k s) of the decreasing-frequency
// product; omitted factors differ from 1 by at most tail_product_error_bound.
inline double tail_product(double s, int m) {
  if (m < 0) throw ValidationError("tail_product: m must be >= 0");
  double prod = 1.0;
  double u = std::abs(s);
  for (int k = 1; k <= m; ++k) {
    u *= 0.25;
    const double c = std::cos(2.0 * M_PI * detail::frac_abs(u));
    prod *= c * c;
  }
  return prod;
}

// sum_{k>m} (2 pi 4^-k |s|)^2 = (2 pi s)^2 / (15 * 16^m): an upper bound on
// 1 - (omitted tail), since cos^2(x) >= 1 - x^2.
inline double tail_product_error_bound(double s, int m) {
  const double w = 2.0 * M_PI * s;
  return w * w / (15.0 * std::pow(16.0, m));
}

// Truncated transform of the Cantor-Lebesgue measure at a real argument:
// prod_{k=1..k0} (1 + e^{-2 pi i 3 4^-k s}) / 2 where k0 is chosen so the
// omitted factors sum to less than tol (pi |s| 4^-k0 < tol).
inline std::complex<double> lambda_hat(double s, double tol) {
  if (tol <= 0) throw ValidationError("lambda_hat: tol must be > 0");
  const double as = std::abs(s);
  int k0 = 1;
  double tail = M_PI * as * 0.25;
  while (tail >= tol && k0 < 200) {
    ++k0;
    tail *= 0.25;
  }
  std::complex<double> prod(1.0, 0.0);
  double u = s;
  for (int k = 1; k <= k0; ++k) {
    u *= 0.25;  // 4^-k s
    const double theta = 2.0 * M_PI * 3.0 * u;
    prod *= 0.5 * (1.0 + std::polar(1.0, -theta));
  }
  return prod;
}

// Same transform at an integer frequency, with the phase 3n / 4^k reduced in
// exact integer arithmetic before any trigonometry. This keeps the exact
// zeros of the transform at the 1e-16 level even for large n.
inline std::complex<double> lambda_hat_int(long long n, double tol) {
  if (tol <= 0) throw ValidationError("lambda_hat_int: tol must be > 0");
  if (std::llabs(n) > (std::int64_t{1} << 60) / 3) {
    throw ValidationError("lambda_hat_int: frequency too large");
  }
  const long long m = 3 * n;
  const double as = std::abs(static_cast<double>(n));
  int k0 = 1;
  double tail = M_PI * as * 0.25;
  while (tail >= tol && k0 < 200) {
    ++k0;
    tail *= 0.25;
  }
  std::complex<double> prod(1.0, 0.0);
  long long pw = 1;
  for (int k = 1; k <= k0; ++k) {
    double frac;
    if (k <= 30) {
      pw *= 4;
      const long long r = ((m % pw) + pw) % pw;
      frac = static_cast<double>(r) / static_cast<double>(pw);
    } else {
      frac = detail::frac_abs(static_cast<double>(m) * std::pow(4.0, -k));
      if (m < 0 && frac != 0.0) frac = 1.0 - frac;
    }
    const double theta = 2.0 * M_PI * frac;
    prod *= 0.5 * (1.0 + std::polar(1.0, -theta));
  }
  return prod;
}

// Spectral pairing: integral of p against a measure given by its transform,
// sum_n a_n conj(transform(n)) for the convention mu_hat(s) = int e^{-2 pi i
// s t} d mu(t). The imaginary residual must stay below imag_tol.
inline double integrate_against(
    const TrigPolynomial& p,
    const std::function<std::complex<double>(long long)>& transform,
    double imag_tol = 1e-9) {
  std::complex<double> acc(0.0, 0.0);
  for (const auto& [n, a] : p.coeffs()) {
    acc += to_double(a) * std::conj(transform(n));
  }
  if (std::abs(acc.imag()) > imag_tol * std::max(1.0, std::abs(acc.real()))) {
    throw std::runtime_error("integrate_against: imaginary residual too large");
  }
  return acc.real();
}

}  // namespace cantorlab
