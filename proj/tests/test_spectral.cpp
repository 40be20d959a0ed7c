#include "cantorlab/spectral.hpp"

#include "cantorlab/digit_sets.hpp"
#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <random>

using namespace cantorlab;
using Catch::Approx;

namespace {

Rational pow_rat(const Rational& b, int e) {
  Rational r(1);
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

TEST_CASE("rep_digits extracts the unique signed-digit string") {
  const auto zero = rep_digits(0, 3);
  REQUIRE(zero.has_value());
  CHECK(zero->delta == std::vector<int>{0, 0, 0});

  const auto ten = rep_digits(10, 2);
  REQUIRE(ten.has_value());
  CHECK(ten->delta == std::vector<int>{2, 2});

  CHECK_FALSE(rep_digits(1, 4).has_value());   // odd
  CHECK_FALSE(rep_digits(4, 2).has_value());   // 4 = 0 + 1*4 needs odd digit
  CHECK_FALSE(rep_digits(12, 1).has_value());  // out of range for K = 1

  const auto six = rep_digits(6, 2);  // 6 = -2 + 2*4
  REQUIRE(six.has_value());
  CHECK(six->delta == std::vector<int>{-2, 2});
}

TEST_CASE("rep_digits round-trips through the defining sum") {
  for (int K = 0; K <= 6; ++K) {
    const TrigPolynomial c = pk_coefficients(K);
    for (const auto& [n, a] : c.coeffs()) {
      const auto rep = rep_digits(n, K);
      REQUIRE(rep.has_value());
      long long sum = 0, pow4 = 1;
      for (int k = 0; k < K; ++k, pow4 *= 4) {
        const int d = rep->delta[static_cast<std::size_t>(k)];
        CHECK((d == -2 || d == 0 || d == 2));
        sum += d * pow4;
      }
      REQUIRE(sum == n);
    }
  }
}

TEST_CASE("brute_force_rep_count matches the digit formula everywhere") {
  CHECK(brute_force_rep_count(0, 1) == 2);  // (+,-) and (-,+)
  CHECK(brute_force_rep_count(2, 1) == 1);  // only (+,+)
  CHECK_THROWS_AS(brute_force_rep_count(0, 9), BudgetError);

  for (int K = 0; K <= 5; ++K) {
    long long span = 0, pow4 = 1;
    for (int k = 0; k < K; ++k, pow4 *= 4) span += 2 * pow4;
    for (long long n = -span; n <= span; ++n) {
      const long long counted = brute_force_rep_count(n, K);
      const auto rep = rep_digits(n, K);
      const long long expected =
          rep.has_value() ? (1LL << zero_digit_count(*rep)) : 0;
      REQUIRE(counted == expected);
    }
  }
}

TEST_CASE("pk_coefficients: support, symmetry, exact values") {
  const TrigPolynomial p1 = pk_coefficients(1);
  REQUIRE(p1.support_size() == 3);
  CHECK(p1.at(-2) == Rational(1, 4));
  CHECK(p1.at(0) == Rational(1, 2));
  CHECK(p1.at(2) == Rational(1, 4));

  CHECK(pk_coefficients(2).at(0) == Rational(1, 4));  // r(0) = 4 over 16

  for (int K = 0; K <= 6; ++K) {
    const TrigPolynomial c = pk_coefficients(K);
    std::size_t expect = 1;
    for (int i = 0; i < K; ++i) expect *= 3;
    REQUIRE(c.support_size() == expect);
    CHECK(c.is_real_even());
    CHECK(c.coefficient_sum() == Rational(1));
    CHECK(c.constant_term() == Rational(ipow(2, static_cast<unsigned>(K)),
                                        ipow(4, static_cast<unsigned>(K))));
    for (const auto& [n, a] : c.coeffs()) {
      CHECK(a > 0);
      const Rational expected(
          ipow(2, static_cast<unsigned>(
                      zero_digit_count(*rep_digits(n, K)))),
          ipow(4, static_cast<unsigned>(K)));
      REQUIRE(a == expected);
    }
  }
}

TEST_CASE("pk_coefficients agrees with brute-force counting") {
  for (int K = 0; K <= 5; ++K) {
    const TrigPolynomial c = pk_coefficients(K);
    const Int den = ipow(4, static_cast<unsigned>(K));
    for (const auto& [n, a] : c.coeffs()) {
      REQUIRE(a == Rational(brute_force_rep_count(n, K), den));
    }
  }
}

TEST_CASE("trigpoly_convolve matches the schoolbook product") {
  TrigPolynomial a;
  a.set(-3, Rational(1, 7));
  a.set(0, Rational(-2, 5));
  a.set(2, Rational(3, 4));
  TrigPolynomial b;
  b.set(-1, Rational(5, 6));
  b.set(4, Rational(1, 3));
  const TrigPolynomial got = trigpoly_convolve(a, b);
  const TrigPolynomial want = oracles::naive_convolve(a, b);
  REQUIRE(got.coeffs() == want.coeffs());

  const TrigPolynomial p2 = pk_coefficients(2);
  REQUIRE(trigpoly_convolve(p2, p2).coeffs() ==
          oracles::naive_convolve(p2, p2).coeffs());
}

TEST_CASE("trigpoly_power: identity, square, Parseval") {
  const TrigPolynomial p1 = pk_coefficients(1);
  CHECK(trigpoly_power(p1, 1).coeffs() == p1.coeffs());
  CHECK(trigpoly_power(p1, 2).constant_term() == Rational(3, 8));
  CHECK_THROWS_AS(trigpoly_power(p1, 0), ValidationError);

  for (int K = 0; K <= 4; ++K) {
    const TrigPolynomial c = pk_coefficients(K);
    Rational sum_sq(0);
    for (const auto& [n, a] : c.coeffs()) sum_sq += a * a;
    CHECK(trigpoly_power(c, 2).constant_term() == sum_sq);
  }
}

TEST_CASE("pk_lp_norm_exact closed forms for p = 1 and p = 2") {
  for (int K = 0; K <= 12; ++K) {
    CHECK(pk_lp_norm_exact(K, 1) ==
          Rational(ipow(2, static_cast<unsigned>(K)),
                   ipow(4, static_cast<unsigned>(K))));
    CHECK(pk_lp_norm_exact(K, 2) ==
          Rational(ipow(2, static_cast<unsigned>(K)) *
                       ipow(3, static_cast<unsigned>(K)),
                   ipow(4, static_cast<unsigned>(2 * K))));
  }
  CHECK_THROWS_AS(pk_lp_norm_exact(2, 0), ValidationError);
}

TEST_CASE("constant-term recursion oracle agrees with closed forms") {
  for (int K = 0; K <= 8; ++K) {
    CHECK(oracles::pk_power_constant_term(K, 1) ==
          Rational(ipow(2, static_cast<unsigned>(K)),
                   ipow(4, static_cast<unsigned>(K))));
    CHECK(oracles::pk_power_constant_term(K, 2) ==
          Rational(ipow(2, static_cast<unsigned>(K)) *
                       ipow(3, static_cast<unsigned>(K)),
                   ipow(4, static_cast<unsigned>(2 * K))));
  }
}

TEST_CASE("cube integral equals the recursion oracle and (5/16)^K") {
  for (int K = 1; K <= 6; ++K) {
    const Rational v = pk_lp_norm_exact(K, 3);
    REQUIRE(v == oracles::pk_power_constant_term(K, 3));
    CHECK(v == pow_rat(Rational(5, 16), K));
    CHECK(v != pow_rat(Rational(5, 16), K + 1));
  }
}

TEST_CASE("fourth power picks up the cross-level resonance") {
  // 8*4^0 - 2*4^1 = 0 contributes beyond the per-level product
  const Rational v = pk_lp_norm_exact(2, 4);
  CHECK(v == Rational(1253, 16384));
  CHECK(v == oracles::pk_power_constant_term(2, 4));
  const Rational per_level = pow_rat(Rational(70, 256), 2);
  CHECK(v != per_level);
  CHECK(v > per_level);
  for (int K = 1; K <= 4; ++K) {
    REQUIRE(pk_lp_norm_exact(K, 4) == oracles::pk_power_constant_term(K, 4));
  }
}

TEST_CASE("pk_eval: range, periodicity, spot values") {
  CHECK(pk_eval(0, 0.37) == 1.0);
  CHECK(pk_eval(5, 0.0) == 1.0);
  CHECK(pk_eval(1, 0.25) == Approx(0.0).margin(1e-30));
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    const double s = dist(rng);
    for (int K : {1, 3, 6}) {
      const double v = pk_eval(K, s);
      REQUIRE(v >= 0.0);
      REQUIRE(v <= 1.0);
      REQUIRE(pk_eval(K, s + 1.0) == Approx(v).margin(1e-12));
    }
  }
}

TEST_CASE("pk_eval agrees with the coefficient expansion") {
  std::mt19937 rng(20240613);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  for (int K : {1, 2, 4, 6}) {
    const TrigPolynomial c = pk_coefficients(K);
    for (int i = 0; i < 100; ++i) {
      const double s = dist(rng);
      REQUIRE(pk_eval(K, s) == Approx(c.eval_real(s)).margin(1e-10));
    }
  }
}

TEST_CASE("tail_product: base cases and convergence rate") {
  CHECK(tail_product(0.0, 10) == 1.0);
  CHECK(tail_product(5.0, 0) == 1.0);
  // the k = m factor at s = 4^m / 2 is cos^2(pi) = 1
  for (int m : {2, 4, 6}) {
    const double s = 0.5 * std::pow(4.0, m);
    double direct = 1.0;
    for (int k = 1; k <= m; ++k) {
      const double c = std::cos(2.0 * M_PI * s * std::pow(4.0, -k));
      direct *= c * c;
    }
    CHECK(tail_product(s, m) == Approx(direct).margin(1e-12));
  }
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> dist(1.0, 16.0);
  for (int i = 0; i < 30; ++i) {
    const double s = dist(rng);
    for (int m : {3, 5, 8}) {
      REQUIRE(std::abs(tail_product(s, m + 5) - tail_product(s, m)) <=
              tail_product_error_bound(s, m) + 1e-15);
    }
  }
}

TEST_CASE("lambda_hat: normalization, modulus, product identity") {
  CHECK(lambda_hat(0.0, 1e-10) == std::complex<double>(1.0, 0.0));
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> dist(-40.0, 40.0);
  for (int i = 0; i < 40; ++i) {
    const double s = dist(rng);
    const std::complex<double> v = lambda_hat(s, 1e-10);
    REQUIRE(std::abs(v) <= 1.0 + 1e-12);
    // |transform|^2 equals the cosine-squared product at matched truncation
    double prod = 1.0;
    for (int k = 1; k <= 40; ++k) {
      prod *= std::pow(std::cos(3.0 * M_PI * s * std::pow(4.0, -k)), 2);
    }
    REQUIRE(std::norm(v) == Approx(prod).margin(2e-10));
    // one-step self-similarity of the product
    const std::complex<double> v4 = lambda_hat(4.0 * s, 1e-12);
    REQUIRE(std::abs(v4) ==
            Approx(std::abs(std::cos(3.0 * M_PI * s)) *
                   std::abs(lambda_hat(s, 1e-12)))
                .margin(1e-8));
  }
}

TEST_CASE("lambda_hat_int matches the real-argument path") {
  for (long long n : {0LL, 1LL, 2LL, 3LL, 8LL, -10LL, 1234LL, -87654LL}) {
    const std::complex<double> a = lambda_hat_int(n, 1e-12);
    const std::complex<double> b = lambda_hat(static_cast<double>(n), 1e-12);
    REQUIRE(std::abs(a - b) < 1e-8);
  }
}

TEST_CASE("the transform vanishes on the nonzero representable frequencies") {
  // every n = sum delta_k 4^k with lowest nonzero digit +-2 makes the factor
  // at level j+1 equal to cos of an odd multiple of pi/2
  for (int K = 1; K <= 6; ++K) {
    const TrigPolynomial c = pk_coefficients(K);
    for (const auto& [n, a] : c.coeffs()) {
      if (n == 0) continue;
      REQUIRE(std::abs(lambda_hat_int(n, 1e-13)) < 1e-12);
    }
  }
}

TEST_CASE("integrate_against: point mass, Lebesgue, and the measure") {
  const TrigPolynomial c = pk_coefficients(3);
  // delta_0 has transform identically 1: the pairing returns p(0)
  const double total = integrate_against(
      c, [](long long) { return std::complex<double>(1.0, 0.0); });
  CHECK(total == Approx(to_double(c.coefficient_sum())).margin(1e-12));
  // Lebesgue on [0,1] kills every nonzero integer frequency
  const double mean = integrate_against(c, [](long long n) {
    return n == 0 ? std::complex<double>(1.0, 0.0)
                  : std::complex<double>(0.0, 0.0);
  });
  CHECK(mean == Approx(to_double(c.constant_term())).margin(1e-15));

  // spectral pairing vs direct atom sum at depth 12
  const TrigPolynomial p1 = pk_coefficients(1);
  const double spectral = integrate_against(
      p1, [](long long n) { return lambda_hat_int(n, 1e-12); });
  const DiscreteMeasure mu = natural_measure(cantor_c(), 12);
  double atoms = 0.0;
  for (const auto& [pos, w] : mu.atoms) {
    atoms += to_double(w) * pk_eval(1, to_double(pos));
  }
  CHECK(spectral == Approx(atoms).margin(1e-9));
}

TEST_CASE("budget errors on oversized supports and convolutions") {
  CHECK_THROWS_AS(pk_coefficients(16), BudgetError);
  CHECK_THROWS_AS(pk_coefficients(8, 100), BudgetError);
  CHECK_THROWS_AS(pk_lp_norm_exact(10, 3), BudgetError);
}
