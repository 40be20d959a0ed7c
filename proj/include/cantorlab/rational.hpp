// Exact arithmetic primitives shared by all modules: arbitrary-precision
// integers and rationals, plus the error types and the enumeration budget.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cantorlab {

inline constexpr const char* kVersion = "0.1.0";

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Raised when inputs violate an operation's preconditions.
class ValidationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Raised when an enumeration or convolution would exceed its budget.
class BudgetError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Raised when a table's closed-form comparison column fails to match.
class ClosedFormError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Default cap on enumerated points / polynomial support terms.
inline constexpr std::int64_t kDefaultBudget = std::int64_t{1} << 24;

// base^e as a big integer; e >= 0.
inline Int ipow(Int base, unsigned e) {
  Int r = 1;
  while (e != 0) {
    if (e & 1u) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

// |digits|^depth clamped against a budget; throws BudgetError beyond it.
inline std::int64_t checked_count(std::int64_t branching, int depth,
                                  std::int64_t budget,
                                  const char* what) {
  std::int64_t n = 1;
  for (int i = 0; i < depth; ++i) {
    if (n > budget / branching) {
      throw BudgetError(std::string(what) + ": enumeration budget exceeded");
    }
    n *= branching;
  }
  if (n > budget) {
    throw BudgetError(std::string(what) + ": enumeration budget exceeded");
  }
  return n;
}

inline double to_double(const Rational& r) {
  return r.template convert_to<double>();
}

inline double to_double(const Int& n) { return n.template convert_to<double>(); }

// Renders a rational as "p/q" (q positive, gcd(p, q) = 1).
inline std::string rat_str(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

// floor(r) for arbitrary rationals.
inline Int rational_floor(const Rational& r) {
  Int q = numerator(r) / denominator(r);
  if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
  return q;
}

}  // namespace cantorlab
