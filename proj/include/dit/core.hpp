#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace dit {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

/// cosh(pi): the upper end of the kernel substitution v = cosh(u), u in [0, pi].
inline const double kCoshPi = std::cosh(kPi);

/// Argument or parameter outside the domain where an operation is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Requested accuracy cannot be reached by any available evaluation route.
class AccuracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Result exceeds the double exponent range even after log-scale combination.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// log(cosh(a)) without overflow for large |a|.
inline double log_cosh(double a) {
  a = std::abs(a);
  return a + std::log1p(std::exp(-2.0 * a)) - std::numbers::ln2;
}

/// log(sinh(a)) for a > 0 without overflow.
inline double log_sinh(double a) {
  if (a < 1.0) return std::log(std::sinh(a));
  return a + std::log1p(-std::exp(-2.0 * a)) - std::numbers::ln2;
}

}  // namespace dit
