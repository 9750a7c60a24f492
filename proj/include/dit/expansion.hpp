#pragma once

#include <vector>

#include "dit/core.hpp"
#include "dit/quad.hpp"

namespace dit {

/// One oscillatory component A(z) e^{i omega z} of a large-argument asymptotic
/// expansion, with A(z) = z^{-power} * sum_k coeffs[k] z^{-k}.
struct Mode {
  double omega = 0.0;
  double power = 0.0;
  std::vector<Complex> coeffs;
  /// The coefficient list is the whole (convergent, finite) series, not a truncation.
  bool exact = false;

  /// Number of leading terms to keep at |z| = r: every term before the smallest
  /// nonzero |coeffs[k]| r^{-k} (all terms when exact).
  std::size_t optimal_terms(double r) const;
  /// Magnitude of the first omitted term at |z| = r, including the r^{-power} factor.
  double truncation_error(double r) const;
  /// Truncated amplitude A(z) using the first `terms` coefficients.
  Complex amplitude(Complex z, std::size_t terms) const;
};

/// Asymptotic expansion of a real function as x -> +inf:
///   f(x) ~ Re sum_j A_j(x) e^{i omega_j x},   omega_j >= 0.
class Expansion {
 public:
  Expansion() = default;

  void add(Mode mode);
  const std::vector<Mode>& modes() const { return modes_; }
  bool empty() const { return modes_.empty(); }

  Expansion& operator+=(const Expansion& other);
  Expansion scaled(double factor) const;
  Expansion operator*(const Expansion& other) const;

  /// Optimally truncated evaluation at a real point (for diagnostics and tests).
  double value(double x) const;
  /// Size of the first omitted term of every mode at |z| = x, summed.
  double truncation_error(double x) const;

  /// Integral of f over [T, inf), each mode integrated along the ray T + iy
  /// (non-oscillatory modes in closed form).
  EvalReport tail_integral(double T, const QuadConfig& cfg) const;

 private:
  std::vector<Mode> modes_;
};

/// Smallest T >= t_min (doubling, at most t_max) at which the expansion's
/// truncation error is below tol.
double choose_tail_start(const Expansion& e, double tol, double t_min = 40.0, double t_max = 640.0);

/// Improper integral of f over (0, inf): log-variable quadrature on (0, 1],
/// adaptive Gauss-Kronrod on [1, T], and tail.tail_integral(T) beyond.
/// `origin_power` is p with x f(x) = O(x^p) as x -> 0.
EvalReport integrate_with_tail(const RealFunction& f, const Expansion& tail, const QuadConfig& cfg,
                               double origin_power = 1.0);

}  // namespace dit
