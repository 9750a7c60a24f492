#pragma once

#include <algorithm>
#include <functional>
#include <limits>

#include "dit/core.hpp"

namespace dit {

using RealFunction = std::function<double(double)>;

/// Tolerances and work limits shared by every integrator in this module.
struct QuadConfig {
  double abs_tol = 1e-9;
  double rel_tol = 1e-8;
  int max_panels = 4000;
  int osc_max_lobes = 400;
  int accel_order = 12;

  /// Defaults for the improper oscillatory integrator.
  static QuadConfig improper() {
    QuadConfig cfg;
    cfg.abs_tol = 1e-6;
    cfg.rel_tol = 1e-6;
    return cfg;
  }

  double target(double value) const { return std::max(abs_tol, rel_tol * std::abs(value)); }

  /// Throws DomainError unless tolerances are positive and accel_order <= osc_max_lobes.
  void validate() const;
};

struct EvalReport {
  double value = 0.0;
  double err_est = 0.0;
  int panels_used = 0;
  int lobes_used = 0;
  bool converged = true;
};

/// Adaptive Gauss-Kronrod (10/21) integration of f over [a, b] with global bisection.
EvalReport integrate_finite(const RealFunction& f, double a, double b, const QuadConfig& cfg);

/// Integral of f over [0, inf) for |f(x)| <= M exp(-decay_rate x). Panels double in
/// width until the analytic tail bound |f(X)| / decay_rate drops below tolerance or
/// decay_rate * X reaches the underflow horizon.
/// Integration stops at x = max_x when that comes first.
EvalReport integrate_expdecay(const RealFunction& f, double decay_rate, const QuadConfig& cfg,
                              double max_x = std::numeric_limits<double>::infinity());

/// Integral of f over (0, a] computed in the variable s = log(x). Requires
/// x f(x) = O(x^decay_power) as x -> 0 with decay_power > 0; handles integrands that
/// oscillate in log(x) near the origin.
EvalReport integrate_log_origin(const RealFunction& f, double a, double decay_power,
                                const QuadConfig& cfg);

/// Improper-sense limit of the integral of f over [0, T] as T -> inf.
///
/// zero_hints(k), k = 0, 1, ..., must be ascending and eventually bracket lobes of
/// alternating sign. Partial integrals at the hints are accelerated by accel_order
/// rounds of pairwise averaging; convergence is declared once two successive
/// accelerated values (and the two highest averaging orders) agree within tolerance.
EvalReport integrate_oscillatory_improper(const RealFunction& f,
                                          const std::function<double(int)>& zero_hints,
                                          const QuadConfig& cfg);

}  // namespace dit
