#pragma once

#include <memory>
#include <string>
#include <vector>

#include "dit/core.hpp"
#include "dit/expansion.hpp"
#include "dit/quad.hpp"

namespace dit {

enum class KindTag { ReJ, ImJ, Lommel };

/// Which transform pair applies. mu is meaningful only for Lommel.
struct TransformKind {
  KindTag tag = KindTag::ReJ;
  double mu = 0.0;

  static TransformKind re() { return {KindTag::ReJ, 0.0}; }
  static TransformKind im() { return {KindTag::ImJ, 0.0}; }
  /// Throws DomainError unless -5/4 < mu < 0.
  static TransformKind lommel(double mu);

  /// Smallest index of the coefficient sequence: 0 for ReJ, 1 otherwise.
  int first_index() const { return tag == KindTag::ReJ ? 0 : 1; }
  std::string name() const;
};

enum class Admissibility { Weighted, Summable };

/// Finite coefficient sequence a_start .. a_N.
struct CoeffSeq {
  int start_index = 0;
  std::vector<double> coeffs;
  Admissibility admissibility = Admissibility::Weighted;

  /// Validates start_index against the kind: 0 or 1 for ReJ and ImJ (an ImJ a_0 only
  /// feeds the function-inversion correction term), 1 for Lommel.
  static CoeffSeq make(const TransformKind& kind, int start_index, std::vector<double> coeffs);

  int last_index() const { return start_index + static_cast<int>(coeffs.size()) - 1; }
  double at(int n) const;
};

enum class Parity { Even, Odd, None };

/// psi(u) = sum_k cos_coeffs[k] cos(k u) + sum_k sin_coeffs[k] sin(k u), k from 0.
struct PeriodicProfile {
  std::vector<double> cos_coeffs;
  std::vector<double> sin_coeffs;
  Parity parity = Parity::None;
  double lipschitz_const = 0.0;
  double psi_at_zero = 0.0;

  /// Derives parity, psi(0) and a Lipschitz bound from the coefficients.
  static PeriodicProfile from_coeffs(std::vector<double> cos_coeffs, std::vector<double> sin_coeffs);
  static PeriodicProfile one_minus_cos() { return from_coeffs({1.0, -1.0}, {}); }
  static PeriodicProfile sine() { return from_coeffs({}, {0.0, 1.0}); }

  double operator()(double u) const;
};

/// A function on (0, inf) together with its large-x asymptotic expansion; the
/// expansion is what makes improper integrals against it computable.
struct AdmissibleFunction {
  RealFunction f;
  Expansion tail;
  double operator()(double x) const { return f(x); }
};

/// Tolerances used for kernels and profile integrals over [0, pi].
QuadConfig finite_config();
/// Tolerances used for the improper transform integrals.
QuadConfig transform_config();

/// Phi_n(x), Psi_n(x) or Omega_n(x) by adaptive quadrature over u in [0, pi].
EvalReport kernel(const TransformKind& kind, int n, double x, const QuadConfig& cfg = finite_config());
/// Large-x expansion of the kernel, from the endpoint expansions at u = 0 and u = pi.
Expansion kernel_expansion(const TransformKind& kind, int n);

/// Finite-sum forward transform sum_n a_n kernel_n(x) at x.
EvalReport synthesize(const TransformKind& kind, const CoeffSeq& a, double x);
/// The same sum as a reusable function with its expansion (Lommel tables built once).
AdmissibleFunction synthesized_function(const TransformKind& kind, const CoeffSeq& a);

/// Coefficient transform a_n of f as an improper integral over (0, inf).
EvalReport analyze(const TransformKind& kind, const AdmissibleFunction& f, int n,
                   const QuadConfig& cfg = transform_config());

/// Recovers a_n from f. ReJ uses 1/pi instead of 2/pi at n = 0.
EvalReport invert_to_sequence(const TransformKind& kind, const AdmissibleFunction& f, int n,
                              const QuadConfig& cfg = transform_config());

/// Rebuilds f(x) from its coefficients. The ReJ/ImJ correction term is
///   correction_sign * a_0 * (2 / (x pi)) * sin(x (B - 1) / 2) * {sin | cos}(x (B + 1) / 2),
/// B = cosh(pi); the ImJ sum starts at n = 1 and enters with a minus sign.
EvalReport invert_to_function(const TransformKind& kind, const CoeffSeq& a, double x,
                              double correction_sign = -1.0, const QuadConfig& cfg = finite_config());

/// The correction term alone for a_0 = 1 (zero for Lommel).
double correction_term(const TransformKind& kind, double x);

/// Checks the profile class for the kind; throws DomainError on violation.
void check_profile(const TransformKind& kind, const PeriodicProfile& psi);

/// f(x) generated by a periodic profile psi, by direct quadrature.
EvalReport build_profile_function(const TransformKind& kind, const PeriodicProfile& psi, double x,
                                  const QuadConfig& cfg = finite_config());
AdmissibleFunction profile_function(const TransformKind& kind, const PeriodicProfile& psi);

/// Coefficients of a profile function straight from psi, by quadrature.
/// ImJ carries a minus sign: a_n = -int_0^pi psi(u) cos(nu) du (n >= 0).
double profile_coefficients(const TransformKind& kind, const PeriodicProfile& psi, int n);

}  // namespace dit
