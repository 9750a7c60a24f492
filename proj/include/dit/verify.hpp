#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dit/quad.hpp"
#include "dit/transforms.hpp"

namespace dit {

enum class Status { Pass, Fail, Inconclusive };

std::string status_name(Status s);

enum class IdentityId { Eq2_4, Eq2_24, Eq2_30, LaplaceK, Eq2_8, Eq2_25 };

std::string identity_name(IdentityId id);

/// Constant in front of the Lommel orthogonality formula.
enum class LommelPower { TwoPowMu, TwoPowMuMinusOne };

/// One closed-form identity evaluated in normalized (overflow-free) form.
/// For Eq2_8 and Eq2_25 the parameter `u` holds the Bessel argument x.
struct IdentityCheck {
  IdentityId id = IdentityId::Eq2_4;
  int n = 0;
  double u = 0.0;
  std::optional<double> mu;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_err = 0.0;
  double lhs_err_est = 0.0;
  double tol = 0.0;
  bool converged = true;
  bool passed = false;  // abs_err <= tol (1 + |rhs|)
  Status status = Status::Fail;
};

/// Identity check at its default tolerance (1e-6; Lommel orthogonality 1e-5; Laplace-K 1e-8).
IdentityCheck check_kernel_identity(IdentityId id, int n, double u, std::optional<double> mu = std::nullopt,
                                    std::optional<double> tol = std::nullopt);

/// Lommel orthogonality with a chosen power of two, for resolving the constant.
IdentityCheck check_lemma1(int n, double u, double mu, LommelPower power, double tol = 1e-5);

IdentityCheck check_laplace_k(int n, double u, double tol = 1e-8);

/// Normalized J against its single-integral representation (lobe-accelerated).
IdentityCheck check_representation(bool imaginary, int n, double x, double tol = 1e-6);

enum class BoundTarget { Lebedev_2_34, Lommel_2_33, TheoremProof_JBound };

std::string bound_name(BoundTarget t);

struct BoundReport {
  BoundTarget target = BoundTarget::Lebedev_2_34;
  int points = 0;
  int points_refined = 0;
  double sup = 0.0;          // empirical constant on the base grid
  double sup_refined = 0.0;  // on the 2x refined grid
  double rel_change = 0.0;
  int argmax_n = 0;
  double argmax_x = 0.0;
  bool passed = false;
  Status status = Status::Fail;
};

struct BoundGrid {
  std::vector<int> n_values;
  double x_lo = 0.1;
  double x_hi = 20.0;
  int points = 40;  // per n, log-spaced; the refined grid doubles the density
  double mu = -0.5;
  double bound = 0.0;  // > 0: supremum must stay below it (J bound uses 1)
};

BoundGrid default_bound_grid(BoundTarget target);

/// Sup of the bound-normalized ratio over the grid, and again on the refined grid.
/// Passes when both sups are finite and positive, their relative change is <= 5%,
/// and (if a bound is configured) the sup stays below it. Throws DomainError for grids
/// with fewer than 20 points in total.
BoundReport check_bounds(BoundTarget target, const BoundGrid& grid);

enum class OdeTarget { BesselJ_1_7, Lommel_1_20 };

std::string ode_name(OdeTarget t);

struct OdeReport {
  OdeTarget target = OdeTarget::BesselJ_1_7;
  int n = 0;
  std::optional<double> mu;
  double x = 0.0;
  std::vector<double> steps;
  std::vector<double> residuals;  // |x^2 u'' + x u' + (x^2 + n^2) u - rhs| per step
  std::vector<double> orders;     // log2 ratios of successive residuals
  double scale = 1.0;
  bool passed = false;
  Status status = Status::Fail;
};

/// Right side of the inhomogeneous equation for S_{mu,in}. S solves it with x^{mu+1};
/// PowMu is kept to show that x^mu leaves an O(1) residual.
enum class LommelRhs { PowMuPlusOne, PowMu };

/// Central-difference residual of the Bessel equation for re_part and im_part, or of
/// the inhomogeneous equation for S_{mu,in}, at steps h0, h0/2, ... Passes when every
/// observed order lies in [1.8, 2.2]; residuals already at the rounding floor are skipped.
OdeReport check_ode_residual(OdeTarget target, int n, std::optional<double> mu, double x,
                             double h0 = 0.2, int halvings = 3, LommelRhs rhs = LommelRhs::PowMuPlusOne);

enum class RoundtripDirection { Seq, Fn };

struct RoundtripItem {
  double index = 0.0;  // n for Seq, x for Fn
  double expected = 0.0;
  double recovered = 0.0;
  double err = 0.0;
  bool converged = true;
};

struct RoundtripReport {
  TransformKind kind;
  RoundtripDirection direction = RoundtripDirection::Seq;
  std::vector<RoundtripItem> items;
  std::vector<double> per_item_errs;
  double max_err = 0.0;
  double tol = 1e-4;
  bool passed = false;
  Status status = Status::Fail;
  /// Fn direction (Re/Im): correction sign that minimized the error at every x, 0 if
  /// the preference changed across the grid.
  double resolved_sign = 0.0;
  std::vector<double> err_opposite_sign;
  /// Seq direction (Im): report-only projection (2/pi) int Psi_0 f dx.
  std::optional<double> psi0_projection;
};

/// synthesize -> invert_to_sequence for indices first..last+1 (the extra index must
/// come back as zero).
RoundtripReport run_roundtrip_seq(const TransformKind& kind, const CoeffSeq& a, double tol = 1e-4,
                                  const QuadConfig& cfg = transform_config());

/// build_profile_function -> analyze (n <= n_max) -> invert_to_function on the grid.
RoundtripReport run_roundtrip_fn(const TransformKind& kind, const PeriodicProfile& psi,
                                 const std::vector<double>& x_grid, int n_max = 4, double tol = 1e-4,
                                 double correction_sign = -1.0, const QuadConfig& cfg = transform_config());

}  // namespace dit
