#include "dit/verify.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "dit/specfun.hpp"

namespace dit {

namespace {

QuadConfig identity_config() {
  QuadConfig cfg;
  cfg.abs_tol = 1e-11;
  cfg.rel_tol = 1e-10;
  cfg.max_panels = 20000;
  return cfg;
}

QuadConfig lobe_config() {
  QuadConfig cfg;
  cfg.abs_tol = 1e-11;
  cfg.rel_tol = 1e-10;
  cfg.osc_max_lobes = 2000;
  cfg.accel_order = 12;
  return cfg;
}

// Re[coeff * e^{i omega t}] as an exact one-term expansion.
AdmissibleFunction trig_function(double omega, Complex coeff) {
  AdmissibleFunction out;
  out.f = [=](double t) { return (coeff * std::exp(Complex(0.0, omega * t))).real(); };
  Mode m;
  m.omega = omega;
  m.power = 0.0;
  m.exact = true;
  m.coeffs = {coeff};
  out.tail.add(std::move(m));
  return out;
}

void finish(IdentityCheck& c) {
  c.abs_err = std::abs(c.lhs - c.rhs);
  c.passed = c.abs_err <= c.tol * (1.0 + std::abs(c.rhs));
  c.status = !c.converged ? Status::Inconclusive : (c.passed ? Status::Pass : Status::Fail);
}

void check_u(double u) {
  if (!(u > 0.0 && u <= kPi + 1e-12)) throw DomainError("identity check: u must lie in (0, pi]");
}

// acosh(1 + y) without cancellation for small y.
double acosh1p(double y) { return std::log1p(y + std::sqrt(y * (2.0 + y))); }

std::vector<double> log_grid(double lo, double hi, int points) {
  std::vector<double> xs(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    const double t = points == 1 ? 0.0 : static_cast<double>(i) / (points - 1);
    xs[static_cast<std::size_t>(i)] = lo * std::pow(hi / lo, t);
  }
  return xs;
}

}  // namespace

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Inconclusive:
      return "inconclusive";
  }
  return "";
}

std::string identity_name(IdentityId id) {
  switch (id) {
    case IdentityId::Eq2_4:
      return "Eq2_4";
    case IdentityId::Eq2_24:
      return "Eq2_24";
    case IdentityId::Eq2_30:
      return "Eq2_30";
    case IdentityId::LaplaceK:
      return "LaplaceK";
    case IdentityId::Eq2_8:
      return "Eq2_8";
    case IdentityId::Eq2_25:
      return "Eq2_25";
  }
  return "";
}

IdentityCheck check_lemma1(int n, double u, double mu, LommelPower power, double tol) {
  check_u(u);
  const TransformKind kind = TransformKind::lommel(mu);
  IdentityCheck c;
  c.id = IdentityId::Eq2_30;
  c.n = n;
  c.u = u;
  c.mu = mu;
  c.tol = tol;
  // sin(x cosh u - pi mu / 2) = Re[-i e^{-i pi mu/2} e^{i x cosh u}]
  const AdmissibleFunction f =
      trig_function(std::cosh(u), Complex(0.0, -1.0) * std::exp(Complex(0.0, -0.5 * kPi * mu)));
  // analyze returns GammaGamma * int S f; normalize both sides by sinh(pi n).
  const EvalReport r = analyze(kind, f, n, identity_config());
  const double s = std::sinh(kPi * n);
  c.lhs = s * r.value;
  c.lhs_err_est = s * r.err_est;
  c.converged = r.converged;
  const double two_power = power == LommelPower::TwoPowMu ? std::pow(2.0, mu) : std::pow(2.0, mu - 1.0);
  c.rhs = two_power * kPi * kPi * std::sin(n * u) / std::sinh(u);
  finish(c);
  return c;
}

IdentityCheck check_laplace_k(int n, double u, double tol) {
  check_u(u);
  if (n < 1) throw DomainError("check_laplace_k: n must be >= 1");
  IdentityCheck c;
  c.id = IdentityId::LaplaceK;
  c.n = n;
  c.u = u;
  c.tol = tol;
  const double rate = std::cosh(u);
  const double s = std::sinh(kPi * n);
  QuadConfig cfg;
  cfg.abs_tol = tol / s;
  cfg.rel_tol = 1e-10;
  cfg.max_panels = 20000;
  const auto f = [&](double x) { return std::exp(-x * rate) * bessel_k_imag(n, x); };
  // K_{in} oscillates in log x near the origin.
  const EvalReport head = integrate_log_origin(f, 1.0, 1.0, cfg);
  const EvalReport rest = integrate_expdecay([&](double y) { return f(1.0 + y); }, rate, cfg);
  EvalReport r;
  r.value = head.value + rest.value;
  r.err_est = head.err_est + rest.err_est;
  r.converged = r.err_est <= cfg.target(r.value);
  c.lhs = s * r.value;
  c.lhs_err_est = s * r.err_est;
  c.converged = r.converged;
  c.rhs = kPi * std::sin(n * u) / std::sinh(u);
  finish(c);
  return c;
}

IdentityCheck check_representation(bool imaginary, int n, double x, double tol) {
  if (imaginary && n < 1) throw DomainError("check_representation: im_part requires n >= 1");
  if (!(x > 0.0)) throw DomainError("check_representation: x must be positive");
  IdentityCheck c;
  c.id = imaginary ? IdentityId::Eq2_25 : IdentityId::Eq2_8;
  c.n = n;
  c.u = x;
  c.tol = tol;
  const NormalizedBesselJ j = bessel_j_imag_normalized(n, x);
  c.lhs = imaginary ? *j.im_part : j.re_part;

  // int_0^inf cos(nt) trig(x cosh t) dt = int_1^inf cos(n acosh v) trig(xv) / sqrt(v^2 - 1) dv.
  const auto trig = [imaginary](double a) { return imaginary ? std::cos(a) : std::sin(a); };
  const double offset = imaginary ? 0.5 : 0.0;
  const double k0 = std::ceil(2.0 * x / kPi - offset);
  const double v0 = (k0 + offset) * kPi / x;
  // Head over [1, v0] with v = 1 + w^2 to absorb the inverse square root.
  const QuadConfig cfg = lobe_config();
  QuadConfig head_cfg = cfg;
  head_cfg.abs_tol = 1e-14;
  head_cfg.rel_tol = 1e-13;
  const EvalReport head = integrate_finite(
      [&](double w) {
        const double y = w * w;
        return 2.0 * std::cos(n * acosh1p(y)) * trig(x * (1.0 + y)) / std::sqrt(2.0 + y);
      },
      0.0, std::sqrt(v0 - 1.0), head_cfg);
  // Lobes between consecutive zeros of trig(x v).
  const EvalReport tail = integrate_oscillatory_improper(
      [&](double s) {
        const double y = v0 - 1.0 + s;
        return std::cos(n * acosh1p(y)) * trig(x * (1.0 + y)) / std::sqrt(y * (2.0 + y));
      },
      [&](int k) { return k * kPi / x; }, cfg);
  const double sign = imaginary ? -1.0 : 1.0;
  c.rhs = sign * 2.0 / kPi * (head.value + tail.value);
  c.lhs_err_est = 2.0 / kPi * (head.err_est + tail.err_est);
  c.converged = tail.converged;
  finish(c);
  return c;
}

IdentityCheck check_kernel_identity(IdentityId id, int n, double u, std::optional<double> mu,
                                    std::optional<double> tol) {
  switch (id) {
    case IdentityId::Eq2_30:
      if (!mu) throw DomainError("Eq2_30 requires mu");
      return check_lemma1(n, u, *mu, LommelPower::TwoPowMu, tol.value_or(1e-5));
    case IdentityId::LaplaceK:
      return check_laplace_k(n, u, tol.value_or(1e-8));
    case IdentityId::Eq2_8:
      return check_representation(false, n, u, tol.value_or(1e-6));
    case IdentityId::Eq2_25:
      return check_representation(true, n, u, tol.value_or(1e-6));
    case IdentityId::Eq2_4:
    case IdentityId::Eq2_24:
      break;
  }
  check_u(u);
  const bool imaginary = id == IdentityId::Eq2_24;
  if (imaginary && n < 1) throw DomainError("Eq2_24 requires n >= 1");
  if (n < 0) throw DomainError("Eq2_4 requires n >= 0");
  IdentityCheck c;
  c.id = id;
  c.n = n;
  c.u = u;
  c.tol = tol.value_or(1e-6);
  // sin(t cosh u) = Re[-i e^{i t cosh u}],  cos(t cosh u) = Re[e^{i t cosh u}]
  const AdmissibleFunction f =
      trig_function(std::cosh(u), imaginary ? Complex(1.0, 0.0) : Complex(0.0, -1.0));
  const EvalReport r = analyze(imaginary ? TransformKind::im() : TransformKind::re(), f, n, identity_config());
  c.lhs = r.value;
  c.lhs_err_est = r.err_est;
  c.converged = r.converged;
  c.rhs = (imaginary ? -1.0 : 1.0) * std::cos(n * u) / std::sinh(u);
  finish(c);
  return c;
}

std::string bound_name(BoundTarget t) {
  switch (t) {
    case BoundTarget::Lebedev_2_34:
      return "Lebedev_2_34";
    case BoundTarget::Lommel_2_33:
      return "Lommel_2_33";
    case BoundTarget::TheoremProof_JBound:
      return "TheoremProof_JBound";
  }
  return "";
}

BoundGrid default_bound_grid(BoundTarget target) {
  BoundGrid g;
  g.n_values = {1, 2, 3, 4, 5};
  if (target == BoundTarget::TheoremProof_JBound) {
    g.x_lo = 0.05;
    g.x_hi = 5.0;
    g.bound = 1.0;
  }
  return g;
}

BoundReport check_bounds(BoundTarget target, const BoundGrid& grid) {
  if (grid.n_values.empty() || grid.points < 2 || !(grid.x_lo > 0.0 && grid.x_hi > grid.x_lo)) {
    throw DomainError("check_bounds: empty or invalid grid");
  }
  if (grid.points * static_cast<int>(grid.n_values.size()) < 20) {
    throw DomainError("check_bounds: grids need at least 20 points");
  }
  BoundReport rep;
  rep.target = target;
  const std::vector<double> base = log_grid(grid.x_lo, grid.x_hi, grid.points);
  const std::vector<double> fine = log_grid(grid.x_lo, grid.x_hi, 2 * grid.points - 1);
  rep.points = static_cast<int>(base.size() * grid.n_values.size());
  rep.points_refined = static_cast<int>(fine.size() * grid.n_values.size());

  const auto sweep = [&](const std::vector<double>& xs, bool record) {
    double sup = 0.0;
    for (int n : grid.n_values) {
      std::optional<LommelS> lommel;
      if (target == BoundTarget::Lommel_2_33) lommel.emplace(grid.mu, n, grid.x_lo);
      for (double x : xs) {
        double ratio = 0.0;
        switch (target) {
          case BoundTarget::Lebedev_2_34:
            ratio = std::abs(bessel_k_imag(n, x)) * std::pow(x, 0.25) * std::sqrt(std::sinh(kPi * n));
            break;
          case BoundTarget::Lommel_2_33: {
            const LommelValue s = (*lommel)(x);
            ratio = std::abs(s.value) * std::pow(x, 0.25) * std::sqrt(std::sinh(kPi * n)) * s.gamma_product;
            break;
          }
          case BoundTarget::TheoremProof_JBound: {
            // |J_{in}(t)| / (e^T sqrt(sinh(pi n) / (pi n))), T = x_hi, in log scale.
            const NormalizedBesselJ j = bessel_j_imag_normalized(n, x);
            const double th = std::tanh(0.5 * kPi * n);
            const double im = j.im_part.value_or(0.0);
            const double log_ratio = log_cosh(0.5 * kPi * n) - grid.x_hi +
                                     0.5 * (std::log(kPi * n) - log_sinh(kPi * n));
            ratio = std::exp(log_ratio) * std::sqrt(j.re_part * j.re_part + th * th * im * im);
            break;
          }
        }
        if (!std::isfinite(ratio)) return std::numeric_limits<double>::infinity();
        if (ratio > sup) {
          sup = ratio;
          if (record) {
            rep.argmax_n = n;
            rep.argmax_x = x;
          }
        }
      }
    }
    return sup;
  };
  rep.sup = sweep(base, false);
  rep.sup_refined = sweep(fine, true);
  rep.rel_change = std::abs(rep.sup_refined - rep.sup) / rep.sup_refined;
  rep.passed = std::isfinite(rep.sup) && std::isfinite(rep.sup_refined) && rep.sup > 0.0 &&
               rep.rel_change <= 0.05 && (grid.bound <= 0.0 || rep.sup_refined <= grid.bound);
  rep.status = rep.passed ? Status::Pass : Status::Fail;
  return rep;
}

std::string ode_name(OdeTarget t) { return t == OdeTarget::BesselJ_1_7 ? "BesselJ_1_7" : "Lommel_1_20"; }

OdeReport check_ode_residual(OdeTarget target, int n, std::optional<double> mu, double x, double h0,
                             int halvings, LommelRhs rhs_form) {
  if (!(h0 > 0.0) || !(x - h0 > 0.0)) throw DomainError("check_ode_residual: need x - h > 0");
  if (halvings < 1) throw DomainError("check_ode_residual: need at least one halving");
  OdeReport rep;
  rep.target = target;
  rep.n = n;
  rep.mu = mu;
  rep.x = x;

  // Each component is a function u with its right-hand side.
  std::vector<std::function<double(double)>> parts;
  double rhs = 0.0;
  std::optional<LommelS> lommel;
  if (target == OdeTarget::BesselJ_1_7) {
    if (n < 0) throw DomainError("check_ode_residual: n must be nonnegative");
    parts.emplace_back([n](double t) { return bessel_j_imag_normalized(n, t).re_part; });
    if (n >= 1) parts.emplace_back([n](double t) { return *bessel_j_imag_normalized(n, t).im_part; });
  } else {
    if (!mu) throw DomainError("check_ode_residual: Lommel target needs mu");
    lommel.emplace(*mu, n, (x - h0) * 0.5);
    parts.emplace_back([&lommel](double t) { return (*lommel)(t).value; });
    rhs = std::pow(x, rhs_form == LommelRhs::PowMuPlusOne ? *mu + 1.0 : *mu);
  }

  double scale = std::max(std::abs(rhs), 1.0);
  for (const auto& u : parts) scale = std::max(scale, x * x * std::abs(u(x)));
  rep.scale = scale;

  double h = h0;
  for (int level = 0; level <= halvings; ++level, h *= 0.5) {
    double worst = 0.0;
    for (const auto& u : parts) {
      const double up = u(x + h);
      const double mid = u(x);
      const double down = u(x - h);
      const double d2 = (up - 2.0 * mid + down) / (h * h);
      const double d1 = (up - down) / (2.0 * h);
      const double r = x * x * d2 + x * d1 + (x * x + static_cast<double>(n) * n) * mid - rhs;
      worst = std::max(worst, std::abs(r));
    }
    rep.steps.push_back(h);
    rep.residuals.push_back(worst);
  }
  // Rounding floor of the second difference: ~eps * |u| / h^2 scaled by x^2.
  bool ok = true;
  for (std::size_t i = 1; i < rep.residuals.size(); ++i) {
    const double floor = 1e-15 * scale / (rep.steps[i] * rep.steps[i]);
    if (rep.residuals[i] <= 100.0 * floor) continue;
    const double order = std::log2(rep.residuals[i - 1] / rep.residuals[i]);
    rep.orders.push_back(order);
    ok = ok && order >= 1.8 && order <= 2.2;
  }
  rep.passed = ok && !rep.orders.empty();
  rep.status = rep.passed ? Status::Pass : Status::Fail;
  return rep;
}

RoundtripReport run_roundtrip_seq(const TransformKind& kind, const CoeffSeq& a, double tol,
                                  const QuadConfig& cfg) {
  RoundtripReport rep;
  rep.kind = kind;
  rep.direction = RoundtripDirection::Seq;
  rep.tol = tol;
  const AdmissibleFunction f = synthesized_function(kind, a);
  bool all_converged = true;
  for (int n = kind.first_index(); n <= a.last_index() + 1; ++n) {
    const EvalReport r = invert_to_sequence(kind, f, n, cfg);
    RoundtripItem item;
    item.index = n;
    item.expected = a.at(n);
    item.recovered = r.value;
    item.err = std::abs(r.value - item.expected);
    item.converged = r.converged;
    all_converged = all_converged && r.converged;
    rep.max_err = std::max(rep.max_err, item.err);
    rep.per_item_errs.push_back(item.err);
    rep.items.push_back(item);
  }
  if (kind.tag == KindTag::ImJ) {
    const auto g = [&](double x) { return kernel(kind, 0, x).value * f(x); };
    rep.psi0_projection = 2.0 / kPi * integrate_with_tail(g, kernel_expansion(kind, 0) * f.tail, cfg).value;
  }
  rep.passed = rep.max_err <= tol;
  rep.status = rep.passed ? Status::Pass : (all_converged ? Status::Fail : Status::Inconclusive);
  return rep;
}

RoundtripReport run_roundtrip_fn(const TransformKind& kind, const PeriodicProfile& psi,
                                 const std::vector<double>& x_grid, int n_max, double tol,
                                 double correction_sign, const QuadConfig& cfg) {
  RoundtripReport rep;
  rep.kind = kind;
  rep.direction = RoundtripDirection::Fn;
  rep.tol = tol;
  const AdmissibleFunction f = profile_function(kind, psi);

  // Coefficients by the improper integral; the ImJ a_0 (no transform defines it)
  // comes from the coefficient shortcut.
  std::vector<double> coeffs;
  bool all_converged = true;
  const int start = kind.tag == KindTag::Lommel ? 1 : 0;
  for (int n = start; n <= n_max; ++n) {
    if (kind.tag == KindTag::ImJ && n == 0) {
      coeffs.push_back(profile_coefficients(kind, psi, 0));
      continue;
    }
    const EvalReport r = analyze(kind, f, n, cfg);
    all_converged = all_converged && r.converged;
    coeffs.push_back(r.value);
  }
  const CoeffSeq a = CoeffSeq::make(kind, start, coeffs);

  int prefer_given = 0;
  int prefer_other = 0;
  for (double x : x_grid) {
    const double expected = build_profile_function(kind, psi, x).value;
    const double got = invert_to_function(kind, a, x, correction_sign).value;
    RoundtripItem item;
    item.index = x;
    item.expected = expected;
    item.recovered = got;
    item.err = std::abs(got - expected);
    rep.max_err = std::max(rep.max_err, item.err);
    rep.per_item_errs.push_back(item.err);
    rep.items.push_back(item);
    if (kind.tag != KindTag::Lommel) {
      const double other = std::abs(invert_to_function(kind, a, x, -correction_sign).value - expected);
      rep.err_opposite_sign.push_back(other);
      if (item.err < other) ++prefer_given;
      if (other < item.err) ++prefer_other;
    }
  }
  if (kind.tag != KindTag::Lommel) {
    if (prefer_other == 0 && prefer_given > 0) rep.resolved_sign = correction_sign;
    if (prefer_given == 0 && prefer_other > 0) rep.resolved_sign = -correction_sign;
  }
  rep.passed = rep.max_err <= tol;
  rep.status = rep.passed ? Status::Pass : (all_converged ? Status::Fail : Status::Inconclusive);
  return rep;
}

}  // namespace dit
