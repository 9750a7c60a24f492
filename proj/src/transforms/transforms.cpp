#include "dit/transforms.hpp"

#include <cmath>
#include <numbers>

#include "dit/specfun.hpp"

namespace dit {

namespace {

constexpr std::size_t kKernelTerms = 80;
constexpr double kLommelTableMin = 1e-16;

// Endpoint expansions of E(x) = int_1^B e^{ixv} g(v) dv, g(v) = cos(n acosh v) or
// sin(n acosh v), B = cosh(pi). Rotating both endpoints into the upper half plane,
//   E(x) = i e^{ix} L_1(x) - i e^{iBx} L_B(x),  L_a(x) = int_0^inf e^{-xs} g(a + is) ds,
// and Watson's lemma turns the Taylor (or sqrt-Taylor) series of g at each end
// into asymptotic series of L_a. The kernel is Re[rho E].
Expansion endpoint_expansion(int n, bool sine, Complex rho) {
  const double nn = static_cast<double>(n) * n;
  const Complex I(0.0, 1.0);
  const bool exact = n == 0 && !sine;
  const std::size_t terms = exact ? 1 : kKernelTerms;

  Mode low;
  low.omega = 1.0;
  low.power = sine ? 1.5 : 1.0;
  low.exact = exact;
  low.coeffs.resize(terms);
  Complex l = sine ? n * std::numbers::sqrt2 * std::exp(Complex(0.0, 0.25 * kPi)) * 0.5 * std::sqrt(kPi)
                   : Complex(1.0, 0.0);
  for (std::size_t k = 0; k < terms; ++k) {
    low.coeffs[k] = rho * I * l;
    const double kd = static_cast<double>(k);
    if (sine) {
      l *= -I * ((kd + 0.5) * (kd + 0.5) + nn) / (2.0 * kd + 2.0);
    } else {
      l *= -I * (kd * kd + nn) / (2.0 * kd + 1.0);
    }
  }

  Mode high;
  high.omega = kCoshPi;
  high.power = 1.0;
  high.exact = exact;
  high.coeffs.resize(terms);
  const double a0 = kCoshPi * kCoshPi - 1.0;
  const double sign = n % 2 == 0 ? 1.0 : -1.0;
  double d_prev = sine ? 0.0 : sign;
  double d_curr = sine ? n * sign / std::sinh(kPi) : 0.0;
  Complex fact(1.0, 0.0);  // i^k k!
  for (std::size_t k = 0; k < terms; ++k) {
    high.coeffs[k] = -rho * I * d_prev * fact;
    const double kd = static_cast<double>(k);
    const double d_next =
        -((2.0 * kCoshPi * kd + kCoshPi) * (kd + 1.0) * d_curr + (kd * kd + nn) * d_prev) /
        (a0 * (kd + 2.0) * (kd + 1.0));
    d_prev = d_curr;
    d_curr = d_next;
    fact *= I * (kd + 1.0);
  }

  Expansion e;
  e.add(std::move(low));
  e.add(std::move(high));
  return e;
}

void check_index(const TransformKind& kind, int n) {
  if (n < kind.first_index()) throw DomainError("index below the transform's index set");
}

// 2^{1-mu} sinh(pi n) / pi^3 * value, combined in log scale.
double lommel_scale(double mu, int n, double value) {
  if (value == 0.0) return 0.0;
  const double log_mag = std::log(std::abs(value)) + log_sinh(kPi * n) + (1.0 - mu) * std::numbers::ln2 -
                         3.0 * std::log(kPi);
  if (log_mag > std::log(std::numeric_limits<double>::max())) {
    throw OverflowError("lommel coefficient scaling overflows");
  }
  return std::copysign(std::exp(log_mag), value);
}

double basis_value(const TransformKind& kind, int n, double x) {
  const NormalizedBesselJ j = bessel_j_imag_normalized(n, x);
  return kind.tag == KindTag::ReJ ? j.re_part : *j.im_part;
}

}  // namespace

TransformKind TransformKind::lommel(double mu) {
  if (!(mu > -1.25 && mu < 0.0)) throw DomainError("TransformKind: Lommel mu must lie in (-5/4, 0)");
  return {KindTag::Lommel, mu};
}

std::string TransformKind::name() const {
  switch (tag) {
    case KindTag::ReJ:
      return "re";
    case KindTag::ImJ:
      return "im";
    case KindTag::Lommel:
      return "lommel";
  }
  return "";
}

CoeffSeq CoeffSeq::make(const TransformKind& kind, int start_index, std::vector<double> coeffs) {
  if (start_index != 0 && start_index != 1) throw DomainError("CoeffSeq: start_index must be 0 or 1");
  if (kind.tag == KindTag::Lommel && start_index != 1) {
    throw DomainError("CoeffSeq: Lommel sequences start at n = 1");
  }
  for (double c : coeffs) {
    if (!std::isfinite(c)) throw DomainError("CoeffSeq: coefficients must be finite");
  }
  CoeffSeq seq;
  seq.start_index = start_index;
  seq.coeffs = std::move(coeffs);
  seq.admissibility = kind.tag == KindTag::Lommel ? Admissibility::Summable : Admissibility::Weighted;
  return seq;
}

double CoeffSeq::at(int n) const {
  const int i = n - start_index;
  if (i < 0 || i >= static_cast<int>(coeffs.size())) return 0.0;
  return coeffs[static_cast<std::size_t>(i)];
}

PeriodicProfile PeriodicProfile::from_coeffs(std::vector<double> cos_coeffs, std::vector<double> sin_coeffs) {
  PeriodicProfile p;
  p.cos_coeffs = std::move(cos_coeffs);
  p.sin_coeffs = std::move(sin_coeffs);
  if (!p.sin_coeffs.empty()) p.sin_coeffs[0] = 0.0;
  bool has_cos = false;
  bool has_sin = false;
  for (std::size_t k = 0; k < p.cos_coeffs.size(); ++k) {
    has_cos = has_cos || p.cos_coeffs[k] != 0.0;
    p.psi_at_zero += p.cos_coeffs[k];
    p.lipschitz_const += static_cast<double>(k) * std::abs(p.cos_coeffs[k]);
  }
  for (std::size_t k = 0; k < p.sin_coeffs.size(); ++k) {
    has_sin = has_sin || p.sin_coeffs[k] != 0.0;
    p.lipschitz_const += static_cast<double>(k) * std::abs(p.sin_coeffs[k]);
  }
  p.parity = has_sin ? (has_cos ? Parity::None : Parity::Odd) : Parity::Even;
  return p;
}

double PeriodicProfile::operator()(double u) const {
  double v = 0.0;
  for (std::size_t k = 0; k < cos_coeffs.size(); ++k) v += cos_coeffs[k] * std::cos(static_cast<double>(k) * u);
  for (std::size_t k = 1; k < sin_coeffs.size(); ++k) v += sin_coeffs[k] * std::sin(static_cast<double>(k) * u);
  return v;
}

QuadConfig finite_config() {
  QuadConfig cfg;
  cfg.abs_tol = 1e-13;
  cfg.rel_tol = 1e-12;
  return cfg;
}

QuadConfig transform_config() {
  QuadConfig cfg;
  cfg.abs_tol = 1e-10;
  cfg.rel_tol = 1e-9;
  cfg.max_panels = 20000;
  return cfg;
}

EvalReport kernel(const TransformKind& kind, int n, double x, const QuadConfig& cfg) {
  if (n < 0) throw DomainError("kernel: n must be nonnegative");
  if (kind.tag == KindTag::Lommel && n < 1) throw DomainError("kernel: Omega_n requires n >= 1");
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("kernel: x must be positive");
  const double shift = 0.5 * kPi * kind.mu;
  RealFunction integrand;
  switch (kind.tag) {
    case KindTag::ReJ:
      integrand = [=](double u) { return std::sin(x * std::cosh(u)) * std::sinh(u) * std::cos(n * u); };
      break;
    case KindTag::ImJ:
      integrand = [=](double u) { return std::cos(x * std::cosh(u)) * std::sinh(u) * std::cos(n * u); };
      break;
    case KindTag::Lommel:
      integrand = [=](double u) { return std::sin(x * std::cosh(u) - shift) * std::sinh(u) * std::sin(n * u); };
      break;
  }
  return integrate_finite(integrand, 0.0, kPi, cfg);
}

Expansion kernel_expansion(const TransformKind& kind, int n) {
  if (n < 0) throw DomainError("kernel_expansion: n must be nonnegative");
  const Complex minus_i(0.0, -1.0);
  switch (kind.tag) {
    case KindTag::ReJ:
      return endpoint_expansion(n, false, minus_i);
    case KindTag::ImJ:
      return endpoint_expansion(n, false, Complex(1.0, 0.0));
    case KindTag::Lommel:
      if (n < 1) throw DomainError("kernel_expansion: Omega_n requires n >= 1");
      return endpoint_expansion(n, true, minus_i * std::exp(Complex(0.0, -0.5 * kPi * kind.mu)));
  }
  return {};
}

AdmissibleFunction synthesized_function(const TransformKind& kind, const CoeffSeq& a) {
  AdmissibleFunction out;
  if (kind.tag == KindTag::Lommel) {
    auto tables = std::make_shared<std::vector<LommelS>>();
    std::vector<double> weights;
    for (int n = 1; n <= a.last_index(); ++n) {
      if (a.at(n) == 0.0) continue;
      tables->emplace_back(kind.mu, n, kLommelTableMin);
      weights.push_back(a.at(n) * tables->back().gamma());
      out.tail += lommel_expansion(kind.mu, n).scaled(weights.back());
    }
    out.f = [tables, weights](double x) {
      x = std::max(x, kLommelTableMin);
      double sum = 0.0;
      for (std::size_t i = 0; i < tables->size(); ++i) sum += weights[i] * (*tables)[i](x).value;
      return sum;
    };
    return out;
  }
  const bool imaginary = kind.tag == KindTag::ImJ;
  if (imaginary && a.at(0) != 0.0) throw DomainError("synthesize: Im transform has no n = 0 term");
  std::vector<std::pair<int, double>> terms;
  for (int n = imaginary ? 1 : 0; n <= a.last_index(); ++n) {
    if (a.at(n) == 0.0) continue;
    terms.emplace_back(n, a.at(n));
    out.tail += bessel_j_expansion(n, imaginary).scaled(a.at(n));
  }
  out.f = [terms, imaginary](double x) {
    double sum = 0.0;
    for (const auto& [n, c] : terms) {
      const NormalizedBesselJ j = bessel_j_imag_normalized(n, x);
      sum += c * (imaginary ? *j.im_part : j.re_part);
    }
    return sum;
  };
  return out;
}

EvalReport synthesize(const TransformKind& kind, const CoeffSeq& a, double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("synthesize: x must be positive");
  EvalReport r;
  if (kind.tag == KindTag::Lommel) {
    for (int n = 1; n <= a.last_index(); ++n) {
      if (a.at(n) == 0.0) continue;
      const LommelValue s = lommel_s(kind.mu, n, x);
      r.value += a.at(n) * s.gamma_product * s.value;
      r.err_est += std::abs(a.at(n) * s.gamma_product) * s.err_est;
    }
    return r;
  }
  const bool imaginary = kind.tag == KindTag::ImJ;
  if (imaginary && a.at(0) != 0.0) throw DomainError("synthesize: Im transform has no n = 0 term");
  for (int n = imaginary ? 1 : 0; n <= a.last_index(); ++n) {
    if (a.at(n) == 0.0) continue;
    const NormalizedBesselJ j = bessel_j_imag_normalized(n, x);
    r.value += a.at(n) * (imaginary ? *j.im_part : j.re_part);
    r.err_est += std::abs(a.at(n)) * j.err_est;
  }
  return r;
}

EvalReport analyze(const TransformKind& kind, const AdmissibleFunction& f, int n, const QuadConfig& cfg) {
  check_index(kind, n);
  if (kind.tag == KindTag::Lommel) {
    const auto s = std::make_shared<LommelS>(kind.mu, n, kLommelTableMin);
    const auto g = [&](double x) { return (*s)(std::max(x, kLommelTableMin)).value * f(x); };
    const Expansion e = lommel_expansion(kind.mu, n) * f.tail;
    EvalReport r = integrate_with_tail(g, e, cfg);
    r.value *= s->gamma();
    r.err_est *= s->gamma();
    return r;
  }
  const auto g = [&](double x) { return basis_value(kind, n, x) * f(x); };
  const Expansion e = bessel_j_expansion(n, kind.tag == KindTag::ImJ) * f.tail;
  return integrate_with_tail(g, e, cfg);
}

EvalReport invert_to_sequence(const TransformKind& kind, const AdmissibleFunction& f, int n,
                              const QuadConfig& cfg) {
  check_index(kind, n);
  const auto g = [&](double x) { return kernel(kind, n, x).value * f(x); };
  const Expansion e = kernel_expansion(kind, n) * f.tail;
  EvalReport r = integrate_with_tail(g, e, cfg);
  switch (kind.tag) {
    case KindTag::ReJ: {
      const double factor = n == 0 ? 1.0 / kPi : 2.0 / kPi;
      r.value *= factor;
      r.err_est *= factor;
      break;
    }
    case KindTag::ImJ:
      r.value *= -2.0 / kPi;
      r.err_est *= 2.0 / kPi;
      break;
    case KindTag::Lommel:
      r.value = lommel_scale(kind.mu, n, r.value);
      r.err_est = std::abs(lommel_scale(kind.mu, n, r.err_est));
      break;
  }
  return r;
}

double correction_term(const TransformKind& kind, double x) {
  if (!(x > 0.0)) throw DomainError("correction_term: x must be positive");
  const double first = std::sin(0.5 * x * (kCoshPi - 1.0));
  const double half_sum = 0.5 * x * (kCoshPi + 1.0);
  switch (kind.tag) {
    case KindTag::ReJ:
      return 2.0 / (x * kPi) * first * std::sin(half_sum);
    case KindTag::ImJ:
      return 2.0 / (x * kPi) * first * std::cos(half_sum);
    case KindTag::Lommel:
      return 0.0;
  }
  return 0.0;
}

EvalReport invert_to_function(const TransformKind& kind, const CoeffSeq& a, double x, double correction_sign,
                              const QuadConfig& cfg) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("invert_to_function: x must be positive");
  EvalReport r;
  if (kind.tag == KindTag::Lommel) {
    for (int n = 1; n <= a.last_index(); ++n) {
      if (a.at(n) == 0.0) continue;
      const EvalReport k = kernel(kind, n, x, cfg);
      r.value += lommel_scale(kind.mu, n, a.at(n) * k.value);
      r.err_est += std::abs(lommel_scale(kind.mu, n, a.at(n) * k.err_est));
      r.panels_used += k.panels_used;
    }
    return r;
  }
  r.value = correction_sign * a.at(0) * correction_term(kind, x);
  const double factor = kind.tag == KindTag::ReJ ? 2.0 / kPi : -2.0 / kPi;
  for (int n = kind.first_index(); n <= a.last_index(); ++n) {
    if (a.at(n) == 0.0) continue;
    const EvalReport k = kernel(kind, n, x, cfg);
    r.value += factor * a.at(n) * k.value;
    r.err_est += std::abs(factor * a.at(n)) * k.err_est;
    r.panels_used += k.panels_used;
  }
  return r;
}

void check_profile(const TransformKind& kind, const PeriodicProfile& psi) {
  if (kind.tag == KindTag::Lommel) return;  // trigonometric polynomials are Lipschitz
  if (psi.parity != Parity::Even) throw DomainError("profile must be even for the Re/Im inversion theorems");
  if (std::abs(psi.psi_at_zero) > 1e-12) throw DomainError("profile must vanish at u = 0");
}

EvalReport build_profile_function(const TransformKind& kind, const PeriodicProfile& psi, double x,
                                  const QuadConfig& cfg) {
  check_profile(kind, psi);
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("build_profile_function: x must be positive");
  switch (kind.tag) {
    case KindTag::ReJ:
      return integrate_finite([&](double u) { return std::sin(x * std::cosh(u)) * psi(u) * std::sinh(u); },
                              0.0, kPi, cfg);
    case KindTag::ImJ:
      return integrate_finite([&](double u) { return std::cos(x * std::cosh(u)) * psi(u) * std::sinh(u); },
                              0.0, kPi, cfg);
    case KindTag::Lommel: {
      const double shift = 0.5 * kPi * kind.mu;
      return integrate_finite(
          [&](double u) { return std::sin(x * std::cosh(u) - shift) * psi(u) * std::sinh(u); }, -kPi, kPi, cfg);
    }
  }
  return {};
}

AdmissibleFunction profile_function(const TransformKind& kind, const PeriodicProfile& psi) {
  check_profile(kind, psi);
  AdmissibleFunction out;
  out.f = [kind, psi](double x) { return build_profile_function(kind, psi, x).value; };
  if (kind.tag == KindTag::Lommel) {
    for (std::size_t k = 1; k < psi.sin_coeffs.size(); ++k) {
      if (psi.sin_coeffs[k] == 0.0) continue;
      out.tail += kernel_expansion(kind, static_cast<int>(k)).scaled(2.0 * psi.sin_coeffs[k]);
    }
    return out;
  }
  for (std::size_t k = 0; k < psi.cos_coeffs.size(); ++k) {
    if (psi.cos_coeffs[k] == 0.0) continue;
    out.tail += kernel_expansion(kind, static_cast<int>(k)).scaled(psi.cos_coeffs[k]);
  }
  return out;
}

double profile_coefficients(const TransformKind& kind, const PeriodicProfile& psi, int n) {
  check_profile(kind, psi);
  if (n < 0) throw DomainError("profile_coefficients: n must be nonnegative");
  const QuadConfig cfg = finite_config();
  if (kind.tag == KindTag::Lommel) {
    if (n < 1) throw DomainError("profile_coefficients: Lommel index starts at 1");
    const double integral =
        integrate_finite([&](double u) { return psi(u) * std::sin(n * u); }, -kPi, kPi, cfg).value;
    if (integral == 0.0) return 0.0;
    const double log_mag = kind.mu * std::numbers::ln2 + 2.0 * std::log(kPi) - log_sinh(kPi * n) +
                           std::log(std::abs(integral));
    return std::copysign(std::exp(log_mag), integral);
  }
  const double integral = integrate_finite([&](double u) { return psi(u) * std::cos(n * u); }, 0.0, kPi, cfg).value;
  return kind.tag == KindTag::ImJ ? -integral : integral;
}

}  // namespace dit
