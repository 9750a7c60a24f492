#include <cmath>

#include "dit/specfun.hpp"

namespace dit {

namespace {

constexpr double kNodeStep = 0.1;
constexpr double kUpperT = 60.0;
constexpr double kAsymptoticStart = 40.0;
constexpr std::size_t kAsymptoticTerms = 80;

void check_lommel_args(double mu, int n) {
  if (!(mu > -1.25 && mu < 0.75)) throw DomainError("lommel: mu must lie in (-5/4, 3/4)");
  if (n < 1) throw DomainError("lommel: n must be >= 1");
}

Mode lommel_mode(double mu, int n) {
  Mode m;
  m.omega = 0.0;
  m.power = 1.0 - mu;
  m.coeffs.assign(kAsymptoticTerms, Complex{});
  double c = 1.0;
  for (std::size_t k = 0; 2 * k < kAsymptoticTerms; ++k) {
    if (k > 0) {
      const double s = mu - 2.0 * static_cast<double>(k) + 1.0;
      c *= -(s * s + static_cast<double>(n) * n);
    }
    m.coeffs[2 * k] = c;
  }
  return m;
}

}  // namespace

Expansion lommel_expansion(double mu, int n) {
  check_lommel_args(mu, n);
  Expansion e;
  e.add(lommel_mode(mu, n));
  return e;
}

LommelS::LommelS(double mu, int n, double x_min) : mu_(mu), n_(n), x_min_(x_min) {
  check_lommel_args(mu, n);
  if (!(x_min > 0.0)) throw DomainError("LommelS: x_min must be positive");
  gamma_ = gamma_product(mu, n);
  h_ = kNodeStep;
  // Below s_lo the integrand t^{1-mu} K / (t^2 + x^2) is below e^{-40} of its peak.
  s_lo_ = std::min(std::log(x_min), 0.0) - 40.0 / (1.0 - mu);
  const double s_hi = std::log(kUpperT);
  const auto count = static_cast<std::size_t>(std::ceil((s_hi - s_lo_) / h_)) + 1;
  weights_.resize(count);
  t2_.resize(count);
  for (std::size_t j = 0; j < count; ++j) {
    const double s = s_lo_ + h_ * static_cast<double>(j);
    const double t = std::exp(s);
    weights_[j] = std::exp((1.0 - mu) * s) * bessel_k_imag(n, t);
    t2_[j] = t * t;
  }
}

LommelValue LommelS::operator()(double x) const {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("LommelS: x must be positive");
  if (x < x_min_) throw DomainError("LommelS: x below the tabulated range");
  LommelValue out;
  out.mu = mu_;
  out.n = n_;
  out.x = x;
  out.gamma_product = gamma_;

  if (x >= kAsymptoticStart) {
    const Mode m = lommel_mode(mu_, n_);
    const double value = m.amplitude(Complex(x, 0.0), m.optimal_terms(x)).real();
    const double err = m.truncation_error(x);
    if (err <= 1e-15 * std::abs(value)) {
      out.value = value;
      out.err_est = err;
      return out;
    }
  }

  const double x2 = x * x;
  double fine = 0.0;
  double coarse = 0.0;
  for (std::size_t j = 0; j < weights_.size(); ++j) {
    const double term = weights_[j] / (t2_[j] + x2);
    fine += term;
    if (j % 2 == 0) coarse += term;
  }
  const double scale = std::exp((mu_ + 1.0) * std::log(2.0 * x)) / gamma_;
  out.value = scale * h_ * fine;
  out.err_est = std::abs(scale * (h_ * fine - 2.0 * h_ * coarse)) + 1e-15 * std::abs(out.value);
  if (!std::isfinite(out.value)) throw AccuracyError("LommelS: quadrature produced a non-finite value");
  return out;
}

LommelValue lommel_s(double mu, int n, double x) {
  check_lommel_args(mu, n);
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("lommel_s: x must be positive");
  const LommelS s(mu, n, std::min(x, 1.0));
  const LommelValue v = s(x);
  if (!(v.err_est <= 1e-10 * std::max(1.0, std::abs(v.value)))) {
    throw AccuracyError("lommel_s: quadrature missed its tolerance");
  }
  return v;
}

}  // namespace dit
