#include "dit/expansion.hpp"

#include <cmath>

namespace dit {

namespace {

constexpr double kZeroFrequency = 1e-12;
constexpr std::size_t kMaxCoeffs = 90;

bool same_shape(const Mode& a, const Mode& b) {
  return std::abs(a.omega - b.omega) <= kZeroFrequency && std::abs(a.power - b.power) <= 1e-12 &&
         a.exact == b.exact;
}

std::vector<Complex> cauchy(const Mode& a, const Mode& b, bool conj_b) {
  std::size_t len;
  if (a.exact && b.exact) {
    len = a.coeffs.size() + b.coeffs.size() - 1;
  } else if (a.exact) {
    len = b.coeffs.size();
  } else if (b.exact) {
    len = a.coeffs.size();
  } else {
    len = std::min(a.coeffs.size(), b.coeffs.size());
  }
  len = std::min(len, kMaxCoeffs);
  std::vector<Complex> out(len, Complex{});
  for (std::size_t i = 0; i < a.coeffs.size() && i < len; ++i) {
    for (std::size_t j = 0; j < b.coeffs.size() && i + j < len; ++j) {
      out[i + j] += a.coeffs[i] * (conj_b ? std::conj(b.coeffs[j]) : b.coeffs[j]);
    }
  }
  return out;
}

}  // namespace

std::size_t Mode::optimal_terms(double r) const {
  if (exact) return coeffs.size();
  double best = std::numeric_limits<double>::infinity();
  std::size_t best_k = coeffs.size();
  double scale = 1.0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const double term = std::abs(coeffs[k]) * scale;
    if (term != 0.0 && term < best) {
      best = term;
      best_k = k;
    }
    scale /= r;
  }
  return best_k;
}

double Mode::truncation_error(double r) const {
  if (exact) return 0.0;
  const std::size_t k = optimal_terms(r);
  if (k >= coeffs.size()) return 0.0;
  return std::abs(coeffs[k]) * std::pow(r, -power - static_cast<double>(k));
}

Complex Mode::amplitude(Complex z, std::size_t terms) const {
  const Complex w = 1.0 / z;
  Complex sum{};
  for (std::size_t k = std::min(terms, coeffs.size()); k-- > 0;) sum = sum * w + coeffs[k];
  return sum * std::pow(z, -power);
}

void Expansion::add(Mode mode) {
  if (mode.omega < 0.0) {
    // Re[A e^{-i w x}] = Re[conj(A) e^{i w x}]
    mode.omega = -mode.omega;
    for (auto& c : mode.coeffs) c = std::conj(c);
  }
  if (mode.omega <= kZeroFrequency) {
    mode.omega = 0.0;
    for (auto& c : mode.coeffs) c = Complex(c.real(), 0.0);
  }
  for (auto& existing : modes_) {
    if (!same_shape(existing, mode)) continue;
    const std::size_t len = mode.exact ? std::max(existing.coeffs.size(), mode.coeffs.size())
                                       : std::min(existing.coeffs.size(), mode.coeffs.size());
    existing.coeffs.resize(len);
    mode.coeffs.resize(len);
    for (std::size_t k = 0; k < mode.coeffs.size(); ++k) existing.coeffs[k] += mode.coeffs[k];
    return;
  }
  modes_.push_back(std::move(mode));
}

Expansion& Expansion::operator+=(const Expansion& other) {
  for (const auto& m : other.modes_) add(m);
  return *this;
}

Expansion Expansion::scaled(double factor) const {
  Expansion out = *this;
  for (auto& m : out.modes_) {
    for (auto& c : m.coeffs) c *= factor;
  }
  return out;
}

Expansion Expansion::operator*(const Expansion& other) const {
  // Re F * Re G = (Re[F G] + Re[F conj(G)]) / 2
  Expansion out;
  for (const auto& a : modes_) {
    for (const auto& b : other.modes_) {
      const bool exact = a.exact && b.exact;
      Mode sum;
      sum.omega = a.omega + b.omega;
      sum.power = a.power + b.power;
      sum.exact = exact;
      sum.coeffs = cauchy(a, b, false);
      for (auto& c : sum.coeffs) c *= 0.5;
      out.add(std::move(sum));

      Mode diff;
      diff.omega = a.omega - b.omega;
      diff.power = a.power + b.power;
      diff.exact = exact;
      diff.coeffs = cauchy(a, b, true);
      for (auto& c : diff.coeffs) c *= 0.5;
      out.add(std::move(diff));
    }
  }
  return out;
}

double Expansion::value(double x) const {
  double total = 0.0;
  for (const auto& m : modes_) {
    const Complex a = m.amplitude(Complex(x, 0.0), m.optimal_terms(x));
    total += (a * std::exp(Complex(0.0, m.omega * x))).real();
  }
  return total;
}

double Expansion::truncation_error(double x) const {
  double total = 0.0;
  for (const auto& m : modes_) total += m.truncation_error(x);
  return total;
}

EvalReport Expansion::tail_integral(double T, const QuadConfig& cfg) const {
  if (!(T > 0.0)) throw DomainError("tail_integral: T must be positive");
  EvalReport report;
  QuadConfig ray_cfg = cfg;
  ray_cfg.abs_tol = cfg.abs_tol / static_cast<double>(std::max<std::size_t>(modes_.size(), 1));
  for (const auto& m : modes_) {
    const std::size_t terms = m.optimal_terms(T);
    const double trunc = m.truncation_error(T);
    if (m.omega == 0.0) {
      double sum = 0.0;
      for (std::size_t k = 0; k < terms; ++k) {
        if (m.coeffs[k] == Complex{}) continue;
        const double q = m.power + static_cast<double>(k) - 1.0;
        if (!(q > 0.0)) throw DomainError("tail_integral: non-oscillatory term is not integrable");
        sum += m.coeffs[k].real() * std::pow(T, -q) / q;
      }
      report.value += sum;
      report.err_est += trunc * T / std::max(m.power + static_cast<double>(terms) - 1.0, 1.0);
      continue;
    }
    // Rotating [T, inf) onto T + iy: integral = i e^{i w T} * int_0^inf A(T + iy) e^{-w y} dy.
    const Complex phase = Complex(0.0, 1.0) * std::exp(Complex(0.0, m.omega * T));
    const auto g = [&](double y) {
      return (phase * m.amplitude(Complex(T, y), terms)).real() * std::exp(-m.omega * y);
    };
    const EvalReport ray = integrate_expdecay(g, m.omega, ray_cfg);
    report.value += ray.value;
    report.err_est += ray.err_est + trunc / m.omega;
    report.panels_used += ray.panels_used;
    report.converged = report.converged && ray.converged;
  }
  report.converged = report.converged && std::isfinite(report.value);
  return report;
}

double choose_tail_start(const Expansion& e, double tol, double t_min, double t_max) {
  double T = t_min;
  while (T < t_max && e.truncation_error(T) > tol) T *= 2.0;
  return std::min(T, t_max);
}

EvalReport integrate_with_tail(const RealFunction& f, const Expansion& tail, const QuadConfig& cfg,
                               double origin_power) {
  QuadConfig part = cfg;
  part.abs_tol = cfg.abs_tol / 4.0;
  part.rel_tol = cfg.rel_tol / 4.0;
  const double T = choose_tail_start(tail, std::max(part.abs_tol * 1e-2, 1e-16));
  const EvalReport head = integrate_log_origin(f, 1.0, origin_power, part);
  const EvalReport body = integrate_finite(f, 1.0, T, part);
  const EvalReport rest = tail.tail_integral(T, part);

  EvalReport report;
  report.value = head.value + body.value + rest.value;
  report.err_est = head.err_est + body.err_est + rest.err_est;
  report.panels_used = head.panels_used + body.panels_used + rest.panels_used;
  report.converged = std::isfinite(report.value) && report.err_est <= cfg.target(report.value);
  return report;
}

}  // namespace dit
