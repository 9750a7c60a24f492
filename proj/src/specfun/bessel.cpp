#include <cmath>
#include <limits>

#include "dit/specfun.hpp"

namespace dit {

namespace {

using Quad = __float128;

constexpr std::size_t kHankelTerms = 80;

struct SeriesSum {
  Complex sum;
  double max_term;
};

// sum_k q_k with q_0 = 1, q_k = q_{k-1} (-(x/2)^2) / (k (k + in)), so that
//   J_{in}(x) = (x/2)^{in} / Gamma(1+in) * sum_k q_k.
// Carried in binary128 since the terms reach e^x / sqrt(x) before cancelling.
SeriesSum ascending_sum(int n, double x) {
  const Quad nq = n;
  const Quad z2 = -static_cast<Quad>(x) * static_cast<Quad>(x) / 4;
  Quad sum_re = 1;
  Quad sum_im = 0;
  Quad q_re = 1;
  Quad q_im = 0;
  Quad max_term = 1;
  for (int k = 1; k < 4000; ++k) {
    const Quad kq = k;
    // q *= z2 (k - in) / (k (k^2 + n^2))
    const Quad scale = z2 / (kq * (kq * kq + nq * nq));
    const Quad re = (q_re * kq + q_im * nq) * scale;
    const Quad im = (q_im * kq - q_re * nq) * scale;
    q_re = re;
    q_im = im;
    sum_re += q_re;
    sum_im += q_im;
    const Quad mag = (q_re < 0 ? -q_re : q_re) + (q_im < 0 ? -q_im : q_im);
    if (mag > max_term) max_term = mag;
    if (k > x && mag < static_cast<Quad>(1e-34) * max_term) break;
  }
  return {Complex(static_cast<double>(sum_re), static_cast<double>(sum_im)), static_cast<double>(max_term)};
}

// (x/2)^{in} / (Gamma(1+in) * norm), norm = cosh(pi n/2) or sinh(pi n/2), in log scale.
Complex series_prefactor(int n, double x, bool sinh_norm) {
  const double norm_log = n == 0 ? 0.0 : (sinh_norm ? log_sinh(0.5 * kPi * n) : log_cosh(0.5 * kPi * n));
  // |Gamma(1+in)|^2 = pi n / sinh(pi n) supplies the modulus exactly.
  const double log_modulus = n == 0 ? 0.0 : 0.5 * (std::log(kPi * n) - log_sinh(kPi * n));
  const double phase = n == 0 ? 0.0 : log_gamma_complex(Complex(1.0, static_cast<double>(n))).imag();
  return std::exp(Complex(-log_modulus - norm_log, n * std::log(0.5 * x) - phase));
}

double series_error(const Complex& prefactor, const SeriesSum& s) {
  return std::abs(prefactor) * (s.max_term * 1e-32 +
                                32.0 * std::numeric_limits<double>::epsilon() * std::abs(s.sum));
}

Mode hankel_mode(int n, bool imaginary) {
  Mode m;
  m.omega = 1.0;
  m.power = 0.5;
  m.coeffs.resize(kHankelTerms);
  // sqrt(2/pi) e^{-i pi/4} i^k a_k, with a_k the Hankel coefficients for nu^2 = -n^2.
  Complex lead = std::sqrt(2.0 / kPi) * std::exp(Complex(0.0, -0.25 * kPi));
  if (imaginary) lead *= Complex(0.0, -1.0);
  double a = 1.0;
  Complex ik(1.0, 0.0);
  for (std::size_t k = 0; k < kHankelTerms; ++k) {
    if (k > 0) {
      const double odd = 2.0 * static_cast<double>(k) - 1.0;
      a *= -(4.0 * n * n + odd * odd) / (8.0 * static_cast<double>(k));
      ik *= Complex(0.0, 1.0);
    }
    m.coeffs[k] = lead * ik * a;
  }
  return m;
}

}  // namespace

Expansion bessel_j_expansion(int n, bool imaginary) {
  if (n < 0) throw DomainError("bessel_j_expansion: n must be nonnegative");
  if (imaginary && n == 0) throw DomainError("bessel_j_expansion: im_part requires n >= 1");
  Expansion e;
  e.add(hankel_mode(n, imaginary));
  return e;
}

NormalizedBesselJ bessel_j_imag_normalized(int n, double x, const BesselJOptions& opt) {
  if (n < 0) throw DomainError("bessel_j_imag_normalized: n must be nonnegative");
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("bessel_j_imag_normalized: x must be positive");
  NormalizedBesselJ out;
  out.n = n;
  out.x = x;

  if (x > opt.crossover) {
    const Mode re_mode = hankel_mode(n, false);
    const double err = re_mode.truncation_error(x);
    if (err <= opt.tol) {
      const Complex a = re_mode.amplitude(Complex(x, 0.0), re_mode.optimal_terms(x));
      const Complex v = a * std::exp(Complex(0.0, x));
      out.re_part = v.real();
      // im_part = Re[-i A e^{ix}] = Im[A e^{ix}]
      if (n >= 1) out.im_part = v.imag();
      out.err_est = err + 4.0 * std::numeric_limits<double>::epsilon() * std::abs(a);
      return out;
    }
  }

  const SeriesSum sum = ascending_sum(n, x);
  const Complex pc = series_prefactor(n, x, false);
  out.re_part = (pc * sum.sum).real();
  out.err_est = series_error(pc, sum);
  if (n >= 1) {
    const Complex ps = series_prefactor(n, x, true);
    out.im_part = (ps * sum.sum).imag();
    out.err_est = std::max(out.err_est, series_error(ps, sum));
  }
  if (!(out.err_est <= opt.tol)) {
    throw AccuracyError("bessel_j_imag_normalized: tolerance unreachable at this (n, x)");
  }
  return out;
}

double bessel_k_imag(int n, double x) {
  if (n < 0) throw DomainError("bessel_k_imag: n must be nonnegative");
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("bessel_k_imag: x must be positive");
  // Integrand is even and analytic in t, so the trapezoid rule converges geometrically.
  const double t_max = std::acosh(1.0 + 745.0 / x);
  const auto f = [&](double t) { return std::exp(-x * std::cosh(t)) * std::cos(n * t); };
  double h = std::min(0.25, t_max / 4.0);
  int count = static_cast<int>(std::ceil(t_max / h));
  h = t_max / count;
  double sum = 0.5 * f(0.0);
  double abs_sum = std::abs(sum);
  for (int j = 1; j <= count; ++j) {
    const double v = f(j * h);
    sum += v;
    abs_sum += std::abs(v);
  }
  double estimate = h * sum;
  for (int level = 0; level < 16; ++level) {
    double odd = 0.0;
    for (int j = 0; j < count; ++j) {
      const double v = f((2 * j + 1) * 0.5 * h);
      odd += v;
      abs_sum += std::abs(v);
    }
    sum += odd;
    count *= 2;
    h *= 0.5;
    const double refined = h * sum;
    const double diff = std::abs(refined - estimate);
    estimate = refined;
    if (diff <= 1e-14 * h * abs_sum) return estimate;
  }
  throw AccuracyError("bessel_k_imag: trapezoid rule did not converge");
}

}  // namespace dit
