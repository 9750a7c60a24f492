#pragma once

#include <optional>
#include <vector>

#include "dit/core.hpp"
#include "dit/expansion.hpp"

namespace dit {

/// Log-gamma (analytic continuation from the positive axis) for Re z > 0.
/// Throws DomainError when Re z <= 0.
Complex log_gamma_complex(Complex z);

/// |Gamma((1 - mu + i n) / 2)|^2, the product of the conjugate pair
/// Gamma((1-mu-in)/2) Gamma((1-mu+in)/2). Throws OverflowError if it is not
/// representable and DomainError if (1 - mu) / 2 is a nonpositive integer.
double gamma_product(double mu, int n);

/// Normalized Bessel function of imaginary order in:
///   re_part = Re J_{in}(x) / cosh(pi n / 2),  im_part = Im J_{in}(x) / sinh(pi n / 2).
struct NormalizedBesselJ {
  int n = 0;
  double x = 0.0;
  double re_part = 0.0;
  std::optional<double> im_part;  // absent for n = 0
  double err_est = 0.0;
};

struct BesselJOptions {
  double crossover = 30.0;  // ascending series below, Hankel expansion above
  double tol = 1e-13;       // absolute accuracy required of either path
};

NormalizedBesselJ bessel_j_imag_normalized(int n, double x, const BesselJOptions& opt = {});

/// Large-x Hankel expansion of re_part (imaginary = false) or im_part (imaginary = true).
Expansion bessel_j_expansion(int n, bool imaginary);

/// K_{in}(x) from the cosine-Laplace representation, trapezoid rule with step halving.
double bessel_k_imag(int n, double x);

struct LommelValue {
  double mu = 0.0;
  int n = 0;
  double x = 0.0;
  double value = 0.0;
  double gamma_product = 0.0;
  double err_est = 0.0;
};

/// S_{mu,in}(x) for fixed (mu, n) and x >= x_min. K_{in} is tabulated once on a
/// uniform grid in s = log t, and each value is a trapezoid sum of
///   (2x)^{mu+1} / GammaGamma * int_0^inf t^{-mu} K_{in}(t) / (t^2 + x^2) dt.
/// Large x uses the asymptotic series.
class LommelS {
 public:
  LommelS(double mu, int n, double x_min = 1e-3);

  LommelValue operator()(double x) const;
  double mu() const { return mu_; }
  int n() const { return n_; }
  double gamma() const { return gamma_; }
  double x_min() const { return x_min_; }

 private:
  double mu_;
  int n_;
  double x_min_;
  double gamma_;
  double s_lo_;
  double h_;
  std::vector<double> weights_;  // t^{1-mu} K_{in}(t) at the nodes
  std::vector<double> t2_;       // t^2 at the nodes
};

/// Single evaluation of S_{mu,in}(x). Throws DomainError for mu outside (-5/4, 3/4),
/// n < 1 or x <= 0, AccuracyError if the quadrature misses its tolerance.
LommelValue lommel_s(double mu, int n, double x);

/// Non-oscillatory expansion S_{mu,in}(x) ~ x^{mu-1} sum_k (-1)^k prod_{j<=k}((mu-2j+1)^2+n^2) x^{-2k}.
Expansion lommel_expansion(double mu, int n);

}  // namespace dit
