#include <array>
#include <cmath>
#include <limits>

#include "dit/specfun.hpp"

namespace dit {

namespace {

// B_{2k} / (2k (2k-1)), k = 1..10
constexpr std::array<double, 10> kStirling = {
    1.0 / 12.0,   -1.0 / 360.0,         1.0 / 1260.0,       -1.0 / 1680.0,         1.0 / 1188.0,
    -691.0 / 360360.0, 1.0 / 156.0, -3617.0 / 122400.0, 43867.0 / 244188.0, -174611.0 / 125400.0};

constexpr double kStirlingRadius = 10.0;

}  // namespace

Complex log_gamma_complex(Complex z) {
  if (!(z.real() > 0.0) || !std::isfinite(z.imag())) {
    throw DomainError("log_gamma_complex: requires Re z > 0");
  }
  // Recurrence shift. The modulus of the product is logged once to keep rounding
  // at one ulp; the phase is the sum of the individual arguments (branch of the
  // analytic continuation, not the principal log of the product).
  Complex product(1.0, 0.0);
  double phase = 0.0;
  while (std::abs(z) < kStirlingRadius) {
    product *= z;
    phase += std::arg(z);
    z += 1.0;
  }
  const Complex shift_log(std::log(std::abs(product)), phase);
  const Complex w = 1.0 / z;
  const Complex w2 = w * w;
  Complex series{};
  for (std::size_t k = kStirling.size(); k-- > 0;) series = series * w2 + kStirling[k];
  series *= w;
  const Complex lg = (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi) + series;
  return lg - shift_log;
}

double gamma_product(double mu, int n) {
  const double a = 0.5 * (1.0 - mu);
  if (n == 0 && a <= 0.0 && a == std::floor(a)) {
    throw DomainError("gamma_product: (1 - mu) / 2 is a pole of Gamma");
  }
  double log_value;
  if (a > 0.0) {
    log_value = 2.0 * log_gamma_complex(Complex(a, 0.5 * n)).real();
  } else {
    // Shift into Re > 0: |Gamma(z)| = |Gamma(z + m)| / prod |z + k|.
    const int m = static_cast<int>(std::ceil(-a)) + 1;
    const Complex z(a, 0.5 * n);
    double log_shift = 0.0;
    for (int k = 0; k < m; ++k) log_shift += std::log(std::abs(z + static_cast<double>(k)));
    log_value = 2.0 * (log_gamma_complex(z + static_cast<double>(m)).real() - log_shift);
  }
  if (log_value > std::log(std::numeric_limits<double>::max())) {
    throw OverflowError("gamma_product: value exceeds double range");
  }
  return std::exp(log_value);
}

}  // namespace dit
