#include "cvent/formation.hpp"

#include <cmath>
#include <stdexcept>

namespace cvent {

ReducedSpectrum reduced_spectrum(const PtSpectrum& spec) {
  ReducedSpectrum red;
  red.lambda0 = spec.lambda0;
  red.beta = spec.beta;
  red.R = (1.0 + spec.beta) / (1.0 - spec.beta);
  return red;
}

double reduced_eigenvalue(const ReducedSpectrum& red, int n) {
  if (n < 0) throw std::invalid_argument("reduced_eigenvalue: n must be >= 0");
  return red.lambda0 * std::pow(red.beta, 2 * n);
}

double entropy(const ReducedSpectrum& red) {
  const double R = red.R;
  if (std::abs(R - 1.0) < 1e-8) {
    // The printed form divides by R - 1; evaluate through beta instead.
    const double b = red.beta;
    if (b <= 0.0) return 0.0;
    const double b2 = b * b;
    return -std::log1p(-b2) - 2.0 * b2 / (1.0 - b2) * std::log(b);
  }
  return std::log(R) + 2.0 * std::log((1.0 + R) / (2.0 * R)) +
         (R - 1.0) * (R - 1.0) / (2.0 * R) * std::log((R + 1.0) / (R - 1.0));
}

double entropy_series(const ReducedSpectrum& red, double tail) {
  if (!(tail > 0.0)) throw std::invalid_argument("entropy_series: tail must be positive");
  const double q = red.beta * red.beta;
  double sum = 0.0;
  double comp = 0.0;  // Kahan compensation
  double lam = red.lambda0;
  while (lam >= tail) {
    const double term = -lam * std::log(lam);
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    lam *= q;
  }
  return sum;
}

double entanglement_of_formation(const ReducedSpectrum& red) { return entropy(red); }

}  // namespace cvent
