#include "cvent/model.hpp"

#include <cmath>
#include <stdexcept>

namespace cvent {

void ModelParams::validate() const {
  if (!(sigma > 0.0) || !(d > 0.0) || !(mass > 0.0) || !(hbar > 0.0))
    throw std::invalid_argument(
        "ModelParams: sigma, d, mass and hbar must all be positive");
}

EvolvedState make_state(const ModelParams& params, double t) {
  params.validate();
  EvolvedState s;
  s.params = params;
  s.t = t;
  const double tau_rel = params.hbar * t / (params.mass * params.sigma * params.sigma);
  const double tau_cm = params.hbar * t / (4.0 * params.mass * params.d * params.d);
  s.sigma_sq_t = params.sigma * params.sigma * (1.0 + tau_rel * tau_rel);
  s.sigma_d_sq_t = params.d * params.d * (1.0 + tau_cm * tau_cm);

  // Complex spreading widths of the relative and center-of-mass packets.
  const std::complex<double> u(params.sigma * params.sigma, params.hbar * t / params.mass);
  const std::complex<double> w(params.d * params.d, params.hbar * t / (4.0 * params.mass));
  s.A11 = 1.0 / u + 1.0 / (4.0 * w);
  s.A12 = -1.0 / u + 1.0 / (4.0 * w);
  s.A22 = s.A11;
  return s;
}

double coeff_a11(const EvolvedState& s) {
  return 1.0 / s.sigma_sq_t + 1.0 / (4.0 * s.sigma_d_sq_t);
}

double coeff_a12(const EvolvedState& s) {
  return -1.0 / s.sigma_sq_t + 1.0 / (4.0 * s.sigma_d_sq_t);
}

SecondMoments moments(const EvolvedState& s) {
  const ModelParams& p = s.params;
  const double plus = 1.0 / (p.sigma * p.sigma) + 1.0 / (4.0 * p.d * p.d);
  const double minus = -1.0 / (p.sigma * p.sigma) + 1.0 / (4.0 * p.d * p.d);
  const double ht2m = p.hbar * s.t / (2.0 * p.mass);
  const double sd2 = p.sigma * p.sigma * p.d * p.d;
  const double hh4 = p.hbar * p.hbar / 4.0;
  const double hht4m = p.hbar * p.hbar * s.t / (4.0 * p.mass);

  SecondMoments m;
  m.xx11 = m.xx22 = plus * (sd2 + ht2m * ht2m);
  m.xx12 = minus * (ht2m * ht2m - sd2);
  m.pp11 = m.pp22 = hh4 * plus;
  m.pp12 = hh4 * minus;
  m.xp12 = m.xp21 = hht4m * minus;
  m.xp11_sym = m.xp22_sym = hht4m * plus;
  m.x_sq = s.sigma_sq_t;
  m.X_sq = s.sigma_d_sq_t;
  m.p_sq = p.hbar * p.hbar / (4.0 * p.sigma * p.sigma);
  m.P_sq = p.hbar * p.hbar / (4.0 * p.d * p.d);
  return m;
}

std::complex<double> wavefunction(const EvolvedState& s, double x1, double x2) {
  const ModelParams& p = s.params;
  const std::complex<double> u(p.sigma * p.sigma, p.hbar * s.t / p.mass);
  const std::complex<double> w(p.d * p.d, p.hbar * s.t / (4.0 * p.mass));
  const double x = x1 - x2;
  const double X = 0.5 * (x1 + x2);
  // Principal square roots are safe: u and w stay in the right half-plane.
  const std::complex<double> pref =
      std::sqrt(p.sigma * p.d / (2.0 * M_PI)) / (std::sqrt(u) * std::sqrt(w));
  return pref * std::exp(-x * x / (4.0 * u) - X * X / (4.0 * w));
}

}  // namespace cvent
