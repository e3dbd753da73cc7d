#pragma once

#include <complex>

namespace cvent {

// Symmetric two-particle Gaussian pure state
//
//   psi(x1, x2; 0) ~ exp{ -(x1-x2)^2 / (4 sigma^2) - (x1+x2)^2 / (16 d^2) },
//
// evolved exactly under free-particle dynamics. sigma is the width of the
// relative coordinate, d the width of the center of mass. The state is
// entangled iff 2d != sigma.
struct ModelParams {
  double sigma = 1.0;
  double d = 1.0;
  double mass = 1.0;
  double hbar = 1.0;

  // Width ratio R = 2d/sigma. R != 1 signals entanglement.
  double ratio() const { return 2.0 * d / sigma; }

  // Throws std::invalid_argument on non-positive input.
  void validate() const;
};

// Time-evolved state. The exponent of the wave function in the (x1, x2)
// basis is -(A11 x1^2 + 2 A12 x1 x2 + A22 x2^2) / 4 with A22 = A11 by
// symmetry; the real parts reproduce the spreading coefficients a11(t),
// a12(t).
struct EvolvedState {
  ModelParams params;
  double t = 0.0;
  double sigma_sq_t = 0.0;    // sigma^2(t), relative-coordinate variance
  double sigma_d_sq_t = 0.0;  // sigma_d^2(t), center-of-mass variance
  std::complex<double> A11, A12, A22;
};

// All first moments vanish; the second moments below fully characterize
// the state. xp11_sym is the symmetrized <x1 p1 + p1 x1>/2.
struct SecondMoments {
  double xx11 = 0, xx22 = 0, xx12 = 0;
  double pp11 = 0, pp22 = 0, pp12 = 0;
  double xp12 = 0, xp21 = 0;          // <x1 p2>, <x2 p1>
  double xp11_sym = 0, xp22_sym = 0;  // <x_i p_i + p_i x_i>/2
  // Relative and center-of-mass moments: x = x1 - x2, X = (x1 + x2)/2,
  // p = (p1 - p2)/2, P = p1 + p2.
  double x_sq = 0, X_sq = 0, p_sq = 0, P_sq = 0;
};

EvolvedState make_state(const ModelParams& params, double t);

// a11(t) = 1/sigma^2(t) + 1/(4 sigma_d^2(t))
double coeff_a11(const EvolvedState& state);
// a12(t) = -1/sigma^2(t) + 1/(4 sigma_d^2(t)); decays to zero, so it is
// not a faithful witness of the (constant) entanglement.
double coeff_a12(const EvolvedState& state);

SecondMoments moments(const EvolvedState& state);

// psi(x1, x2; t), exact free propagation of the initial Gaussian.
std::complex<double> wavefunction(const EvolvedState& state, double x1, double x2);

}  // namespace cvent
