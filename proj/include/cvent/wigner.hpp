#pragma once

#include <complex>

#include "cvent/model.hpp"

namespace cvent {

struct PhaseSpacePoint {
  double q1 = 0, p1 = 0, q2 = 0, p2 = 0;
};

// Quadratic-form data of the pure-state Wigner function at t = 0 and of
// its Peres partial transpose (p2 -> -p2 in phase space, equivalently
// Q2 -> -Q2 for the characteristic function).
struct WignerSpec {
  double a11 = 0, a12 = 0, a22 = 0;
  double hbar = 1.0;
  bool transposed = false;

  static WignerSpec symmetric(const ModelParams& params, bool transposed = false);
  void validate() const;
};

// W(q1,p1;q2,p2); for transposed specs the p-block cross term flips sign.
double wigner_value(const WignerSpec& spec, const PhaseSpacePoint& pt);

// Characteristic function (Fourier transform of W, unit at the origin);
// for transposed specs the Q-block cross term flips sign.
double characteristic_value(const WignerSpec& spec, double Q1, double P1,
                            double Q2, double P2);

struct PtUncertaintyCheck {
  double product = 0;  // sqrt(<(x1-x2)^2> <(p1+p2)^2>)
  bool passes = false; // product >= hbar: transpose is an admissible Wigner function
};

// Uncertainty test on the transposed Wigner function. Under the transpose
// <(p1-p2)^2> turns into <(p1+p2)^2>, so failure (product < hbar) certifies
// entanglement; the verdict coincides with the minus-branch product test.
PtUncertaintyCheck pt_uncertainty_check(const SecondMoments& mom, double hbar);

// Quadrature oracles. Gauss-Hermite along the principal axes of the q and
// p blocks; the integrand always goes through wigner_value.
double wigner_quadrature_normalization(const WignerSpec& spec, int nodes_per_axis = 40);
SecondMoments wigner_quadrature_moments(const WignerSpec& spec, int nodes_per_axis = 40);

// Position density integral W dp1 dp2 at fixed (q1, q2); equals
// |psi(q1,q2)|^2.
double wigner_marginal_position_density(const WignerSpec& spec, double q1, double q2,
                                        int nodes_per_axis = 40);

// Fourier transform of W evaluated by quadrature; converges to
// characteristic_value.
std::complex<double> characteristic_by_quadrature(const WignerSpec& spec, double Q1,
                                                  double P1, double Q2, double P2,
                                                  int nodes_per_axis = 40);

}  // namespace cvent
