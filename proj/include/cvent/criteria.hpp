#pragma once

#include <optional>
#include <utility>

#include "cvent/covariance.hpp"
#include "cvent/model.hpp"

namespace cvent {

enum class DuanBranch { plus, minus };

// One EPR-pair separability inequality. satisfied means the bound holds
// (the test does not detect entanglement); a violation certifies that the
// state is entangled.
struct DuanResult {
  double lhs = 0;
  double rhs = 0;
  bool satisfied = false;
  DuanBranch branch = DuanBranch::plus;
};

struct SymplecticResult {
  double nu1 = 0;     // larger partial-transpose symplectic eigenvalue
  double nu2 = 0;     // smaller one
  double nu_min = 0;  // = nu2
  double E = 0;       // max{0, -ln(2 nu_min)}
};

// Sum form of the EPR uncertainty test with u = |a| x1 + x2/a and
// v = |a| p1 - p2/a:
//   (1/L^2) <u^2> + (L^2/hbar^2) <v^2>,
// to be compared against a^2 + 1/a^2 by the caller.
double duan_quadratic(const SecondMoments& mom, double a, double L, double hbar);

// L-minimum of the sum form over L (by AM-GM): sqrt(<u^2><v^2>)/hbar.
// Separability requires twice this value to be >= a^2 + 1/a^2.
double duan_improved_product(const SecondMoments& mom, double a, double hbar);

// The two product tests at the optimal a = +1 / a = -1:
//   plus:  <X^2><p^2> >= hbar^2/16
//   minus: <x^2><P^2> >= hbar^2.
// Both sides are returned divided by hbar^2.
std::pair<DuanResult, DuanResult> duan_products(const SecondMoments& mom, double hbar);

// Instant at which the (uncorrected) minus-branch test stops detecting
// entanglement: t_d = (m/hbar) sqrt(sigma^2 (4d^2 - sigma^2)).
// Empty when 2d < sigma (the minus branch is never violated there).
std::optional<double> esd_time(const ModelParams& params);

// Product tests after the local canonical transformation that undoes the
// free spreading (x_i -> x_i - t p_i / m). Position moments revert to
// their t = 0 values, momenta are conserved, so the verdicts are
// time-independent: they reduce to 2d >= sigma and sigma >= 2d.
std::pair<DuanResult, DuanResult> duan_locc(const ModelParams& params, double t);

// PPT measure from the symplectic spectrum of the partially transposed
// covariance matrix: nu^2 solve
//   x^2 - (detG + detH - 2 detC) x + detM = 0
// (the transpose flips the sign of det C), and E = max{0, -ln(2 nu_min)}.
SymplecticResult symplectic_measure(const StandardForm& sf,
                                    const DeterminantInvariants& inv);

}  // namespace cvent
