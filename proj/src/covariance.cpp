#include "cvent/covariance.hpp"

#include <cmath>
#include <stdexcept>

namespace cvent {

namespace {
constexpr double kRelTol = 1e-10;
constexpr double kAbsFloor = 1e-14;
}  // namespace

CovarianceMatrix build_covariance(const SecondMoments& mom, double L, double hbar) {
  if (!(L > 0.0) || !(hbar > 0.0))
    throw std::invalid_argument("build_covariance: L and hbar must be positive");

  const double L2 = L * L;
  const double h2 = hbar * hbar;
  CovarianceMatrix cov;
  cov.L = L;
  cov.hbar = hbar;
  cov.G << mom.xx11 / L2, mom.xp11_sym / hbar,  //
      mom.xp11_sym / hbar, L2 * mom.pp11 / h2;
  cov.H << mom.xx22 / L2, mom.xp22_sym / hbar,  //
      mom.xp22_sym / hbar, L2 * mom.pp22 / h2;
  cov.C << mom.xx12 / L2, mom.xp12 / hbar,  //
      mom.xp21 / hbar, L2 * mom.pp12 / h2;
  cov.M.topLeftCorner<2, 2>() = cov.G;
  cov.M.topRightCorner<2, 2>() = cov.C;
  cov.M.bottomLeftCorner<2, 2>() = cov.C.transpose();
  cov.M.bottomRightCorner<2, 2>() = cov.H;
  return cov;
}

DeterminantInvariants invariants(const CovarianceMatrix& cov) {
  DeterminantInvariants inv;
  inv.det_G = cov.G.determinant();
  inv.det_H = cov.H.determinant();
  inv.det_C = cov.C.determinant();
  inv.det_M = cov.M.determinant();
  return inv;
}

StandardForm standard_form_from_invariants(const DeterminantInvariants& inv) {
  if (!(inv.det_G > 0.0) || !(inv.det_H > 0.0))
    throw std::domain_error("standard_form: det G and det H must be positive");

  StandardForm sf;
  sf.g = std::sqrt(inv.det_G);
  sf.h = std::sqrt(inv.det_H);
  const double gh = sf.g * sf.h;

  // c^2 and c'^2 are the roots of
  //   gh y^2 - (g^2 h^2 + detC^2 - detM) y + gh detC^2 = 0.
  const double b = gh * gh + inv.det_C * inv.det_C - inv.det_M;
  double disc = b * b - 4.0 * gh * gh * inv.det_C * inv.det_C;
  // A repeated root (the generic situation for symmetric states, where
  // c'^2 = c^2) makes sqrt(disc) lose half the working precision; clamp
  // near-zero discriminants to the exact double root.
  if (disc < 1e-10 * b * b) disc = 0.0;

  const double y_hi = (b + std::sqrt(disc)) / (2.0 * gh);
  const double y_lo = y_hi > 0.0 ? (inv.det_C * inv.det_C) / y_hi : 0.0;

  auto assemble = [&](double y) -> StandardForm {
    StandardForm out = sf;
    out.c = std::sqrt(std::max(y, 0.0));
    out.c_prime = out.c != 0.0 ? inv.det_C / out.c : 0.0;
    return out;
  };
  auto residual = [&](const StandardForm& f) {
    return std::abs((gh - f.c * f.c) * (gh - f.c_prime * f.c_prime) - inv.det_M);
  };

  const double tol = kRelTol * std::abs(inv.det_M) + kAbsFloor;
  StandardForm cand = assemble(y_hi);
  if (residual(cand) <= tol) return cand;
  cand = assemble(y_lo);
  if (residual(cand) <= tol) return cand;
  throw std::domain_error(
      "standard_form: determinant invariants are mutually inconsistent");
}

StandardForm standard_form(const CovarianceMatrix& cov) {
  return standard_form_from_invariants(invariants(cov));
}

}  // namespace cvent
