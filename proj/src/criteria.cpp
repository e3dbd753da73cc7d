#include "cvent/criteria.hpp"

#include <cmath>
#include <stdexcept>

namespace cvent {

namespace {

// <u^2> and <v^2> for u = |a| x1 + x2/a, v = |a| p1 - p2/a.
std::pair<double, double> epr_pair_moments(const SecondMoments& m, double a) {
  if (a == 0.0) throw std::invalid_argument("duan test: a must be non-zero");
  const double s = a > 0.0 ? 1.0 : -1.0;  // |a|/a
  const double a2 = a * a;
  const double u2 = a2 * m.xx11 + 2.0 * s * m.xx12 + m.xx22 / a2;
  const double v2 = a2 * m.pp11 - 2.0 * s * m.pp12 + m.pp22 / a2;
  return {u2, v2};
}

}  // namespace

double duan_quadratic(const SecondMoments& mom, double a, double L, double hbar) {
  if (!(L > 0.0) || !(hbar > 0.0))
    throw std::invalid_argument("duan_quadratic: L and hbar must be positive");
  const auto [u2, v2] = epr_pair_moments(mom, a);
  return u2 / (L * L) + L * L * v2 / (hbar * hbar);
}

double duan_improved_product(const SecondMoments& mom, double a, double hbar) {
  if (!(hbar > 0.0))
    throw std::invalid_argument("duan_improved_product: hbar must be positive");
  const auto [u2, v2] = epr_pair_moments(mom, a);
  return std::sqrt(u2 * v2) / hbar;
}

std::pair<DuanResult, DuanResult> duan_products(const SecondMoments& mom, double hbar) {
  if (!(hbar > 0.0))
    throw std::invalid_argument("duan_products: hbar must be positive");
  const double h2 = hbar * hbar;

  DuanResult plus;
  plus.branch = DuanBranch::plus;
  plus.lhs = mom.X_sq * mom.p_sq / h2;
  plus.rhs = 1.0 / 16.0;
  plus.satisfied = plus.lhs >= plus.rhs;

  DuanResult minus;
  minus.branch = DuanBranch::minus;
  minus.lhs = mom.x_sq * mom.P_sq / h2;
  minus.rhs = 1.0;
  minus.satisfied = minus.lhs >= minus.rhs;

  return {plus, minus};
}

std::optional<double> esd_time(const ModelParams& params) {
  params.validate();
  const double gap = 4.0 * params.d * params.d - params.sigma * params.sigma;
  if (gap < 0.0) return std::nullopt;
  return params.mass / params.hbar * std::sqrt(params.sigma * params.sigma * gap);
}

std::pair<DuanResult, DuanResult> duan_locc(const ModelParams& params, double /*t*/) {
  // Barred positions equal their t = 0 values and momenta are conserved,
  // so the result does not depend on t.
  const SecondMoments m0 = moments(make_state(params, 0.0));
  return duan_products(m0, params.hbar);
}

SymplecticResult symplectic_measure(const StandardForm& sf,
                                    const DeterminantInvariants& inv) {
  // The standard form must reproduce the invariants it was derived from.
  const double gh = sf.g * sf.h;
  const double det_m_sf = (gh - sf.c * sf.c) * (gh - sf.c_prime * sf.c_prime);
  if (std::abs(det_m_sf - inv.det_M) > 1e-8 * std::abs(inv.det_M) + 1e-12)
    throw std::domain_error("symplectic_measure: standard form inconsistent with invariants");

  const double delta = inv.det_G + inv.det_H - 2.0 * inv.det_C;
  double disc = delta * delta - 4.0 * inv.det_M;
  if (disc < 0.0) {
    if (disc < -1e-12 * delta * delta)
      throw std::domain_error("symplectic_measure: complex symplectic spectrum");
    disc = 0.0;
  }
  const double x_hi = (delta + std::sqrt(disc)) / 2.0;
  // Smaller root through the product to avoid cancellation when the
  // spectrum is strongly split.
  const double x_lo = x_hi > 0.0 ? inv.det_M / x_hi : 0.0;
  if (!(x_hi > 0.0) || !(x_lo > 0.0))
    throw std::domain_error("symplectic_measure: non-positive symplectic spectrum");

  SymplecticResult res;
  res.nu1 = std::sqrt(x_hi);
  res.nu2 = std::sqrt(x_lo);
  res.nu_min = res.nu2;
  res.E = std::max(0.0, -std::log(2.0 * res.nu_min));
  return res;
}

}  // namespace cvent
