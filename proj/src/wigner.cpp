#include "cvent/wigner.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "cvent/quadrature.hpp"

namespace cvent {

WignerSpec WignerSpec::symmetric(const ModelParams& params, bool transposed) {
  params.validate();
  WignerSpec s;
  s.a11 = s.a22 = 1.0 / (params.sigma * params.sigma) + 1.0 / (4.0 * params.d * params.d);
  s.a12 = -1.0 / (params.sigma * params.sigma) + 1.0 / (4.0 * params.d * params.d);
  s.hbar = params.hbar;
  s.transposed = transposed;
  return s;
}

void WignerSpec::validate() const {
  if (!(a11 > 0.0) || !(a22 > 0.0) || !(a11 * a22 - a12 * a12 > 0.0) || !(hbar > 0.0))
    throw std::domain_error("WignerSpec: need a11, a22 > 0 and a11 a22 - a12^2 > 0");
}

double wigner_value(const WignerSpec& s, const PhaseSpacePoint& pt) {
  s.validate();
  const double a12p = s.transposed ? -s.a12 : s.a12;
  const double det = s.a11 * s.a22 - s.a12 * s.a12;
  const double h2 = s.hbar * s.hbar;
  const double qform =
      s.a11 * pt.q1 * pt.q1 + 2.0 * s.a12 * pt.q1 * pt.q2 + s.a22 * pt.q2 * pt.q2;
  const double pform =
      s.a22 * pt.p1 * pt.p1 - 2.0 * a12p * pt.p1 * pt.p2 + s.a11 * pt.p2 * pt.p2;
  return 1.0 / (M_PI * M_PI * h2) * std::exp(-0.5 * qform - 2.0 * pform / (h2 * det));
}

double characteristic_value(const WignerSpec& s, double Q1, double P1, double Q2,
                            double P2) {
  s.validate();
  const double a12q = s.transposed ? -s.a12 : s.a12;
  const double det = s.a11 * s.a22 - s.a12 * s.a12;
  const double h2 = s.hbar * s.hbar;
  const double qform = s.a11 * Q1 * Q1 + 2.0 * a12q * Q1 * Q2 + s.a22 * Q2 * Q2;
  const double pform = s.a22 * P1 * P1 - 2.0 * s.a12 * P1 * P2 + s.a11 * P2 * P2;
  return std::exp(-qform / 8.0 - pform / (2.0 * det * h2));
}

PtUncertaintyCheck pt_uncertainty_check(const SecondMoments& mom, double hbar) {
  if (!(hbar > 0.0))
    throw std::invalid_argument("pt_uncertainty_check: hbar must be positive");
  const double dx2 = mom.xx11 - 2.0 * mom.xx12 + mom.xx22;
  // The moment swap under the transpose: <(p1-p2)^2> becomes <(p1+p2)^2>.
  const double dp2 = mom.pp11 + 2.0 * mom.pp12 + mom.pp22;
  PtUncertaintyCheck chk;
  chk.product = std::sqrt(dx2 * dp2);
  chk.passes = chk.product >= hbar;
  return chk;
}

namespace {

// Per-axis Gauss-Hermite rules along the principal axes of one 2x2
// positive quadratic form (density ~ exp(-v' F v / 2)).
struct BlockAxes {
  Eigen::Matrix2d rot;    // columns are the principal directions
  double scale[2];        // per-direction substitution factor sqrt(2/lambda)
};

BlockAxes principal_axes(const Eigen::Matrix2d& form) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(form);
  if (!(es.eigenvalues()(0) > 0.0))
    throw std::domain_error("wigner quadrature: quadratic form not positive definite");
  BlockAxes ax;
  ax.rot = es.eigenvectors();
  ax.scale[0] = std::sqrt(2.0 / es.eigenvalues()(0));
  ax.scale[1] = std::sqrt(2.0 / es.eigenvalues()(1));
  return ax;
}

Eigen::Matrix2d q_form(const WignerSpec& s) {
  Eigen::Matrix2d f;
  f << s.a11, s.a12, s.a12, s.a22;
  return f;
}

Eigen::Matrix2d p_form(const WignerSpec& s) {
  const double a12p = s.transposed ? -s.a12 : s.a12;
  const double det = s.a11 * s.a22 - s.a12 * s.a12;
  const double c = 4.0 / (s.hbar * s.hbar * det);
  Eigen::Matrix2d f;
  f << c * s.a22, -c * a12p, -c * a12p, c * s.a11;
  return f;
}

// Full 4D pass: calls fn(point, weight) on every node of the product rule.
template <typename Fn>
void for_each_node(const WignerSpec& s, int n, Fn&& fn) {
  if (n < 2) throw std::invalid_argument("wigner quadrature: need at least 2 nodes per axis");
  const Quadrature gh = gauss_hermite_scaled(n);
  const BlockAxes q = principal_axes(q_form(s));
  const BlockAxes p = principal_axes(p_form(s));
  const double jac = q.scale[0] * q.scale[1] * p.scale[0] * p.scale[1];
  for (int i = 0; i < n; ++i) {
    const double ui = gh.nodes[i] * q.scale[0];
    for (int j = 0; j < n; ++j) {
      const double uj = gh.nodes[j] * q.scale[1];
      PhaseSpacePoint pt;
      pt.q1 = q.rot(0, 0) * ui + q.rot(0, 1) * uj;
      pt.q2 = q.rot(1, 0) * ui + q.rot(1, 1) * uj;
      const double wq = gh.weights[i] * gh.weights[j];
      for (int k = 0; k < n; ++k) {
        const double vk = gh.nodes[k] * p.scale[0];
        for (int l = 0; l < n; ++l) {
          const double vl = gh.nodes[l] * p.scale[1];
          pt.p1 = p.rot(0, 0) * vk + p.rot(0, 1) * vl;
          pt.p2 = p.rot(1, 0) * vk + p.rot(1, 1) * vl;
          fn(pt, wq * gh.weights[k] * gh.weights[l] * jac);
        }
      }
    }
  }
}

}  // namespace

double wigner_quadrature_normalization(const WignerSpec& spec, int nodes_per_axis) {
  double total = 0.0;
  for_each_node(spec, nodes_per_axis, [&](const PhaseSpacePoint& pt, double w) {
    total += w * wigner_value(spec, pt);
  });
  return total;
}

SecondMoments wigner_quadrature_moments(const WignerSpec& spec, int nodes_per_axis) {
  double q1q1 = 0, q2q2 = 0, q1q2 = 0;
  double p1p1 = 0, p2p2 = 0, p1p2 = 0;
  double q1p1 = 0, q2p2 = 0, q1p2 = 0, q2p1 = 0;
  for_each_node(spec, nodes_per_axis, [&](const PhaseSpacePoint& pt, double w) {
    const double f = w * wigner_value(spec, pt);
    q1q1 += f * pt.q1 * pt.q1;
    q2q2 += f * pt.q2 * pt.q2;
    q1q2 += f * pt.q1 * pt.q2;
    p1p1 += f * pt.p1 * pt.p1;
    p2p2 += f * pt.p2 * pt.p2;
    p1p2 += f * pt.p1 * pt.p2;
    q1p1 += f * pt.q1 * pt.p1;
    q2p2 += f * pt.q2 * pt.p2;
    q1p2 += f * pt.q1 * pt.p2;
    q2p1 += f * pt.q2 * pt.p1;
  });
  SecondMoments m;
  m.xx11 = q1q1;
  m.xx22 = q2q2;
  m.xx12 = q1q2;
  m.pp11 = p1p1;
  m.pp22 = p2p2;
  m.pp12 = p1p2;
  // Phase-space averages of qp products correspond to the symmetrized
  // operator moments.
  m.xp11_sym = q1p1;
  m.xp22_sym = q2p2;
  m.xp12 = q1p2;
  m.xp21 = q2p1;
  m.x_sq = q1q1 - 2.0 * q1q2 + q2q2;
  m.X_sq = 0.25 * (q1q1 + 2.0 * q1q2 + q2q2);
  m.p_sq = 0.25 * (p1p1 - 2.0 * p1p2 + p2p2);
  m.P_sq = p1p1 + 2.0 * p1p2 + p2p2;
  return m;
}

double wigner_marginal_position_density(const WignerSpec& spec, double q1, double q2,
                                        int nodes_per_axis) {
  if (nodes_per_axis < 2)
    throw std::invalid_argument("wigner quadrature: need at least 2 nodes per axis");
  const Quadrature gh = gauss_hermite_scaled(nodes_per_axis);
  const BlockAxes p = principal_axes(p_form(spec));
  const double jac = p.scale[0] * p.scale[1];
  PhaseSpacePoint pt;
  pt.q1 = q1;
  pt.q2 = q2;
  double total = 0.0;
  for (int k = 0; k < nodes_per_axis; ++k) {
    const double vk = gh.nodes[k] * p.scale[0];
    for (int l = 0; l < nodes_per_axis; ++l) {
      const double vl = gh.nodes[l] * p.scale[1];
      pt.p1 = p.rot(0, 0) * vk + p.rot(0, 1) * vl;
      pt.p2 = p.rot(1, 0) * vk + p.rot(1, 1) * vl;
      total += gh.weights[k] * gh.weights[l] * jac * wigner_value(spec, pt);
    }
  }
  return total;
}

std::complex<double> characteristic_by_quadrature(const WignerSpec& spec, double Q1,
                                                  double P1, double Q2, double P2,
                                                  int nodes_per_axis) {
  std::complex<double> total = 0.0;
  const std::complex<double> iu(0.0, 1.0);
  for_each_node(spec, nodes_per_axis, [&](const PhaseSpacePoint& pt, double w) {
    const double phase =
        (pt.q1 * P1 + pt.q2 * P2 + pt.p1 * Q1 + pt.p2 * Q2) / spec.hbar;
    total += w * wigner_value(spec, pt) * std::exp(iu * phase);
  });
  return total;
}

}  // namespace cvent
