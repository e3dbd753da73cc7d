#pragma once

#include <Eigen/Dense>

#include "cvent/model.hpp"

namespace cvent {

// Dimensionless 4x4 second-moment (variance) matrix in the ordering
// (L p1/hbar, x1/L, L p2/hbar, x2/L), assembled from 2x2 blocks
//
//   M = [ G   C  ]
//       [ C^T H  ].
//
// L is a length scale that cancels from every determinant.
struct CovarianceMatrix {
  double L = 1.0;
  double hbar = 1.0;
  Eigen::Matrix2d G, H, C;
  Eigen::Matrix4d M;
};

struct DeterminantInvariants {
  double det_G = 0, det_H = 0, det_C = 0, det_M = 0;
};

// Parameters (g, h, c, c') of the canonical form reachable by local
// symplectic transformations. For this state family c >= 0 and c' = -c.
struct StandardForm {
  double g = 0, h = 0, c = 0, c_prime = 0;
};

CovarianceMatrix build_covariance(const SecondMoments& mom, double L, double hbar);

// Block determinants computed directly from the constructed matrices.
DeterminantInvariants invariants(const CovarianceMatrix& cov);

// Recovers (g, h, c, c') numerically from the four determinant invariants:
//   g^2 = det G,  h^2 = det H,  c c' = det C,
//   (gh - c^2)(gh - c'^2) = det M.
// Throws std::domain_error when the invariants are mutually inconsistent.
StandardForm standard_form_from_invariants(const DeterminantInvariants& inv);

StandardForm standard_form(const CovarianceMatrix& cov);

}  // namespace cvent
