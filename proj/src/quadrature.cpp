#include "cvent/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace cvent {

namespace {

// Golub-Welsch: nodes are the eigenvalues of the symmetric tridiagonal
// Jacobi matrix, weights mu0 times the squared first components of the
// normalized eigenvectors.
Quadrature golub_welsch(const std::vector<double>& offdiag, double mu0) {
  const int n = static_cast<int>(offdiag.size()) + 1;
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k + 1 < n; ++k) {
    jacobi(k, k + 1) = offdiag[k];
    jacobi(k + 1, k) = offdiag[k];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
  Quadrature q;
  q.nodes.resize(n);
  q.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    q.nodes[i] = es.eigenvalues()(i);
    const double v0 = es.eigenvectors()(0, i);
    q.weights[i] = mu0 * v0 * v0;
  }
  return q;
}

void require_order(int n, const char* who) {
  if (n < 1) throw std::invalid_argument(std::string(who) + ": order must be >= 1");
}

}  // namespace

Quadrature gauss_hermite(int n) {
  require_order(n, "gauss_hermite");
  std::vector<double> b(n - 1);
  for (int k = 1; k < n; ++k) b[k - 1] = std::sqrt(k / 2.0);
  return golub_welsch(b, std::sqrt(M_PI));
}

Quadrature gauss_hermite_scaled(int n) {
  Quadrature q = gauss_hermite(n);
  for (int i = 0; i < n; ++i) q.weights[i] *= std::exp(q.nodes[i] * q.nodes[i]);
  return q;
}

Quadrature gauss_legendre(int n, double a, double b) {
  require_order(n, "gauss_legendre");
  std::vector<double> off(n - 1);
  for (int k = 1; k < n; ++k) off[k - 1] = k / std::sqrt(4.0 * k * k - 1.0);
  Quadrature q = golub_welsch(off, 2.0);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  for (int i = 0; i < n; ++i) {
    q.nodes[i] = mid + half * q.nodes[i];
    q.weights[i] *= half;
  }
  return q;
}

Quadrature trapezoid(int n, double a, double b) {
  if (n < 2) throw std::invalid_argument("trapezoid: need at least 2 nodes");
  Quadrature q;
  q.nodes.resize(n);
  q.weights.resize(n);
  const double h = (b - a) / (n - 1);
  for (int i = 0; i < n; ++i) {
    q.nodes[i] = a + h * i;
    q.weights[i] = (i == 0 || i == n - 1) ? 0.5 * h : h;
  }
  return q;
}

}  // namespace cvent
