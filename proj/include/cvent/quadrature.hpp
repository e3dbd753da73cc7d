#pragma once

#include <vector>

namespace cvent {

struct Quadrature {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Nodes and weights for integrals of f(x) e^{-x^2} over the real line.
Quadrature gauss_hermite(int n);

// Same nodes with weights premultiplied by e^{+x_i^2}, for integrands
// that carry their own Gaussian factor.
Quadrature gauss_hermite_scaled(int n);

// Nodes and weights for integrals of f(x) over [a, b].
Quadrature gauss_legendre(int n, double a, double b);

// Uniform nodes over [a, b] with trapezoid weights.
Quadrature trapezoid(int n, double a, double b);

}  // namespace cvent
