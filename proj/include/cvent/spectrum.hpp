#pragma once

#include <cstddef>
#include <vector>

#include "cvent/model.hpp"

namespace cvent {

// Analytic spectrum of the partially transposed density operator of the
// pure Gaussian pair. The kernel diagonalizes in the harmonic-oscillator
// basis of scale gamma; every eigenvalue is a signed multiple of lambda0
// by a power of beta:
//   m == n : +lambda0 beta^(2n)
//   m != n : +/- lambda0 beta^(m+n)   (one symmetric, one antisymmetric).
struct PtSpectrum {
  double a11 = 0, a12 = 0;
  double lambda0 = 0;  // = 1 - beta^2
  double beta = 0;     // in [0, 1)
  double gamma = 0;    // oscillator scale, sqrt(a11^2 - a12^2)/2
};

struct PtEigenvalue {
  double value = 0;  // signed
  int m = 0, n = 0;  // basis indices, m >= n
};

// From raw quadratic-form coefficients; requires a11 > 0 and |a12| < a11.
PtSpectrum pt_spectrum(double a11, double a12);

// From the symmetric-state widths (t = 0 coefficients). Uses the exact
// reductions lambda0 = 8 sigma d/(2d+sigma)^2, beta = |2d-sigma|/(2d+sigma),
// which stay accurate even when beta is close to 1.
PtSpectrum pt_spectrum(const ModelParams& params);

// Streams the eigenvalue family ordered by decreasing |value|: total
// degree m+n ascending, within a degree m ascending, the +/- pair emitted
// plus first. Value semantics, no shared state.
class PtEigenvalueEnumerator {
 public:
  explicit PtEigenvalueEnumerator(const PtSpectrum& spec);
  PtEigenvalue next();

 private:
  double lambda0_, beta_;
  int degree_ = 0;
  int m_ = 0;
  int sign_ = +1;
};

struct EnumerationSums {
  double trace = 0;        // running sum of signed eigenvalues
  double negativity = 0;   // sum of |negative eigenvalues|
  std::size_t terms = 0;   // eigenvalues consumed
  int max_degree = -1;     // highest complete total degree enumerated
  double tail_bound = 0;   // lambda0 beta^(max_degree+1), truncation quality
  bool truncated = false;  // hit the term cap before the tail tolerance
};

// Enumerates whole degrees until lambda0 beta^degree < tail_tol or the
// term cap is reached (complete degrees keep the +/- cancellations exact).
EnumerationSums enumerate_sums(const PtSpectrum& spec, double tail_tol = 1e-15,
                               std::size_t max_terms = 10000);

std::vector<PtEigenvalue> leading_eigenvalues(const PtSpectrum& spec, std::size_t k);

// Closed forms: N = beta/(1-beta), E_N = ln(2N + 1) = ln((1+beta)/(1-beta)).
double negativity(const PtSpectrum& spec);
double log_negativity(const PtSpectrum& spec);

// Normalized oscillator eigenfunctions phi_0..phi_n_max at x for scale
// gamma, by the stable recurrence on the Gaussian-weighted functions.
std::vector<double> hermite_phi(double x, double gamma, int n_max);

// n_terms-term partial sum sqrt(1-beta^2) sum_n beta^n phi_n(x) phi_n(y)
// and the Gaussian closed form it converges to.
double mehler_kernel(double x, double y, double beta, double gamma, int n_terms);
double mehler_closed(double x, double y, double beta, double gamma);

// Eigenfunction Phi_mn of the transposed kernel, evaluable at arbitrary
// points. For m == n it is phi_n(x1) phi_n(x2); for m != n the (anti)
// symmetrized product with eigenvalue sign * lambda0 beta^(m+n).
struct PtEigenfunction {
  int m = 0, n = 0;
  int sign = +1;
  double eigenvalue = 0;
  double gamma = 0;
  double operator()(double x1, double x2) const;
};

PtEigenfunction pt_eigenfunction(const PtSpectrum& spec, int m, int n, int sign = +1);

}  // namespace cvent
