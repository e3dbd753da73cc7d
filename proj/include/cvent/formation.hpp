#pragma once

#include "cvent/spectrum.hpp"

namespace cvent {

// Spectrum of either single-particle reduction of the pure state: the
// geometric family lambda_n = lambda0 beta^(2n), identical for both
// reductions. R is the width ratio folded to >= 1.
struct ReducedSpectrum {
  double lambda0 = 1;
  double beta = 0;
  double R = 1;  // (1 + beta)/(1 - beta)
};

ReducedSpectrum reduced_spectrum(const PtSpectrum& spec);

double reduced_eigenvalue(const ReducedSpectrum& red, int n);

// von Neumann entropy of the reduction. Closed form
//   S = ln R + 2 ln((1+R)/(2R)) + (R-1)^2/(2R) ln((R+1)/(R-1)),
// with a stable branch through R = 1.
double entropy(const ReducedSpectrum& red);

// Direct series -sum lambda_n ln lambda_n, truncated at lambda_n < tail,
// compensated summation. Independent check of the closed form.
double entropy_series(const ReducedSpectrum& red, double tail = 1e-18);

// For a pure bipartite state the entanglement of formation is the entropy
// of either reduction.
double entanglement_of_formation(const ReducedSpectrum& red);

}  // namespace cvent
