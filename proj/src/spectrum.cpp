#include "cvent/spectrum.hpp"

#include <cmath>
#include <stdexcept>

namespace cvent {

PtSpectrum pt_spectrum(double a11, double a12) {
  if (!(a11 > 0.0) || !(std::abs(a12) < a11))
    throw std::domain_error("pt_spectrum: state not normalizable, need |a12| < a11");
  PtSpectrum s;
  s.a11 = a11;
  s.a12 = a12;
  // Factored form of sqrt(a11^2 - a12^2); the two factors are individually
  // benign while the squared difference cancels badly for |a12| -> a11.
  const double root = std::sqrt((a11 - a12) * (a11 + a12));
  s.lambda0 = 2.0 * root / (a11 + root);
  s.beta = std::sqrt((a11 - root) / (a11 + root));
  s.gamma = root / 2.0;
  return s;
}

PtSpectrum pt_spectrum(const ModelParams& params) {
  params.validate();
  const double sigma = params.sigma;
  const double twod = 2.0 * params.d;
  PtSpectrum s;
  s.a11 = 1.0 / (sigma * sigma) + 1.0 / (twod * twod);
  s.a12 = -1.0 / (sigma * sigma) + 1.0 / (twod * twod);
  const double sum = twod + sigma;
  s.lambda0 = 4.0 * twod * sigma / (sum * sum);
  s.beta = std::abs(twod - sigma) / sum;
  s.gamma = 1.0 / (2.0 * sigma * params.d);
  return s;
}

PtEigenvalueEnumerator::PtEigenvalueEnumerator(const PtSpectrum& spec)
    : lambda0_(spec.lambda0), beta_(spec.beta) {}

PtEigenvalue PtEigenvalueEnumerator::next() {
  const int n = degree_ - m_;
  const double mag = lambda0_ * std::pow(beta_, degree_);
  PtEigenvalue ev{sign_ > 0 ? mag : -mag, m_, n};
  if (m_ == n || sign_ < 0) {
    sign_ = +1;
    ++m_;
    if (m_ > degree_) {
      ++degree_;
      m_ = (degree_ + 1) / 2;
    }
  } else {
    sign_ = -1;
  }
  return ev;
}

EnumerationSums enumerate_sums(const PtSpectrum& spec, double tail_tol,
                               std::size_t max_terms) {
  if (!(tail_tol > 0.0))
    throw std::invalid_argument("enumerate_sums: tail_tol must be positive");
  EnumerationSums out;
  PtEigenvalueEnumerator en(spec);
  for (int degree = 0;; ++degree) {
    const double mag = spec.lambda0 * std::pow(spec.beta, degree);
    out.tail_bound = mag;
    if (mag < tail_tol && degree > 0) break;
    const std::size_t degree_terms = static_cast<std::size_t>(degree) + 1;
    if (out.terms + degree_terms > max_terms) {
      out.truncated = true;
      break;
    }
    for (std::size_t i = 0; i < degree_terms; ++i) {
      const PtEigenvalue ev = en.next();
      out.trace += ev.value;
      if (ev.value < 0.0) out.negativity -= ev.value;
    }
    out.terms += degree_terms;
    out.max_degree = degree;
  }
  return out;
}

std::vector<PtEigenvalue> leading_eigenvalues(const PtSpectrum& spec, std::size_t k) {
  std::vector<PtEigenvalue> out;
  out.reserve(k);
  PtEigenvalueEnumerator en(spec);
  for (std::size_t i = 0; i < k; ++i) out.push_back(en.next());
  return out;
}

double negativity(const PtSpectrum& spec) { return spec.beta / (1.0 - spec.beta); }

double log_negativity(const PtSpectrum& spec) {
  return std::log1p(2.0 * negativity(spec));
}

std::vector<double> hermite_phi(double x, double gamma, int n_max) {
  if (!(gamma > 0.0)) throw std::invalid_argument("hermite_phi: gamma must be positive");
  if (n_max < 0) throw std::invalid_argument("hermite_phi: n_max must be >= 0");
  const double xi = std::sqrt(gamma) * x;
  std::vector<double> phi(static_cast<std::size_t>(n_max) + 1);
  phi[0] = std::pow(gamma, 0.25) * std::pow(M_PI, -0.25) * std::exp(-0.5 * xi * xi);
  if (n_max >= 1) phi[1] = std::sqrt(2.0) * xi * phi[0];
  for (int n = 2; n <= n_max; ++n)
    phi[n] = std::sqrt(2.0 / n) * xi * phi[n - 1] -
             std::sqrt((n - 1.0) / n) * phi[n - 2];
  return phi;
}

double mehler_kernel(double x, double y, double beta, double gamma, int n_terms) {
  if (std::abs(beta) >= 1.0)
    throw std::domain_error("mehler_kernel: series diverges for |beta| >= 1");
  if (n_terms < 1) throw std::invalid_argument("mehler_kernel: n_terms must be >= 1");
  const auto px = hermite_phi(x, gamma, n_terms - 1);
  const auto py = hermite_phi(y, gamma, n_terms - 1);
  double sum = 0.0;
  double bn = 1.0;
  for (int n = 0; n < n_terms; ++n) {
    sum += bn * px[n] * py[n];
    bn *= beta;
  }
  return std::sqrt(1.0 - beta * beta) * sum;
}

double mehler_closed(double x, double y, double beta, double gamma) {
  if (std::abs(beta) >= 1.0)
    throw std::domain_error("mehler_closed: requires |beta| < 1");
  const double b2 = beta * beta;
  const double expo =
      gamma / (1.0 - b2) * (2.0 * beta * x * y - 0.5 * (1.0 + b2) * (x * x + y * y));
  return std::sqrt(gamma / M_PI) * std::exp(expo);
}

double PtEigenfunction::operator()(double x1, double x2) const {
  const int top = m > n ? m : n;
  const auto p1 = hermite_phi(x1, gamma, top);
  const auto p2 = hermite_phi(x2, gamma, top);
  if (m == n) return p1[m] * p2[n];
  return (p1[m] * p2[n] + sign * p1[n] * p2[m]) / std::sqrt(2.0);
}

PtEigenfunction pt_eigenfunction(const PtSpectrum& spec, int m, int n, int sign) {
  if (m < 0 || n < 0) throw std::invalid_argument("pt_eigenfunction: indices must be >= 0");
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("pt_eigenfunction: sign must be +1 or -1");
  PtEigenfunction f;
  f.m = m;
  f.n = n;
  f.sign = m == n ? +1 : sign;
  f.gamma = spec.gamma;
  const double mag = spec.lambda0 * std::pow(spec.beta, m + n);
  f.eigenvalue = f.sign > 0 ? mag : -mag;
  return f;
}

}  // namespace cvent
