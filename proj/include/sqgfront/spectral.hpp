#pragma once

#include <complex>
#include <vector>

#include "sqgfront/types.hpp"

namespace sqgfront {

/// Fourier coefficients of a periodic real field under the convention
///   c_k = (1/2pi) * integral_T f(gamma) e^{-i k gamma} dgamma,
/// stored for k = -n/2 .. n/2-1. Parseval then reads
///   integral |f|^2 = 2pi * sum_k |c_k|^2.
struct SpectralCoeffs {
  int n = 0;
  std::vector<std::complex<double>> c;  // index m holds k = m - n/2

  SpectralCoeffs() = default;
  explicit SpectralCoeffs(int n_) : n(n_), c(n_, {0.0, 0.0}) {}

  std::complex<double>& at(int k) { return c[k + n / 2]; }
  const std::complex<double>& at(int k) const { return c[k + n / 2]; }
  int kmin() const { return -n / 2; }
  int kmax() const { return n / 2 - 1; }
};

SpectralCoeffs to_spectral(const ScalarField& f);
ScalarField to_samples(const SpectralCoeffs& s, Grid grid);

/// Component-wise transform of an R^2-valued field.
std::pair<SpectralCoeffs, SpectralCoeffs> to_spectral(const Vec2Field& f);
std::pair<SpectralCoeffs, SpectralCoeffs> to_spectral(const ClosedCurve& c);

/// Spectral derivative of the given order (1, 2 or 3). Odd orders zero
/// the unmatched Nyquist mode k = -n/2.
ScalarField derivative(const ScalarField& f, int order);
Vec2Field derivative(const ClosedCurve& c, int order);
Vec2Field derivative(const Vec2Field& f, int order);

/// Fractional Laplacian Lambda^s: multiplier |k|^s, k = 0 and the
/// Nyquist mode map to 0. Requires s >= 0.
ScalarField fractional_laplacian(const ScalarField& f, double s);
Vec2Field fractional_laplacian(const Vec2Field& f, double s);

/// Gaussian frequency mollifier: c_k -> exp(-(eps*k)^2/2) * c_k.
ScalarField mollify(const ScalarField& f, double eps);
ClosedCurve mollify(const ClosedCurve& c, double eps);

/// Sobolev norm by Fourier multipliers. homogeneous = false:
/// sqrt(2pi sum (1+k^2)^r |c_k|^2); true: sqrt(2pi sum |k|^{2r} |c_k|^2).
/// Vector fields sum over both components.
double sobolev_norm(const ScalarField& f, double r, bool homogeneous = false);
double sobolev_norm(const Vec2Field& f, double r, bool homogeneous = false);
double sobolev_norm(const ClosedCurve& c, double r, bool homogeneous = false);

/// Trigonometric interpolant evaluated at arbitrary points (exact at
/// grid nodes; Nyquist handled as cos(n*gamma/2) to keep real output).
double interp_at(const SpectralCoeffs& s, double gamma);
std::vector<double> interp_at(const ScalarField& f, const std::vector<double>& gammas);
/// Vector variant for curves: returns (x1, x2) pairs.
std::vector<std::pair<double, double>> interp_at(const ClosedCurve& c,
                                                 const std::vector<double>& gammas);

/// Pairwise-max discrete Hoelder seminorm estimator
///   max_{i != j} |f_i - f_j| / d(gamma_i, gamma_j)^alpha,
/// with d the periodic distance with representative in (-pi, pi].
/// A lower bound of the continuum seminorm, converging as n grows.
double holder_seminorm(const ScalarField& f, double alpha);
double holder_seminorm(const Vec2Field& f, double alpha);

/// Periodic distance on the torus, representative in (-pi, pi].
double periodic_distance(double a, double b);

}  // namespace sqgfront
