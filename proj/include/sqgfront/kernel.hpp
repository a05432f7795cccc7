#pragma once

#include <vector>

#include "sqgfront/spectral.hpp"
#include "sqgfront/types.hpp"

namespace sqgfront {

/// Dense pairwise tables for one curve snapshot, shared by the velocity,
/// tangential-speed and diagnostics evaluations within a time step.
///
/// Offsets are grid-aligned, eta_j = 2*pi*j/n for j = 1..n-1, folded to the
/// representative in (-pi, pi]; x(gamma - eta_j) is then x[(i-j) mod n] and
/// needs no interpolation. Entry (i, j) lives at index i*(n-1) + (j-1).
struct KernelWorkspace {
  Grid grid;
  std::vector<double> eta;     // folded signed offsets, index j-1
  std::vector<double> abseta;  // |eta_j|
  std::vector<double> xm1, xm2;  // x_-(gamma_i, eta_j) = x(i) - x(i-j)
  std::vector<double> g;         // 1/|x_-|
  std::vector<double> dx1, dx2;    // spectral d/dgamma x at nodes
  std::vector<double> d2x1, d2x2;  // spectral d2/dgamma2 x at nodes
  double perimeter = 0.0;
  double f_max = 0.0;  // max |eta| * g over the table
  double speed_mean_sq = 0.0;  // node mean of |dx|^2, the A(t) proxy

  int stride() const { return grid.n - 1; }
  size_t idx(int i, int j) const { return static_cast<size_t>(i) * stride() + (j - 1); }
};

/// Builds the pair tables. Throws ArcChordViolation when any chord drops
/// below 1e-12 * perimeter (near self-intersection).
KernelWorkspace kernel_g(const ClosedCurve& curve);

/// Nontangential contour velocity: punctured trapezoidal quadrature of
///   integral (dx(gamma) - dx(gamma-eta)) / |x(gamma) - x(gamma-eta)| deta,
/// the eta = 0 cell contributing zero (the odd leading part of the
/// integrand cancels over the punctured cell).
Vec2Field nontangential_velocity(const ClosedCurve& curve, const KernelWorkspace& ws);
Vec2Field nontangential_velocity(const ClosedCurve& curve);

/// d/dgamma of g in the desingularized split
///   dg = -m1 - m2/2,
///   m1 = (x_- - eta*dx(gamma)) . dx_- / |x_-|^3,  m2 = eta |dx_-|^2 / |x_-|^3,
/// which stays O(eta) near eta = 0 instead of a difference of large terms.
/// Table layout matches KernelWorkspace::idx.
std::vector<double> dgamma_g(const KernelWorkspace& ws);

/// Single entry of the dgamma_g split (used by the lambda integrands).
inline double dgamma_g_entry(double xm1, double xm2, double dxm1, double dxm2,
                             double dx1_i, double dx2_i, double eta, double g) {
  double g3 = g * g * g;
  double m1 = ((xm1 - eta * dx1_i) * dxm1 + (xm2 - eta * dx2_i) * dxm2) * g3;
  double m2 = eta * (dxm1 * dxm1 + dxm2 * dxm2) * g3;
  return -m1 - 0.5 * m2;
}

}  // namespace sqgfront
