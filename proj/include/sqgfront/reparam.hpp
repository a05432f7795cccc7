#pragma once

#include "sqgfront/spectral.hpp"
#include "sqgfront/types.hpp"

namespace sqgfront {

/// The arclength-proportional reparametrization map
///   phi(xi) = -pi + (2pi/L) * integral_{-pi}^{xi} |dx/dgamma| dgamma,
/// with L the total length; phi(-pi) = -pi and phi(pi) = pi by construction.
struct ReparamMap {
  ScalarField phi;                   // phi at the grid nodes
  ScalarField phi_inverse_at_nodes;  // phi^{-1}(gamma_i)
  double total_length = 0.0;
};

/// Resamples the curve to the constant-speed parametrization
/// x~(gamma) = x(phi^{-1}(gamma)). phi is built from the spectral
/// antiderivative of the speed interpolant; the inverse is found per node
/// by safeguarded Newton iteration (bisection fallback, 1e-13 tolerance
/// in gamma); the curve is resampled by trigonometric interpolation.
///
/// Throws SpeedDegenerate when min |dx| <= 1e-9 * mean |dx| or the
/// inversion fails to converge within 100 iterations.
std::pair<ClosedCurve, ReparamMap> enforce_constant_speed(const ClosedCurve& curve);

/// Relative speed-variation defect max_i ||dx(gamma_i)|^2 - A| / A with
/// A the node mean of |dx|^2 (the constant-tangent-modulus defect).
double speed_variation(const ClosedCurve& curve);

}  // namespace sqgfront
