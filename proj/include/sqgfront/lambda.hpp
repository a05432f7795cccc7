#pragma once

#include "sqgfront/kernel.hpp"
#include "sqgfront/types.hpp"

namespace sqgfront {

/// Tangential speed lambda(gamma), its derivative, and the associated
/// constants. lambda(-pi) = 0 by construction; wrap_residual is the
/// value the construction leaves at the periodic wrap gamma = +pi.
struct LambdaField {
  ScalarField lambda;
  ScalarField dlambda;
  double gamma3 = 0.0;  // the gamma-independent constant of the decomposition
  double A = 0.0;       // node mean of |dx|^2, the squared tangent modulus
  double wrap_residual = 0.0;
};

/// Direct evaluation of the explicit lambda formula:
///   w(xi)   = integral d/dgamma(dx_-/|x_-|) . dx(xi)/|dx(xi)|^2 deta,
///   lambda  = (pi+gamma)/(2pi) * W - cumtrapz(w),   W = integral w,
///   dlambda = W/(2pi) - w.
/// The inner gamma-derivative is expanded analytically (d2x_- g + dx_- dg),
/// never finite-differenced across the singular kernel.
LambdaField lambda_direct(const ClosedCurve& curve, const KernelWorkspace& ws);

/// dlambda = Gamma1 + Gamma2 + Gamma3 with
///   Gamma1 = (1/A)  integral (dx_-/|x_-|) . d2x(gamma-eta) deta,
///   Gamma2 = (1/2A) integral |dx_-|^2 (x_- . dx_-)/|x_-|^3 deta,
///   Gamma3 = -(1/2piA) double-integral (dx_-/|x_-|) . d2x(gamma) deta dgamma,
/// the x_- . dx_- product desingularized through the constant-speed identity.
ScalarField dlambda_decomposition(const ClosedCurve& curve, const KernelWorkspace& ws,
                                  double* gamma3_out = nullptr, double* A_out = nullptr);

/// Integrates the decomposition with lambda(-pi) = 0. The discrete mean of
/// dlambda (a quadrature-consistency residual, O(n^-2)) is removed before
/// integrating so the periodic wrap value vanishes as well.
LambdaField lambda_from_decomposition(const ClosedCurve& curve, const KernelWorkspace& ws);

}  // namespace sqgfront
