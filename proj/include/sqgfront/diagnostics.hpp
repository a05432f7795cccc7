#pragma once

#include <optional>

#include "sqgfront/kernel.hpp"
#include "sqgfront/lambda.hpp"
#include "sqgfront/types.hpp"

namespace sqgfront {

/// One timestamped row of every monitored scalar. Field order here is
/// documentation; the CSV column order is fixed in io.hpp.
struct DiagnosticsRecord {
  double time = 0.0;
  double f_max = 0.0;            // arc-chord sup
  double a_mean = 0.0;           // node mean of |dx|^2
  double speed_variation = 0.0;  // max ||dx|^2 - A| / A
  double l2_norm = 0.0;
  double h2s_norm = 0.0;  // |x|_{H^{2+s}}
  double holder_halfplus_s = 0.0;  // Hoelder estimate of dx at 1/2 + s
  double lambda_sup = 0.0;
  double dlambda_sup = 0.0;
  double dlambda_h_half = 0.0;  // homogeneous H^{1/2} of dlambda
  double curvature_max = 0.0;
  double area = 0.0;
  double perimeter = 0.0;
};

/// Arc-chord sup over grid-aligned offsets, max |eta_j| / |x_i - x_{i-j}|.
/// Throws on coincident nodes.
double arc_chord(const ClosedCurve& curve);
double arc_chord(const KernelWorkspace& ws);

/// Signed curvature (dx1 d2x2 - dx2 d2x1)/|dx|^3 via spectral derivatives.
/// Throws SpeedDegenerate on vanishing speed.
ScalarField curvature(const ClosedCurve& curve);

/// Enclosed area (shoelace against spectral dx) and perimeter.
std::pair<double, double> area_perimeter(const ClosedCurve& curve);

/// Homogeneous H^{1/2} norm of dlambda (multiplier form).
double dlambda_sobolev_half(const ScalarField& dlambda);

/// Fully populated record; reuses the workspace and lambda field when the
/// caller already has them (one O(n^2) scan otherwise). s is the Sobolev
/// exponent of the monitored H^{2+s} norm.
DiagnosticsRecord record(const ClosedCurve& curve, const LambdaField& lf, double s,
                         const KernelWorkspace& ws);
DiagnosticsRecord record(const ClosedCurve& curve, double s);

}  // namespace sqgfront
