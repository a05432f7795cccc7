#include "sqgfront/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include "sqgfront/reparam.hpp"

namespace sqgfront {

double arc_chord(const KernelWorkspace& ws) { return ws.f_max; }

double arc_chord(const ClosedCurve& curve) {
  const int n = curve.n();
  const double h = curve.grid.spacing();
  double best = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 1; j < n; ++j) {
      int k = i - j;
      if (k < 0) k += n;
      double abseta = std::min(h * j, kTwoPi - h * j);
      if (j == n / 2) abseta = kPi;
      double a = curve.x1[i] - curve.x1[k];
      double b = curve.x2[i] - curve.x2[k];
      double dist2 = a * a + b * b;
      if (dist2 == 0.0) throw ArcChordViolation("coincident nodes in arc-chord scan");
      double f = abseta / std::sqrt(dist2);
      if (f > best) best = f;
    }
  }
  return best;
}

ScalarField curvature(const ClosedCurve& curve) {
  Vec2Field dx = derivative(curve, 1);
  Vec2Field d2x = derivative(curve, 2);
  ScalarField kappa(curve.grid);
  for (int i = 0; i < curve.n(); ++i) {
    double s2 = dx.c1[i] * dx.c1[i] + dx.c2[i] * dx.c2[i];
    if (!(s2 > 0.0)) throw SpeedDegenerate("vanishing speed in curvature");
    kappa.v[i] = (dx.c1[i] * d2x.c2[i] - dx.c2[i] * d2x.c1[i]) / (s2 * std::sqrt(s2));
  }
  return kappa;
}

std::pair<double, double> area_perimeter(const ClosedCurve& curve) {
  Vec2Field dx = derivative(curve, 1);
  const double h = curve.grid.spacing();
  Kahan area, per;
  for (int i = 0; i < curve.n(); ++i) {
    area.add(curve.x1[i] * dx.c2[i] - curve.x2[i] * dx.c1[i]);
    per.add(std::hypot(dx.c1[i], dx.c2[i]));
  }
  return {0.5 * h * area.result(), h * per.result()};
}

double dlambda_sobolev_half(const ScalarField& dlambda) {
  return sobolev_norm(dlambda, 0.5, /*homogeneous=*/true);
}

DiagnosticsRecord record(const ClosedCurve& curve, const LambdaField& lf, double s,
                         const KernelWorkspace& ws) {
  DiagnosticsRecord r;
  r.time = curve.time;
  r.f_max = ws.f_max;
  r.a_mean = ws.speed_mean_sq;
  double worst = 0.0;
  for (int i = 0; i < curve.n(); ++i) {
    double s2 = ws.dx1[i] * ws.dx1[i] + ws.dx2[i] * ws.dx2[i];
    worst = std::max(worst, std::abs(s2 - r.a_mean));
  }
  r.speed_variation = worst / r.a_mean;
  r.l2_norm = sobolev_norm(curve, 0.0);
  r.h2s_norm = sobolev_norm(curve, 2.0 + s);
  Vec2Field dx(curve.grid);
  dx.c1 = ws.dx1;
  dx.c2 = ws.dx2;
  r.holder_halfplus_s = holder_seminorm(dx, 0.5 + s);
  for (int i = 0; i < curve.n(); ++i) {
    r.lambda_sup = std::max(r.lambda_sup, std::abs(lf.lambda.v[i]));
    r.dlambda_sup = std::max(r.dlambda_sup, std::abs(lf.dlambda.v[i]));
  }
  r.dlambda_h_half = dlambda_sobolev_half(lf.dlambda);
  ScalarField kappa = curvature(curve);
  for (double k : kappa.v) r.curvature_max = std::max(r.curvature_max, std::abs(k));
  auto [area, per] = area_perimeter(curve);
  r.area = area;
  r.perimeter = per;
  return r;
}

DiagnosticsRecord record(const ClosedCurve& curve, double s) {
  KernelWorkspace ws = kernel_g(curve);
  LambdaField lf = lambda_from_decomposition(curve, ws);
  return record(curve, lf, s, ws);
}

}  // namespace sqgfront
