#include "sqgfront/lambda.hpp"

#include <cmath>

#include "sqgfront/parallel.hpp"

namespace sqgfront {

namespace {

// Trapezoidal cumulative integral on the uniform grid, anchored 0 at -pi.
std::vector<double> cumtrapz(const std::vector<double>& f, double h) {
  std::vector<double> out(f.size());
  Kahan acc;
  out[0] = 0.0;
  for (size_t i = 1; i < f.size(); ++i) {
    acc.add(0.5 * h * (f[i - 1] + f[i]));
    out[i] = acc.result();
  }
  return out;
}

double trapz_periodic(const std::vector<double>& f, double h) {
  Kahan acc;
  for (double v : f) acc.add(v);
  return h * acc.result();
}

}  // namespace

LambdaField lambda_direct(const ClosedCurve& curve, const KernelWorkspace& ws) {
  const int n = curve.n();
  const double h = curve.grid.spacing();

  std::vector<double> w(n);
  parallel_for(n, [&](int i) {
    double t1 = ws.dx1[i], t2 = ws.dx2[i];
    double speed2 = t1 * t1 + t2 * t2;
    Kahan acc;
    for (int j = 1; j < n; ++j) {
      int k = i - j;
      if (k < 0) k += n;
      size_t id = ws.idx(i, j);
      double gij = ws.g[id];
      double dxm1 = ws.dx1[i] - ws.dx1[k];
      double dxm2 = ws.dx2[i] - ws.dx2[k];
      double dg = dgamma_g_entry(ws.xm1[id], ws.xm2[id], dxm1, dxm2, t1, t2,
                                 ws.eta[j - 1], gij);
      double k1 = (ws.d2x1[i] - ws.d2x1[k]) * gij + dxm1 * dg;
      double k2 = (ws.d2x2[i] - ws.d2x2[k]) * gij + dxm2 * dg;
      acc.add(k1 * t1 + k2 * t2);
    }
    w[i] = h * acc.result() / speed2;
  });

  double W = trapz_periodic(w, h);
  std::vector<double> cum = cumtrapz(w, h);

  LambdaField out;
  out.A = ws.speed_mean_sq;
  out.lambda = ScalarField(curve.grid);
  out.dlambda = ScalarField(curve.grid);
  for (int i = 0; i < n; ++i) {
    double gamma = curve.grid.node(i);
    out.lambda.v[i] = (kPi + gamma) / kTwoPi * W - cum[i];
    out.dlambda.v[i] = W / kTwoPi - w[i];
  }
  // Wrap value at gamma = +pi: full prefactor minus the full trapezoid.
  out.wrap_residual = W - (cum[n - 1] + 0.5 * h * (w[n - 1] + w[0]));
  return out;
}

ScalarField dlambda_decomposition(const ClosedCurve& curve, const KernelWorkspace& ws,
                                  double* gamma3_out, double* A_out) {
  const int n = curve.n();
  const double h = curve.grid.spacing();
  const double A = ws.speed_mean_sq;

  std::vector<double> g12(n);   // Gamma1 + Gamma2 per node
  std::vector<double> g3row(n);  // inner integral of the Gamma3 double integral
  parallel_for(n, [&](int i) {
    Kahan acc12, acc3;
    for (int j = 1; j < n; ++j) {
      int k = i - j;
      if (k < 0) k += n;
      size_t id = ws.idx(i, j);
      double gij = ws.g[id];
      double xm1 = ws.xm1[id], xm2 = ws.xm2[id];
      double dxm1 = ws.dx1[i] - ws.dx1[k];
      double dxm2 = ws.dx2[i] - ws.dx2[k];
      double eta = ws.eta[j - 1];

      double gamma1 = (dxm1 * ws.d2x1[k] + dxm2 * ws.d2x2[k]) * gij;
      // x_- . dx_- via the constant-speed identity, O(eta^4) near 0.
      double xdot = (xm1 - eta * ws.dx1[i]) * dxm1 + (xm2 - eta * ws.dx2[i]) * dxm2 +
                    0.5 * eta * (dxm1 * dxm1 + dxm2 * dxm2);
      double g3 = gij * gij * gij;
      double gamma2 = 0.5 * (dxm1 * dxm1 + dxm2 * dxm2) * xdot * g3;
      acc12.add(gamma1 + gamma2);
      acc3.add((dxm1 * ws.d2x1[i] + dxm2 * ws.d2x2[i]) * gij);
    }
    g12[i] = h * acc12.result() / A;
    g3row[i] = h * acc3.result();
  });

  double gamma3 = -trapz_periodic(g3row, h) / (kTwoPi * A);
  if (gamma3_out) *gamma3_out = gamma3;
  if (A_out) *A_out = A;

  ScalarField out(curve.grid);
  for (int i = 0; i < n; ++i) out.v[i] = g12[i] + gamma3;
  return out;
}

LambdaField lambda_from_decomposition(const ClosedCurve& curve, const KernelWorkspace& ws) {
  LambdaField out;
  out.dlambda = dlambda_decomposition(curve, ws, &out.gamma3, &out.A);

  const int n = curve.n();
  const double h = curve.grid.spacing();
  double mean = trapz_periodic(out.dlambda.v, h) / kTwoPi;
  std::vector<double> meanfree(n);
  for (int i = 0; i < n; ++i) meanfree[i] = out.dlambda.v[i] - mean;
  std::vector<double> cum = cumtrapz(meanfree, h);
  out.lambda = ScalarField(curve.grid, std::move(cum));
  out.wrap_residual =
      out.lambda.v[n - 1] + 0.5 * h * (meanfree[n - 1] + meanfree[0]);
  return out;
}

}  // namespace sqgfront
