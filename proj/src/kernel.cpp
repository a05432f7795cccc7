#include "sqgfront/kernel.hpp"

#include <atomic>
#include <cmath>
#include <limits>

#include "sqgfront/parallel.hpp"

namespace sqgfront {

KernelWorkspace kernel_g(const ClosedCurve& curve) {
  const int n = curve.n();
  KernelWorkspace ws;
  ws.grid = curve.grid;
  ws.eta.resize(n - 1);
  ws.abseta.resize(n - 1);
  const double h = curve.grid.spacing();
  for (int j = 1; j < n; ++j) {
    double e = h * j;
    if (j > n / 2) e -= kTwoPi;
    ws.eta[j - 1] = e;
    ws.abseta[j - 1] = std::abs(e);
  }

  Vec2Field dx = derivative(curve, 1);
  Vec2Field d2x = derivative(curve, 2);
  ws.dx1 = std::move(dx.c1);
  ws.dx2 = std::move(dx.c2);
  ws.d2x1 = std::move(d2x.c1);
  ws.d2x2 = std::move(d2x.c2);

  Kahan per, speed2;
  for (int i = 0; i < n; ++i) {
    double s2 = ws.dx1[i] * ws.dx1[i] + ws.dx2[i] * ws.dx2[i];
    per.add(std::sqrt(s2));
    speed2.add(s2);
  }
  ws.perimeter = h * per.result();
  ws.speed_mean_sq = speed2.result() / n;

  const size_t table = static_cast<size_t>(n) * (n - 1);
  ws.xm1.resize(table);
  ws.xm2.resize(table);
  ws.g.resize(table);

  const double guard = 1e-12 * ws.perimeter;
  std::vector<double> row_min(n), row_fmax(n);
  parallel_for(n, [&](int i) {
    double local_min = std::numeric_limits<double>::infinity();
    double local_fmax = 0.0;
    for (int j = 1; j < n; ++j) {
      int k = i - j;
      if (k < 0) k += n;
      size_t id = ws.idx(i, j);
      double a = curve.x1[i] - curve.x1[k];
      double b = curve.x2[i] - curve.x2[k];
      double dist = std::sqrt(a * a + b * b);
      ws.xm1[id] = a;
      ws.xm2[id] = b;
      double gij = 1.0 / dist;
      ws.g[id] = gij;
      if (dist < local_min) local_min = dist;
      double f = ws.abseta[j - 1] * gij;
      if (f > local_fmax) local_fmax = f;
    }
    row_min[i] = local_min;
    row_fmax[i] = local_fmax;
  });

  double min_dist = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    if (row_min[i] < min_dist) min_dist = row_min[i];
    if (row_fmax[i] > ws.f_max) ws.f_max = row_fmax[i];
  }
  if (!(min_dist > guard)) {
    throw ArcChordViolation("chord " + std::to_string(min_dist) + " below guard " +
                            std::to_string(guard) + " (near self-intersection)");
  }
  return ws;
}

Vec2Field nontangential_velocity(const ClosedCurve& curve, const KernelWorkspace& ws) {
  const int n = curve.n();
  const double w = curve.grid.spacing();
  Vec2Field u(curve.grid);
  parallel_for(n, [&](int i) {
    Kahan s1, s2;
    for (int j = 1; j < n; ++j) {
      int k = i - j;
      if (k < 0) k += n;
      double gij = ws.g[ws.idx(i, j)];
      s1.add((ws.dx1[i] - ws.dx1[k]) * gij);
      s2.add((ws.dx2[i] - ws.dx2[k]) * gij);
    }
    u.c1[i] = w * s1.result();
    u.c2[i] = w * s2.result();
  });
  return u;
}

Vec2Field nontangential_velocity(const ClosedCurve& curve) {
  return nontangential_velocity(curve, kernel_g(curve));
}

std::vector<double> dgamma_g(const KernelWorkspace& ws) {
  const int n = ws.grid.n;
  std::vector<double> out(static_cast<size_t>(n) * (n - 1));
  parallel_for(n, [&](int i) {
    for (int j = 1; j < n; ++j) {
      int k = i - j;
      if (k < 0) k += n;
      size_t id = ws.idx(i, j);
      out[id] = dgamma_g_entry(ws.xm1[id], ws.xm2[id], ws.dx1[i] - ws.dx1[k],
                               ws.dx2[i] - ws.dx2[k], ws.dx1[i], ws.dx2[i],
                               ws.eta[j - 1], ws.g[id]);
    }
  });
  return out;
}

}  // namespace sqgfront
