// diagnostics: arc-chord sup, curvature, conserved integrals, records.
#include <doctest.h>

#include <cmath>

#include "sqgfront/diagnostics.hpp"
#include "sqgfront/reparam.hpp"
#include "sqgfront/scenarios.hpp"

using namespace sqgfront;

TEST_CASE("arc-chord sup of the circle is pi/(2R)") {
  // |eta| / (2R sin(|eta|/2)) increases in |eta|; the max sits at eta = pi,
  // which is a grid offset for even n.
  for (double R : {0.5, 1.0, 5.0}) {
    ClosedCurve c = circle_curve(256, R);
    CHECK(std::abs(arc_chord(c) - kPi / (2.0 * R)) <= 1e-12 * (kPi / (2.0 * R)));
  }
}

TEST_CASE("arc-chord homogeneity and the chord <= arc bound") {
  ScenarioParams p;
  p.amplitude = 0.07;
  p.mode = 5;
  ClosedCurve c = make_scenario("perturbed_circle", 128, p);
  double f = arc_chord(c);

  ClosedCurve scaled = c;
  for (int i = 0; i < c.n(); ++i) {
    scaled.x1[i] *= 4.0;
    scaled.x2[i] *= 4.0;
  }
  CHECK(std::abs(arc_chord(scaled) - f / 4.0) <= 1e-13 * f);

  Vec2Field dx = derivative(c, 1);
  double vmax = 0.0;
  for (int i = 0; i < c.n(); ++i) vmax = std::max(vmax, std::hypot(dx.c1[i], dx.c2[i]));
  CHECK(f >= 1.0 / vmax - 1e-9);

  // Ratio of two circle radii shows up inversely in F.
  double f1 = arc_chord(circle_curve(128, 1.0));
  double f5 = arc_chord(circle_curve(128, 5.0));
  CHECK(std::abs(f1 / f5 - 5.0) <= 1e-12);
}

TEST_CASE("curvature closed forms") {
  ClosedCurve circ = circle_curve(128, 2.5);
  ScalarField k = curvature(circ);
  for (double v : k.v) CHECK(std::abs(v - 1.0 / 2.5) < 1e-10);

  ClosedCurve ell = ellipse_curve(256, 1.2, 0.8);
  ScalarField ke = curvature(ell);
  // Node 0 does not sit at gamma = 0 (grid starts at -pi); gamma = 0 is
  // node n/2. kappa(0) = a/b^2.
  CHECK(std::abs(ke.v[128] - 1.2 / (0.8 * 0.8)) < 1e-9);

  ClosedCurve flip(ell.grid);
  for (int i = 0; i < ell.n(); ++i) {
    int j = (ell.n() - i) % ell.n();
    flip.x1[i] = ell.x1[j];
    flip.x2[i] = ell.x2[j];
  }
  ScalarField kf = curvature(flip);
  for (int i = 0; i < ell.n(); ++i) {
    int j = (ell.n() - i) % ell.n();
    CHECK(std::abs(kf.v[i] + ke.v[j]) < 5e-12);  // transform roundoff only
  }
}

TEST_CASE("area and perimeter") {
  ClosedCurve c = circle_curve(256, 2.0);
  auto [area, per] = area_perimeter(c);
  CHECK(std::abs(area - 4.0 * kPi) < 1e-10);
  CHECK(std::abs(per - 4.0 * kPi) < 1e-10);

  ClosedCurve e = ellipse_curve(256, 1.2, 0.8);
  auto [ea, ep] = area_perimeter(e);
  CHECK(std::abs(ea - 0.96 * kPi) < 1e-10);

  ClosedCurve t = e;
  for (int i = 0; i < e.n(); ++i) {
    t.x1[i] += 3.0;
    t.x2[i] -= 2.0;
  }
  auto [ta, tp] = area_perimeter(t);
  CHECK(std::abs(ta - ea) < 1e-11);
  CHECK(std::abs(tp - ep) < 1e-12);
}

TEST_CASE("dlambda H^{1/2}: circle zero, shift invariance, homogeneity") {
  ClosedCurve c = circle_curve(256, 1.0);
  KernelWorkspace ws = kernel_g(c);
  LambdaField lf = lambda_from_decomposition(c, ws);
  CHECK(dlambda_sobolev_half(lf.dlambda) <= 1e-8);

  ScenarioParams p;
  ClosedCurve pc = make_scenario("perturbed_circle", 128, p);
  LambdaField lpc = lambda_from_decomposition(pc, kernel_g(pc));
  double base = dlambda_sobolev_half(lpc.dlambda);

  ScalarField shifted = lpc.dlambda;
  for (auto& v : shifted.v) v += 17.0;
  CHECK(dlambda_sobolev_half(shifted) == doctest::Approx(base).epsilon(1e-12));

  ScalarField tripled = lpc.dlambda;
  for (auto& v : tripled.v) v *= 3.0;
  CHECK(dlambda_sobolev_half(tripled) == doctest::Approx(3.0 * base).epsilon(1e-14));
}

TEST_CASE("record on the circle collects every oracle at once") {
  ClosedCurve c = circle_curve(256, 1.0);
  DiagnosticsRecord r = record(c, 0.25);
  CHECK(std::abs(r.f_max - kPi / 2.0) < 1e-12);
  CHECK(std::abs(r.curvature_max - 1.0) < 1e-10);
  CHECK(std::abs(r.area - kPi) < 1e-10);
  CHECK(r.speed_variation <= 1e-10);
  CHECK(r.lambda_sup <= 1e-6);
  CHECK(std::abs(r.a_mean - 1.0) < 1e-12);
  CHECK(std::abs(r.l2_norm - std::sqrt(kTwoPi)) < 1e-12);
}

TEST_CASE("mollification weakly decreases the monitored norms") {
  ScenarioParams p;
  ClosedCurve rough = make_scenario("rough_h2s", 256, p, 0.25, 7);
  DiagnosticsRecord r0 = record(rough, 0.25);
  DiagnosticsRecord rm = record(mollify(rough, 0.05), 0.25);
  // Multiplier-norm fields decrease exactly; the pairwise/sup estimators
  // follow the smoothed field up to discretization slack.
  CHECK(rm.h2s_norm <= r0.h2s_norm);
  CHECK(rm.l2_norm <= r0.l2_norm);
  CHECK(std::abs(rm.l2_norm - r0.l2_norm) <= 0.1 * r0.l2_norm);
  CHECK(rm.holder_halfplus_s <= r0.holder_halfplus_s * (1.0 + 1e-9));
  CHECK(rm.curvature_max <= r0.curvature_max * (1.0 + 1e-6));
}

TEST_CASE("record invariants across scenarios") {
  ScenarioParams p;
  for (const char* name : {"circle", "ellipse", "perturbed_circle", "rough_h2s",
                           "filament_probe"}) {
    ClosedCurve c = make_scenario(name, 128, p, 0.25, 11);
    DiagnosticsRecord r = record(c, 0.25);
    for (double v : {r.f_max, r.a_mean, r.speed_variation, r.l2_norm, r.h2s_norm,
                     r.holder_halfplus_s, r.lambda_sup, r.dlambda_sup, r.dlambda_h_half,
                     r.curvature_max, r.area, r.perimeter}) {
      CHECK(std::isfinite(v));
    }
    // Isoperimetric inequality for simple closed curves.
    CHECK(r.perimeter * r.perimeter / (4.0 * kPi) >= r.area * (1.0 - 1e-9));
    // Soft consistency of the arc-chord sup with the tangent modulus,
    // 1/A <= |F|_inf^2 up to grid error (warning-level tolerance).
    CHECK(1.0 / r.a_mean <= r.f_max * r.f_max * (1.0 + 1e-6) + 1e-6);
  }
}

TEST_CASE("h2s norm is monotone in s and zero speed variation after projection") {
  ScenarioParams p;
  ClosedCurve c = make_scenario("rough_h2s", 128, p, 0.25, 3);
  double n1 = sobolev_norm(c, 2.0 + 0.1);
  double n2 = sobolev_norm(c, 2.0 + 0.25);
  double n3 = sobolev_norm(c, 2.0 + 0.4);
  CHECK(n1 <= n2 * (1.0 + 1e-15));
  CHECK(n2 <= n3 * (1.0 + 1e-15));

  ClosedCurve pr = enforce_constant_speed(ellipse_curve(256, 1.2, 0.8)).first;
  DiagnosticsRecord r = record(pr, 0.25);
  CHECK(r.speed_variation <= 1e-10);
}
