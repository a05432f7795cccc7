#include "sqgfront/scenarios.hpp"

#include <cmath>

#include "sqgfront/diagnostics.hpp"
#include "sqgfront/reparam.hpp"
#include "sqgfront/spectral.hpp"

namespace sqgfront {

namespace {

// splitmix64; gives each radial mode an n-independent (seed, k) stream so
// refining the grid extends the same curve instead of redrawing it.
uint64_t splitmix64(uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double unit_double(uint64_t bits) {  // [0, 1)
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

ClosedCurve project_constant_speed(ClosedCurve c) {
  // One pass leaves a truncation-level residual; iterate while it helps.
  for (int pass = 0; pass < 3; ++pass) {
    if (speed_variation(c) <= 1e-9) break;
    c = enforce_constant_speed(c).first;
  }
  return c;
}

}  // namespace

ClosedCurve circle_curve(int n, double radius, double cx, double cy) {
  ClosedCurve c{Grid(n)};
  for (int i = 0; i < n; ++i) {
    double g = c.grid.node(i);
    c.x1[i] = cx + radius * std::cos(g);
    c.x2[i] = cy + radius * std::sin(g);
  }
  return c;
}

ClosedCurve ellipse_curve(int n, double a, double b) {
  ClosedCurve c{Grid(n)};
  for (int i = 0; i < n; ++i) {
    double g = c.grid.node(i);
    c.x1[i] = a * std::cos(g);
    c.x2[i] = b * std::sin(g);
  }
  return c;
}

ClosedCurve radial_curve(int n, const std::vector<double>& amp, const std::vector<double>& phase) {
  ClosedCurve c{Grid(n)};
  for (int i = 0; i < n; ++i) {
    double g = c.grid.node(i);
    double r = 1.0;
    for (size_t k = 0; k < amp.size(); ++k) {
      r += amp[k] * std::cos(static_cast<double>(k) * g + (k < phase.size() ? phase[k] : 0.0));
    }
    c.x1[i] = r * std::cos(g);
    c.x2[i] = r * std::sin(g);
  }
  return c;
}

ClosedCurve make_scenario(const std::string& name, int n, const ScenarioParams& params,
                          double s, unsigned long seed) {
  ClosedCurve c;
  if (name == "circle") {
    return circle_curve(n, params.radius);  // already constant speed
  } else if (name == "ellipse") {
    c = ellipse_curve(n, params.a, params.b);
  } else if (name == "perturbed_circle") {
    std::vector<double> amp(params.mode + 1, 0.0), phase;
    amp[params.mode] = params.amplitude;
    c = radial_curve(n, amp, phase);
  } else if (name == "rough_h2s") {
    // r(gamma) = 1 + sum_{k=2}^{n/4} c k^{-(2.5+s+0.01)} u_k cos(k gamma + theta_k),
    // u_k uniform in [-1,1]: marginal H^{2+s} membership.
    double q = 2.5 + s + 0.01;
    std::vector<double> amp(n / 4 + 1, 0.0), phase(n / 4 + 1, 0.0);
    for (int k = 2; k <= n / 4; ++k) {
      uint64_t h1 = splitmix64(static_cast<uint64_t>(seed) * 0x100000001b3ULL + k);
      uint64_t h2 = splitmix64(h1);
      double u = 2.0 * unit_double(h1) - 1.0;
      amp[k] = params.rough_c * std::pow(static_cast<double>(k), -q) * u;
      phase[k] = kTwoPi * unit_double(h2);
    }
    c = radial_curve(n, amp, phase);
  } else if (name == "filament_probe") {
    // Band-limited dumbbell (degree 3): two lobes of scale ~1/2 bridged
    // by a neck of full gap d at the origin. The near-touching points
    // (0, +-d/2) sit half a period apart, so F_max ~ pi/d
    // = 2*pi*(lobe scale)/d, while the boundary curvature stays O(1).
    double w = 0.5 * params.gap;
    ClosedCurve raw{Grid(n)};
    for (int i = 0; i < n; ++i) {
      double g = raw.grid.node(i);
      double cg = std::cos(g);
      raw.x1[i] = 1.5 * cg;
      raw.x2[i] = std::sin(g) * (w + (1.0 - w) * cg * cg);
    }
    c = raw;
  } else {
    throw ConfigError("unknown scenario '" + name + "'");
  }
  c = project_constant_speed(std::move(c));
  arc_chord(c);  // rejects self-intersecting parameters by throwing
  return c;
}

ClosedCurve make_scenario(const SimConfig& config) {
  return make_scenario(config.scenario, config.n, config.params, config.s, config.seed);
}

namespace {

double h1_distance(const ClosedCurve& x, const ClosedCurve& y) {
  ClosedCurve diff(x.grid);
  for (int i = 0; i < x.n(); ++i) {
    diff.x1[i] = x.x1[i] - y.x1[i];
    diff.x2[i] = x.x2[i] - y.x2[i];
  }
  return sobolev_norm(diff, 1.0);
}

double root_mean_speed(const ClosedCurve& c) {
  Vec2Field dx = derivative(c, 1);
  Kahan acc;
  for (int i = 0; i < c.n(); ++i) acc.add(dx.c1[i] * dx.c1[i] + dx.c2[i] * dx.c2[i]);
  return std::sqrt(acc.result() / c.n());
}

}  // namespace

TwinRunReport twin_run(const SimConfig& config, double delta, int perturb_mode) {
  ClosedCurve x0 = make_scenario(config);

  ClosedCurve y0 = x0;
  if (delta != 0.0) {
    Vec2Field dx = derivative(x0, 1);
    for (int i = 0; i < x0.n(); ++i) {
      double speed = std::hypot(dx.c1[i], dx.c2[i]);
      double nx = dx.c2[i] / speed, ny = -dx.c1[i] / speed;  // outward-ish normal
      double bump = delta * std::cos(perturb_mode * x0.grid.node(i));
      y0.x1[i] += bump * nx;
      y0.x2[i] += bump * ny;
    }
    y0 = enforce_constant_speed(y0).first;
  }

  // Same dt for both trajectories: fix it from the base run's CFL once.
  SimConfig cfg = config;
  if (cfg.dt == 0.0) {
    Vec2Field v0 = rhs(x0);
    double vmax = 0.0;
    for (int i = 0; i < x0.n(); ++i) vmax = std::max(vmax, std::hypot(v0.c1[i], v0.c2[i]));
    if (vmax == 0.0) vmax = 1.0;
    double dt = cfg.cfl * x0.grid.spacing() / vmax;
    long nsteps = std::max(1L, static_cast<long>(std::ceil(cfg.t_end / dt - 1e-9)));
    cfg.dt = cfg.t_end / static_cast<double>(nsteps);
  }

  long nsteps = std::max(1L, static_cast<long>(std::llround(cfg.t_end / cfg.dt)));

  StepperState sx{x0, 0, cfg.dt, cfg.filter_level, cfg.reparam_trigger, cfg.f_max_threshold};
  StepperState sy{y0, 0, cfg.dt, cfg.filter_level, cfg.reparam_trigger, cfg.f_max_threshold};

  TwinRunReport rep;
  auto sample = [&](double t) {
    rep.times.push_back(t);
    double dh1 = h1_distance(sx.curve, sy.curve);
    double dsp = std::abs(root_mean_speed(sx.curve) - root_mean_speed(sy.curve));
    rep.d_h1.push_back(dh1);
    rep.d_speed.push_back(dsp);
    rep.d_total.push_back(std::sqrt(dh1 * dh1 + dsp * dsp));
  };

  sample(0.0);
  for (long k = 0; k < nsteps; ++k) {
    bool stopped = false;
    try {
      sx = step(sx);
    } catch (const ArcChordViolation&) {
      rep.termination_x = Termination::kArcChordBlowup;
      stopped = true;
    } catch (const SpeedDegenerate&) {
      rep.termination_x = Termination::kSpeedDegenerate;
      stopped = true;
    }
    try {
      sy = step(sy);
    } catch (const ArcChordViolation&) {
      rep.termination_y = Termination::kArcChordBlowup;
      stopped = true;
    } catch (const SpeedDegenerate&) {
      rep.termination_y = Termination::kSpeedDegenerate;
      stopped = true;
    }
    if (stopped) break;  // report the partial series
    if ((k + 1) % cfg.record_interval == 0 || k == nsteps - 1) {
      sample(sx.curve.time);
    }
  }

  // Least-squares slope of log d_total over time (skipping exact zeros,
  // which occur only for delta = 0).
  std::vector<double> ts, ls;
  for (size_t i = 0; i < rep.times.size(); ++i) {
    if (rep.d_total[i] > 0.0) {
      ts.push_back(rep.times[i]);
      ls.push_back(std::log(rep.d_total[i]));
    }
  }
  if (ts.size() >= 2) {
    double n = static_cast<double>(ts.size());
    double st = 0, sl = 0, stt = 0, stl = 0;
    for (size_t i = 0; i < ts.size(); ++i) {
      st += ts[i];
      sl += ls[i];
      stt += ts[i] * ts[i];
      stl += ts[i] * ls[i];
    }
    double denom = n * stt - st * st;
    if (denom > 0) {
      rep.fitted_c = (n * stl - st * sl) / denom;
      double intercept = (sl - rep.fitted_c * st) / n;
      double ss = 0;
      for (size_t i = 0; i < ts.size(); ++i) {
        double r = ls[i] - (intercept + rep.fitted_c * ts[i]);
        ss += r * r;
      }
      rep.fit_rms_residual = std::sqrt(ss / n);
    }
  }
  return rep;
}

namespace {

// Max node distance on the common (coarser) node set; grids must nest.
double terminal_error(const ClosedCurve& coarse, const ClosedCurve& ref) {
  int stride = ref.n() / coarse.n();
  double worst = 0.0;
  for (int i = 0; i < coarse.n(); ++i) {
    double d1 = coarse.x1[i] - ref.x1[i * stride];
    double d2 = coarse.x2[i] - ref.x2[i * stride];
    worst = std::max(worst, std::hypot(d1, d2));
  }
  return worst;
}

}  // namespace

ConvergenceReport convergence_study(const SimConfig& base, const std::vector<int>& n_list,
                                    const std::vector<double>& dt_list) {
  ConvergenceReport rep;
  rep.n_list = n_list;
  rep.dt_list = dt_list;

  if (n_list.size() >= 2) {
    std::vector<ClosedCurve> finals;
    for (int n : n_list) {
      SimConfig cfg = base;
      cfg.n = n;
      finals.push_back(run(cfg).final_curve);
    }
    const ClosedCurve& ref = finals.back();
    for (size_t i = 0; i + 1 < finals.size(); ++i) {
      rep.spatial_errors.push_back(terminal_error(finals[i], ref));
    }
    for (size_t i = 0; i + 1 < rep.spatial_errors.size(); ++i) {
      rep.spatial_orders.push_back(std::log2(rep.spatial_errors[i] / rep.spatial_errors[i + 1]));
    }
  }

  if (dt_list.size() >= 2) {
    std::vector<ClosedCurve> finals;
    for (double dt : dt_list) {
      SimConfig cfg = base;
      cfg.dt = dt;
      finals.push_back(run(cfg).final_curve);
    }
    const ClosedCurve& ref = finals.back();
    for (size_t i = 0; i + 1 < finals.size(); ++i) {
      rep.temporal_errors.push_back(terminal_error(finals[i], ref));
    }
    for (size_t i = 0; i + 1 < rep.temporal_errors.size(); ++i) {
      rep.temporal_orders.push_back(
          std::log2(rep.temporal_errors[i] / rep.temporal_errors[i + 1]));
    }
  }
  return rep;
}

RegularizationReport regularization_study(const ClosedCurve& curve, double s,
                                          const std::vector<double>& eps_list) {
  RegularizationReport rep;
  rep.eps_list = eps_list;
  for (double eps : eps_list) {
    ClosedCurve smoothed = eps > 0.0 ? mollify(curve, eps) : curve;
    ClosedCurve tilde = eps > 0.0 ? enforce_constant_speed(smoothed).first : smoothed;
    ClosedCurve diff(curve.grid);
    for (int i = 0; i < curve.n(); ++i) {
      diff.x1[i] = tilde.x1[i] - curve.x1[i];
      diff.x2[i] = tilde.x2[i] - curve.x2[i];
    }
    rep.errors.push_back(sobolev_norm(diff, 2.0 + s));
  }
  rep.monotone = true;
  for (size_t i = 0; i + 1 < rep.errors.size(); ++i) {
    if (rep.errors[i + 1] > rep.errors[i]) rep.monotone = false;
  }
  return rep;
}

}  // namespace sqgfront
