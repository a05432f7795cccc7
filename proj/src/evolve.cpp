#include "sqgfront/evolve.hpp"

#include <cmath>

#include "sqgfront/reparam.hpp"
#include "sqgfront/scenarios.hpp"

namespace sqgfront {

const char* to_string(Termination t) {
  switch (t) {
    case Termination::kCompleted: return "completed";
    case Termination::kArcChordBlowup: return "arc_chord_blowup";
    case Termination::kSpeedDegenerate: return "speed_degenerate";
    case Termination::kUserLimit: return "user_limit";
  }
  return "unknown";
}

Vec2Field rhs(const ClosedCurve& curve, const KernelWorkspace& ws) {
  Vec2Field u = nontangential_velocity(curve, ws);
  LambdaField lf = lambda_from_decomposition(curve, ws);
  for (int i = 0; i < curve.n(); ++i) {
    u.c1[i] += lf.lambda.v[i] * ws.dx1[i];
    u.c2[i] += lf.lambda.v[i] * ws.dx2[i];
  }
  return u;
}

Vec2Field rhs(const ClosedCurve& curve) { return rhs(curve, kernel_g(curve)); }

ClosedCurve krasny_filter(const ClosedCurve& curve, double level) {
  if (level <= 0.0) return curve;
  auto [s1, s2] = to_spectral(curve);
  double max_amp = 0.0;
  for (int k = s1.kmin(); k <= s1.kmax(); ++k) {
    max_amp = std::max(max_amp, std::sqrt(std::norm(s1.at(k)) + std::norm(s2.at(k))));
  }
  double cut = level * max_amp;
  for (int k = s1.kmin(); k <= s1.kmax(); ++k) {
    double amp = std::sqrt(std::norm(s1.at(k)) + std::norm(s2.at(k)));
    if (amp < cut) {
      s1.at(k) = 0.0;
      s2.at(k) = 0.0;
    }
  }
  ClosedCurve out(curve.grid);
  out.time = curve.time;
  out.x1 = to_samples(s1, curve.grid).v;
  out.x2 = to_samples(s2, curve.grid).v;
  return out;
}

namespace {

ClosedCurve advance(const ClosedCurve& base, const Vec2Field& v, double dt) {
  ClosedCurve out(base.grid);
  out.time = base.time + dt;
  for (int i = 0; i < base.n(); ++i) {
    out.x1[i] = base.x1[i] + dt * v.c1[i];
    out.x2[i] = base.x2[i] + dt * v.c2[i];
  }
  return out;
}

}  // namespace

StepperState step(const StepperState& state) {
  if (state.dt == 0.0) {
    StepperState out = state;
    return out;
  }
  const ClosedCurve& x = state.curve;
  const double dt = state.dt;
  Vec2Field k1 = rhs(x);
  Vec2Field k2 = rhs(advance(x, k1, 0.5 * dt));
  Vec2Field k3 = rhs(advance(x, k2, 0.5 * dt));
  Vec2Field k4 = rhs(advance(x, k3, dt));

  StepperState out = state;
  out.curve = ClosedCurve(x.grid);
  out.curve.time = x.time + dt;
  const double w = dt / 6.0;
  double moved = 0.0;
  for (int i = 0; i < x.n(); ++i) {
    double m1 = w * (k1.c1[i] + 2.0 * k2.c1[i] + 2.0 * k3.c1[i] + k4.c1[i]);
    double m2 = w * (k1.c2[i] + 2.0 * k2.c2[i] + 2.0 * k3.c2[i] + k4.c2[i]);
    out.curve.x1[i] = x.x1[i] + m1;
    out.curve.x2[i] = x.x2[i] + m2;
    moved = std::max(moved, m1 * m1 + m2 * m2);
  }
  out.step_count = state.step_count + 1;

  // A step that moves nodes by a multiple of the curve size has left the
  // stability region (collapsing features under a fixed dt); stop with
  // the last good state instead of integrating garbage.
  auto [a0, per0] = area_perimeter(x);
  if (!std::isfinite(moved) || std::sqrt(moved) > 2.0 * per0) {
    throw ArcChordViolation("node displacement " + std::to_string(std::sqrt(moved)) +
                            " in one step exceeds the curve scale (suspected blow-up)");
  }

  if (state.filter_level > 0.0) out.curve = krasny_filter(out.curve, state.filter_level);

  if (state.reparam_trigger > 0.0 && speed_variation(out.curve) > state.reparam_trigger) {
    double t = out.curve.time;
    out.curve = enforce_constant_speed(out.curve).first;
    out.curve.time = t;
  }

  // Gate the state that becomes current (resampling near a pinch can move
  // the arc-chord sup, so the check runs last).
  double f = arc_chord(out.curve);
  if (f > state.f_max_threshold) {
    throw ArcChordViolation("arc-chord sup " + std::to_string(f) + " exceeds threshold " +
                            std::to_string(state.f_max_threshold));
  }
  return out;
}

RunResult run(const SimConfig& config, const ClosedCurve& initial,
              const std::function<void(const ClosedCurve&, long)>& on_snapshot) {
  RunResult result;
  StepperState state;
  state.curve = initial;
  state.filter_level = config.filter_level;
  state.reparam_trigger = config.reparam_trigger;
  state.f_max_threshold = config.f_max_threshold;

  // Auto CFL step from the initial right side.
  double dt = config.dt;
  if (dt == 0.0) {
    Vec2Field v0 = rhs(state.curve);
    double vmax = 0.0;
    for (int i = 0; i < state.curve.n(); ++i) {
      vmax = std::max(vmax, std::hypot(v0.c1[i], v0.c2[i]));
    }
    if (vmax == 0.0) vmax = 1.0;
    dt = config.cfl * state.curve.grid.spacing() / vmax;
  }
  long nsteps = static_cast<long>(std::ceil(config.t_end / dt - 1e-9));
  if (nsteps < 1) nsteps = 1;
  // Land exactly on t_end.
  dt = config.t_end / static_cast<double>(nsteps);
  state.dt = dt;
  result.dt_used = dt;

  auto emit_record = [&](const ClosedCurve& c) {
    KernelWorkspace ws = kernel_g(c);
    LambdaField lf = lambda_from_decomposition(c, ws);
    result.records.push_back(record(c, lf, config.s, ws));
  };

  try {
    emit_record(state.curve);
    for (long k = 0; k < nsteps; ++k) {
      if (config.max_steps > 0 && state.step_count >= config.max_steps) {
        result.termination = Termination::kUserLimit;
        result.message = "max_steps reached";
        break;
      }
      state = step(state);
      bool last = (k == nsteps - 1);
      if (state.step_count % config.record_interval == 0 || last) emit_record(state.curve);
      if (on_snapshot && config.snapshot_interval > 0 &&
          state.step_count % config.snapshot_interval == 0 && !last) {
        on_snapshot(state.curve, state.step_count);
      }
    }
  } catch (const ArcChordViolation& e) {
    result.termination = Termination::kArcChordBlowup;
    result.message = e.what();
  } catch (const SpeedDegenerate& e) {
    result.termination = Termination::kSpeedDegenerate;
    result.message = e.what();
  }
  result.final_curve = state.curve;
  result.steps_taken = state.step_count;
  if (on_snapshot) on_snapshot(state.curve, state.step_count);
  return result;
}

RunResult run(const SimConfig& config,
              const std::function<void(const ClosedCurve&, long)>& on_snapshot) {
  return run(config, make_scenario(config), on_snapshot);
}

}  // namespace sqgfront
