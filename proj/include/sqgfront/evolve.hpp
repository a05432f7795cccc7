#pragma once

#include <functional>
#include <vector>

#include "sqgfront/config.hpp"
#include "sqgfront/diagnostics.hpp"
#include "sqgfront/kernel.hpp"
#include "sqgfront/lambda.hpp"
#include "sqgfront/types.hpp"

namespace sqgfront {

enum class Termination { kCompleted, kArcChordBlowup, kSpeedDegenerate, kUserLimit };

const char* to_string(Termination t);

struct StepperState {
  ClosedCurve curve;
  long step_count = 0;
  double dt = 0.0;
  double filter_level = 1e-12;
  double reparam_trigger = 1e-3;
  double f_max_threshold = 1e4;
};

/// Full right side of the evolution equation: nontangential velocity plus
/// lambda * dx, evaluated on one shared workspace.
Vec2Field rhs(const ClosedCurve& curve);
Vec2Field rhs(const ClosedCurve& curve, const KernelWorkspace& ws);

/// Zeroes curve Fourier modes whose vector amplitude falls below
/// level * (max amplitude). level = 0 disables.
ClosedCurve krasny_filter(const ClosedCurve& curve, double level);

/// One classical RK4 step of size state.dt, then the Krasny filter, then
/// constant-speed reprojection when the speed variation exceeds the
/// trigger. dt = 0 returns the state bit-for-bit unchanged. Throws
/// ArcChordViolation / SpeedDegenerate instead of producing Inf.
StepperState step(const StepperState& state);

struct RunResult {
  std::vector<DiagnosticsRecord> records;
  ClosedCurve final_curve;
  Termination termination = Termination::kCompleted;
  double dt_used = 0.0;
  long steps_taken = 0;
  std::string message;  // non-empty on abnormal termination
};

/// Steps the configured scenario curve (or the supplied initial curve) to
/// t_end, recording diagnostics every record_interval steps; on_snapshot,
/// when set, fires every snapshot_interval steps and on the final state.
RunResult run(const SimConfig& config, const ClosedCurve& initial,
              const std::function<void(const ClosedCurve&, long)>& on_snapshot = {});
RunResult run(const SimConfig& config,
              const std::function<void(const ClosedCurve&, long)>& on_snapshot = {});

}  // namespace sqgfront
