#pragma once

#include <string>
#include <vector>

#include "sqgfront/config.hpp"
#include "sqgfront/evolve.hpp"
#include "sqgfront/types.hpp"

namespace sqgfront {

/// Builds the named initial curve on an n-point grid. Every scenario is
/// projected to the constant-speed parametrization (iterated until the
/// residual speed variation drops below 1e-9 or stops improving) and is
/// rejected if self-intersecting. Known names: circle, ellipse,
/// perturbed_circle, rough_h2s, filament_probe.
ClosedCurve make_scenario(const std::string& name, int n, const ScenarioParams& params,
                          double s = 0.25, unsigned long seed = 7);
ClosedCurve make_scenario(const SimConfig& config);

/// Raw (un-reparametrized) generators, for tests that need the
/// parametric form directly.
ClosedCurve circle_curve(int n, double radius = 1.0, double cx = 0.0, double cy = 0.0);
ClosedCurve ellipse_curve(int n, double a, double b);
ClosedCurve radial_curve(int n, const std::vector<double>& radial_cos_amp,
                         const std::vector<double>& radial_phase);

/// Time series of the twin-run contraction quantity.
struct TwinRunReport {
  std::vector<double> times;
  std::vector<double> d_h1;     // |x - y|_{H^1} on the common grid
  std::vector<double> d_speed;  // |A_x^{1/2} - A_y^{1/2}|
  std::vector<double> d_total;  // sqrt(d_h1^2 + d_speed^2)
  double fitted_c = 0.0;        // least-squares slope of log d_total
  double fit_rms_residual = 0.0;  // RMS residual of the log-linear fit
  Termination termination_x = Termination::kCompleted;
  Termination termination_y = Termination::kCompleted;
};

/// Evolves the configured scenario and a copy perturbed by delta along a
/// single-mode normal displacement (then reprojected to constant speed),
/// with identical dt and record cadence, and fits log d_total linearly in
/// time. delta = 0 skips the perturbation entirely so both trajectories
/// are bit-identical.
TwinRunReport twin_run(const SimConfig& config, double delta, int perturb_mode = 2);

struct ConvergenceReport {
  std::vector<int> n_list;
  std::vector<double> spatial_errors;  // vs finest-n reference, common nodes
  std::vector<double> spatial_orders;
  std::vector<double> dt_list;
  std::vector<double> temporal_errors;  // vs smallest-dt reference
  std::vector<double> temporal_orders;
};

/// Self-convergence study: terminal-state errors against the finest run.
/// n_list ascending (last entry = reference); dt_list descending likewise.
ConvergenceReport convergence_study(const SimConfig& base, const std::vector<int>& n_list,
                                    const std::vector<double>& dt_list);

struct RegularizationReport {
  std::vector<double> eps_list;
  std::vector<double> errors;  // |reparam(mollify(x, eps)) - x|_{H^{2+s}}
  bool monotone = false;
};

/// The regularization pipeline error per mollification width.
/// eps_list must be descending toward 0.
RegularizationReport regularization_study(const ClosedCurve& curve, double s,
                                          const std::vector<double>& eps_list);

}  // namespace sqgfront
