// Command-line front end: run / diagnose / twin / converge / reparam / plot.
// Exit 0 on success, 2 when a run terminates singularity-suspected (data is
// still written), 1 on usage or configuration errors.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "sqgfront/evolve.hpp"
#include "sqgfront/io.hpp"
#include "sqgfront/parallel.hpp"
#include "sqgfront/reparam.hpp"
#include "sqgfront/scenarios.hpp"

namespace fs = std::filesystem;
using namespace sqgfront;

namespace {

void add_config_options(CLI::App* cmd, SimConfig& cfg, std::string& config_path) {
  cmd->add_option("--config", config_path, "flat key = value config file");
  cmd->add_option("--scenario", cfg.scenario,
                  "circle | ellipse | perturbed_circle | rough_h2s | filament_probe");
  cmd->add_option("--n", cfg.n, "grid size (even, >= 8)");
  cmd->add_option("--dt", cfg.dt, "time step (0 = auto CFL)");
  cmd->add_option("--cfl", cfg.cfl, "CFL factor for auto dt");
  cmd->add_option("--t-end", cfg.t_end, "final time");
  cmd->add_option("--s", cfg.s, "Sobolev exponent in H^{2+s}");
  cmd->add_option("--filter-level", cfg.filter_level, "Krasny threshold (0 = off)");
  cmd->add_option("--reparam-trigger", cfg.reparam_trigger, "speed-variation trigger");
  cmd->add_option("--f-max-threshold", cfg.f_max_threshold, "arc-chord blow-up stop");
  cmd->add_option("--record-interval", cfg.record_interval, "steps between records");
  cmd->add_option("--snapshot-interval", cfg.snapshot_interval, "steps between snapshots");
  cmd->add_option("--max-steps", cfg.max_steps, "step limit (0 = unlimited)");
  cmd->add_option("--out", cfg.output_dir, "output directory");
  cmd->add_option("--seed", cfg.seed, "scenario RNG seed");
  cmd->add_option("--threads", cfg.threads, "worker threads (0 = auto)");
  cmd->add_option("--radius", cfg.params.radius, "circle radius");
  cmd->add_option("--a", cfg.params.a, "ellipse semi-axis a");
  cmd->add_option("--b", cfg.params.b, "ellipse semi-axis b");
  cmd->add_option("--amplitude", cfg.params.amplitude, "perturbed_circle amplitude");
  cmd->add_option("--mode", cfg.params.mode, "perturbed_circle mode");
  cmd->add_option("--gap", cfg.params.gap, "filament_probe gap");
}

// Flags override file values: reparse argv on top of the file-derived config.
SimConfig resolve_config(CLI::App* cmd, const std::string& config_path, const SimConfig& flags) {
  if (config_path.empty()) return flags;
  SimConfig cfg = parse_config_file(config_path);
  for (const auto* opt : cmd->get_options()) {
    if (opt->count() == 0) continue;
    std::string name = opt->get_name();
    if (name == "--config" || name == "--delta" || name == "--perturb-mode" ||
        name == "--in" || name.rfind("--", 0) != 0)
      continue;
    std::string key = name.substr(2);
    for (auto& ch : key) {
      if (ch == '-') ch = '_';
    }
    if (key == "out") key = "output_dir";
    apply_key_value(cfg, key, opt->results().back());
  }
  return cfg;
}

void finish_setup(SimConfig& cfg) {
  if (const char* env = std::getenv("SQGFRONT_OUTPUT_DIR");
      env && cfg.output_dir == ".") {
    cfg.output_dir = env;
  }
  std::string warning = cfg.validate();
  if (!warning.empty()) std::cerr << warning << "\n";
  set_thread_count(cfg.threads);
  fs::create_directories(cfg.output_dir);
}

int exit_code_for(Termination t) {
  return (t == Termination::kArcChordBlowup || t == Termination::kSpeedDegenerate) ? 2 : 0;
}

int cmd_run(const SimConfig& cfg) {
  fs::path dir(cfg.output_dir);
  auto on_snapshot = [&](const ClosedCurve& c, long s) {
    char name[64];
    std::snprintf(name, sizeof(name), "snapshot_%06ld.txt", s);
    write_snapshot((dir / name).string(), c, cfg.s);
  };
  RunResult res = run(cfg, on_snapshot);
  write_diagnostics_csv((dir / "diagnostics.csv").string(), res.records);
  write_snapshot((dir / "snapshot_final.txt").string(), res.final_curve, cfg.s);
  std::cout << "termination: " << to_string(res.termination) << "\n"
            << "steps: " << res.steps_taken << "  dt: " << format_shortest(res.dt_used) << "\n"
            << "records: " << res.records.size() << " -> " << (dir / "diagnostics.csv").string()
            << "\n";
  if (!res.message.empty()) std::cout << "detail: " << res.message << "\n";
  return exit_code_for(res.termination);
}

int cmd_diagnose(const std::string& input, const SimConfig& cfg, bool s_given) {
  Snapshot snap = read_snapshot(input);
  double s = s_given ? cfg.s : snap.s;
  DiagnosticsRecord r = record(snap.curve, s);
  std::cout << kCsvHeader << "\n" << csv_row(r) << "\n";
  return 0;
}

int cmd_twin(const SimConfig& cfg, double delta, int perturb_mode) {
  TwinRunReport rep = twin_run(cfg, delta, perturb_mode);
  fs::path dir(cfg.output_dir);
  std::ofstream out(dir / "twin.csv", std::ios::binary);
  out << "time,d_h1,d_speed,d_total\n";
  for (size_t i = 0; i < rep.times.size(); ++i) {
    out << format_shortest(rep.times[i]) << ',' << format_shortest(rep.d_h1[i]) << ','
        << format_shortest(rep.d_speed[i]) << ',' << format_shortest(rep.d_total[i]) << '\n';
  }
  out.close();
  std::ofstream fit(dir / "twin_fit.json", std::ios::binary);
  fit << "{\n  \"fitted_C\": " << format_shortest(rep.fitted_c)
      << ",\n  \"fit_rms_residual\": " << format_shortest(rep.fit_rms_residual)
      << ",\n  \"termination_x\": \"" << to_string(rep.termination_x)
      << "\",\n  \"termination_y\": \"" << to_string(rep.termination_y) << "\"\n}\n";
  std::cout << "fitted_C: " << format_shortest(rep.fitted_c)
            << "  rms_log_residual: " << format_shortest(rep.fit_rms_residual) << "\n";
  int code = exit_code_for(rep.termination_x);
  return code != 0 ? code : exit_code_for(rep.termination_y);
}

int cmd_converge(const SimConfig& cfg, std::vector<int> n_list, std::vector<double> dt_list) {
  ConvergenceReport rep = convergence_study(cfg, n_list, dt_list);
  fs::path dir(cfg.output_dir);
  std::ofstream out(dir / "orders.json", std::ios::binary);
  auto arr = [&](auto& vec) {
    std::string s = "[";
    for (size_t i = 0; i < vec.size(); ++i) {
      if (i) s += ", ";
      s += format_shortest(static_cast<double>(vec[i]));
    }
    return s + "]";
  };
  out << "{\n  \"n_list\": " << arr(rep.n_list)
      << ",\n  \"spatial_errors\": " << arr(rep.spatial_errors)
      << ",\n  \"spatial_orders\": " << arr(rep.spatial_orders)
      << ",\n  \"dt_list\": " << arr(rep.dt_list)
      << ",\n  \"temporal_errors\": " << arr(rep.temporal_errors)
      << ",\n  \"temporal_orders\": " << arr(rep.temporal_orders) << "\n}\n";
  std::cout << "orders written to " << (dir / "orders.json").string() << "\n";
  return 0;
}

int cmd_reparam(const std::string& input, const std::string& output, double eps, double s) {
  Snapshot snap = read_snapshot(input);
  ClosedCurve c = snap.curve;
  if (eps > 0.0) c = mollify(c, eps);
  c = enforce_constant_speed(c).first;
  write_snapshot(output, c, s > 0 ? s : snap.s);
  std::cout << "reparametrized curve written to " << output << "\n";
  return 0;
}

int cmd_plot(const std::string& dir_in) {
  fs::path dir(dir_in);
  // Emits gnuplot scripts referencing the CSVs; no plotting dependency here.
  {
    std::ofstream gp(dir / "plot_diagnostics.gp", std::ios::binary);
    gp << "set datafile separator ','\n"
          "set key autotitle columnhead\n"
          "set xlabel 'time'\n"
          "set terminal pngcairo size 1200,800\n"
          "set output 'diagnostics.png'\n"
          "set multiplot layout 2,2\n"
          "set logscale y\n"
          "plot 'diagnostics.csv' using 1:2 with lines title 'F_max'\n"
          "plot 'diagnostics.csv' using 1:4 with lines title 'speed variation'\n"
          "unset logscale y\n"
          "plot 'diagnostics.csv' using 1:6 with lines title 'H^{2+s} norm'\n"
          "plot 'diagnostics.csv' using 1:12 with lines title 'area', "
          "'diagnostics.csv' using 1:13 with lines title 'perimeter'\n"
          "unset multiplot\n";
  }
  if (fs::exists(dir / "twin.csv")) {
    std::ofstream gp(dir / "plot_twin.gp", std::ios::binary);
    gp << "set datafile separator ','\n"
          "set key autotitle columnhead\n"
          "set xlabel 'time'\n"
          "set logscale y\n"
          "set terminal pngcairo size 800,600\n"
          "set output 'twin.png'\n"
          "plot 'twin.csv' using 1:4 with linespoints title 'd_total'\n";
  }
  std::cout << "plot scripts written to " << dir.string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SQG sharp-front contour dynamics simulator"};
  app.require_subcommand(1);

  SimConfig cfg;
  std::string config_path;

  auto* run_cmd = app.add_subcommand("run", "evolve a scenario, write diagnostics + snapshots");
  add_config_options(run_cmd, cfg, config_path);

  auto* diag_cmd = app.add_subcommand("diagnose", "one-shot diagnostics record for a curve file");
  std::string diag_in;
  diag_cmd->add_option("--in", diag_in, "snapshot file")->required();
  add_config_options(diag_cmd, cfg, config_path);

  auto* twin_cmd = app.add_subcommand("twin", "twin-run stability experiment");
  double delta = 1e-6;
  int perturb_mode = 2;
  twin_cmd->add_option("--delta", delta, "perturbation size");
  twin_cmd->add_option("--perturb-mode", perturb_mode, "normal displacement mode");
  add_config_options(twin_cmd, cfg, config_path);

  auto* conv_cmd = app.add_subcommand("converge", "convergence study, write orders.json");
  std::vector<int> n_list;
  std::vector<double> dt_list;
  conv_cmd->add_option("--n-list", n_list, "ascending grid sizes (finest = reference)");
  conv_cmd->add_option("--dt-list", dt_list, "descending steps (smallest = reference)");
  add_config_options(conv_cmd, cfg, config_path);

  auto* rep_cmd = app.add_subcommand("reparam", "mollify + constant-speed projection of a curve");
  std::string rep_in, rep_out = "reparam.txt";
  double rep_eps = 0.0;
  rep_cmd->add_option("--in", rep_in, "input snapshot")->required();
  rep_cmd->add_option("--out-file", rep_out, "output snapshot");
  rep_cmd->add_option("--eps", rep_eps, "mollifier width (0 = none)");
  add_config_options(rep_cmd, cfg, config_path);

  auto* plot_cmd = app.add_subcommand("plot", "emit plot scripts referencing the CSVs");
  std::string plot_dir = ".";
  plot_cmd->add_option("--dir", plot_dir, "directory holding the CSVs");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(plot_cmd)) return cmd_plot(plot_dir);

    CLI::App* active = app.get_subcommands().front();
    SimConfig resolved = resolve_config(active, config_path, cfg);
    finish_setup(resolved);

    if (app.got_subcommand(run_cmd)) return cmd_run(resolved);
    if (app.got_subcommand(diag_cmd))
      return cmd_diagnose(diag_in, resolved, diag_cmd->count("--s") > 0);
    if (app.got_subcommand(twin_cmd)) return cmd_twin(resolved, delta, perturb_mode);
    if (app.got_subcommand(conv_cmd)) return cmd_converge(resolved, n_list, dt_list);
    if (app.got_subcommand(rep_cmd)) {
      fs::path outp = fs::path(resolved.output_dir) / rep_out;
      return cmd_reparam(rep_in, outp.string(), rep_eps, cfg.s);
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
