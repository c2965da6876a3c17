#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>

#include "kiln/output.hpp"
#include "kiln/scenario.hpp"
#include "kiln/simulation.hpp"

namespace {

kiln::Scenario load_or_default(const std::string& path) {
  if (path.empty()) return kiln::reference_scenario();
  return kiln::Scenario::load(path);
}

void write_all(const kiln::KilnModel& model, const kiln::SimulationResult& result,
               const std::string& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  kiln::write_profiles_csv(model, result.trajectory, (fs::path(out_dir) / "profiles.csv").string());
  kiln::write_timeseries_csv(model, result.trajectory,
                             (fs::path(out_dir) / "timeseries.csv").string());
  kiln::write_summary(model, result, (fs::path(out_dir) / "summary.txt").string());
}

int run_common(const std::string& scenario_path, double duration, double cadence,
               int segments, const std::string& out_dir, bool until_steady, bool quiet) {
  kiln::Scenario s = load_or_default(scenario_path);
  if (duration >= 0.0) s.duration = duration;
  if (cadence > 0.0) s.output_cadence = cadence;
  if (segments > 0) s.kiln.dims.n_segments = segments;
  auto model = kiln::build_model(s);

  kiln::RunOptions opt;
  opt.duration = s.duration;
  opt.cadence = s.output_cadence;
  opt.until_steady = until_steady;
  double last_report = 0.0;
  if (!quiet) {
    opt.progress = [&](double t, const kiln::StepInfo& info) {
      if (t - last_report >= 600.0) {
        std::fprintf(stderr, "t = %8.0f s  dt = %6.2f s  newton = %d\n", t, info.dt,
                     info.newton_iterations);
        last_report = t;
      }
    };
  }
  const kiln::SimulationResult result = kiln::run_simulation(*model, s, opt);
  if (!out_dir.empty()) write_all(*model, result, out_dir);
  kiln::write_summary(*model, result, std::cout);
  if (until_steady && !result.steady) {
    std::cerr << "error: runtime: no steady state within solver.max_time_s\n";
    return 1;
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"1D rotary cement kiln simulator"};
  app.require_subcommand(1);

  std::string scenario_path, out_dir;
  double duration = -1.0, cadence = -1.0;
  int segments = -1;
  bool quiet = false;

  auto add_common = [&](CLI::App* cmd, bool with_duration) {
    cmd->add_option("-s,--scenario", scenario_path, "scenario config file (default: built-in)");
    cmd->add_option("-o,--out", out_dir, "output directory for CSV/summary files");
    cmd->add_option("-c,--cadence", cadence, "snapshot cadence override, s");
    cmd->add_option("-n,--segments", segments, "segment-count override");
    cmd->add_flag("-q,--quiet", quiet, "suppress progress lines");
    if (with_duration) {
      cmd->add_option("-d,--duration", duration, "simulated duration override, s");
    }
  };

  CLI::App* run = app.add_subcommand("run", "simulate a scenario for a fixed duration");
  add_common(run, true);
  CLI::App* steady =
      app.add_subcommand("steady", "run until the steady-state detector trips");
  add_common(steady, false);

  CLI::App* validate = app.add_subcommand("validate", "parse and validate a scenario only");
  validate->add_option("-s,--scenario", scenario_path, "scenario config file");
  bool dump = false;
  validate->add_flag("--dump", dump, "echo the fully resolved scenario");

  CLI::App* props = app.add_subcommand("props", "dump the built-in databases as JSON");
  bool p_species = false, p_reactions = false, p_radiation = false;
  props->add_flag("--species", p_species, "species properties only");
  props->add_flag("--reactions", p_reactions, "reaction set only");
  props->add_flag("--radiation", p_radiation, "grey-gas emissivity model only");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      return run_common(scenario_path, duration < 0.0 ? -1.0 : duration, cadence, segments,
                        out_dir, false, quiet);
    }
    if (steady->parsed()) {
      return run_common(scenario_path, -1.0, cadence, segments, out_dir, true, quiet);
    }
    if (validate->parsed()) {
      kiln::Scenario s = load_or_default(scenario_path);
      s.validate();
      if (dump) std::cout << s.format();
      std::cout << "ok\n";
      return 0;
    }
    if (props->parsed()) {
      const bool all = !p_species && !p_reactions && !p_radiation;
      if (all || p_species) std::cout << kiln::SpeciesSet::builtin_json() << "\n";
      if (all || p_reactions) std::cout << kiln::ReactionSet::builtin_json() << "\n";
      if (all || p_radiation) std::cout << kiln::WsggModel::builtin_json() << "\n";
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: validation: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: runtime: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
