#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "kiln/scenario.hpp"

namespace kiln {

struct Snapshot {
  double time = 0.0; // s
  std::vector<double> state;
};

struct RunOptions {
  double duration = 0.0;     // simulated seconds; ignored when until_steady
  double cadence = 600.0;    // s between recorded snapshots
  bool until_steady = false; // stop on the steady-state detector instead
  int steady_hold = 10;      // consecutive quiet steps required
  /// Optional per-step callback (simulated time, step info).
  std::function<void(double, const StepInfo&)> progress;
};

struct SimulationResult {
  std::vector<Snapshot> trajectory; // always includes t = 0 and the end
  double end_time = 0.0;            // s
  bool steady = false;
  std::int64_t steps = 0;
  double final_rhs_norm = 0.0;   // scaled 1/s
  double projected_moles = 0.0;  // cumulative concentration clipping
};

/// Integrate the scenario's initial state forward. Until-steady runs are
/// capped by solver.max_sim_time; a plain run stops at opt.duration.
SimulationResult run_simulation(const KilnModel& model, const Scenario& s,
                                const RunOptions& opt);

} // namespace kiln
