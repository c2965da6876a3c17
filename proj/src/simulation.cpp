#include "kiln/simulation.hpp"

#include <algorithm>
#include <cmath>

namespace kiln {

SimulationResult run_simulation(const KilnModel& model, const Scenario& s,
                                const RunOptions& opt) {
  SimulationResult result;
  std::vector<double> state = initial_state(model, s);
  DaeIntegrator integ(model, s.solver);
  integ.consistent_initialization(state);
  result.trajectory.push_back({0.0, state});

  const double horizon = opt.until_steady ? s.solver.max_sim_time : opt.duration;
  double t = 0.0;
  double next_record = opt.cadence;
  int quiet_steps = 0;
  while (t < horizon - 1e-9) {
    if (!s.solver.fixed_dt) {
      // Land exactly on the horizon instead of overshooting.
      const double dt = std::min(integ.dt(), horizon - t);
      integ.set_dt(std::max(dt, s.solver.dt_min));
    }
    const StepInfo info = integ.step(state);
    t += info.dt;
    ++result.steps;
    if (opt.progress) opt.progress(t, info);

    result.final_rhs_norm = integ.rhs_norm(state);
    if (opt.until_steady) {
      quiet_steps = result.final_rhs_norm < s.solver.steady_state_tol ? quiet_steps + 1 : 0;
      if (quiet_steps >= opt.steady_hold) {
        result.steady = true;
        break;
      }
    }
    if (t >= next_record - 1e-9) {
      result.trajectory.push_back({t, state});
      while (next_record <= t + 1e-9) next_record += opt.cadence;
    }
  }
  if (result.trajectory.back().time < t) result.trajectory.push_back({t, state});
  result.end_time = t;
  result.projected_moles = integ.total_projected_moles();
  return result;
}

} // namespace kiln
