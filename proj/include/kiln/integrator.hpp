#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "kiln/banded.hpp"

namespace kiln {

/// Semi-explicit index-1 DAE, F = [x' - f(x,y); g(x,y)] = 0, presented as
/// one interleaved unknown vector so the Jacobian stays banded. evaluate()
/// writes dx/dt into differential rows and the (pre-scaled) algebraic
/// residual into algebraic rows.
class DaeProblem {
 public:
  virtual ~DaeProblem() = default;

  virtual int size() const = 0;
  virtual bool is_differential(int i) const = 0;
  /// Concentration-like rows may be projected to zero when slightly
  /// negative after an accepted step.
  virtual bool is_concentration(int i) const {
    (void)i;
    return false;
  }
  virtual void evaluate(std::span<const double> state, std::span<double> out) const = 0;
  /// Typical magnitude of variable i; Newton iterates and the implicit
  /// Euler residual are both scaled by it.
  virtual double variable_scale(int i) const {
    (void)i;
    return 1.0;
  }
  /// Max |i - j| over nonzero Jacobian entries.
  virtual int half_bandwidth() const = 0;
};

struct SolverSettings {
  double dt_init = 1.0;       // s
  double dt_min = 1e-6;       // s
  double dt_max = 60.0;       // s
  double newton_tol = 1e-8;   // scaled residual norm
  int newton_max_iter = 25;
  double fd_epsilon = 1e-7;   // relative perturbation of scaled variables
  double steady_state_tol = 1e-9; // scaled ||f|| threshold
  double max_sim_time = 3600.0 * 100.0; // s
  bool fixed_dt = false;      // disable step-size adaptation (testing)
  bool verbose = false;       // trace Newton iterations on stderr

  void validate() const;
};

struct StepInfo {
  double dt = 0.0;          // accepted step size
  int newton_iterations = 0;
  int retries = 0;          // dt halvings before acceptance
  double residual_norm = 0.0;
  double projected_moles = 0.0; // total concentration clipped to zero
};

/// Implicit Euler with damped, modified Newton over a banded
/// finite-difference Jacobian.
class DaeIntegrator {
 public:
  DaeIntegrator(const DaeProblem& problem, SolverSettings settings);

  /// Advance one accepted step (halving dt internally on Newton failure).
  /// Throws std::runtime_error on dt underflow.
  StepInfo step(std::vector<double>& state);

  /// Solve g(x, y) = 0 for the algebraic rows, holding differential rows
  /// fixed. Throws on non-convergence, naming the worst residual row.
  void consistent_initialization(std::vector<double>& state);

  /// Scaled RMS norm of dx/dt over the differential rows (steady-state
  /// monitor: 1/s units of relative change).
  double rhs_norm(std::span<const double> state) const;

  double dt() const { return dt_; }
  void set_dt(double dt) { dt_ = dt; }
  std::int64_t jacobian_refreshes() const { return jacobian_refreshes_; }
  double total_projected_moles() const { return total_projected_; }

 private:
  double scaled_residual_norm(std::span<const double> prev,
                              std::span<const double> state, double dt,
                              std::vector<double>& work) const;
  void build_jacobian(std::span<const double> prev, std::span<const double> state,
                      double dt);
  bool newton_solve(std::span<const double> prev, std::vector<double>& state,
                    double dt, StepInfo& info);

  const DaeProblem* problem_;
  SolverSettings settings_;
  double dt_;
  BandedMatrix jac_;
  bool jac_valid_ = false;
  double jac_dt_ = -1.0;
  std::int64_t jacobian_refreshes_ = 0;
  double total_projected_ = 0.0;
  mutable std::vector<double> eval_, eval_pert_;
  std::vector<double> residual_, trial_, trial_residual_;
};

} // namespace kiln
