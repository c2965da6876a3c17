#include "kiln/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace kiln {
namespace {

bool finite(double v) { return std::isfinite(v); }

} // namespace

void SolverSettings::validate() const {
  if (!(newton_tol > 0.0) || !(fd_epsilon > 0.0) || !(steady_state_tol > 0.0)) {
    throw std::invalid_argument("solver tolerances must be positive");
  }
  if (!(dt_min > 0.0) || !(dt_min <= dt_init) || !(dt_init <= dt_max)) {
    throw std::invalid_argument("need 0 < dt_min <= dt_init <= dt_max");
  }
  if (newton_max_iter < 1) throw std::invalid_argument("newton_max_iter must be >= 1");
}

DaeIntegrator::DaeIntegrator(const DaeProblem& problem, SolverSettings settings)
    : problem_(&problem), settings_(settings), dt_(settings.dt_init),
      jac_(problem.size(), std::min(problem.half_bandwidth(), problem.size() - 1)) {
  settings_.validate();
  const int n = problem.size();
  eval_.resize(n);
  eval_pert_.resize(n);
  residual_.resize(n);
  trial_.resize(n);
  trial_residual_.resize(n);
}

// Implicit Euler residual, scaled. dt = 0 pins the differential rows to
// prev (used for consistent initialization).
double DaeIntegrator::scaled_residual_norm(std::span<const double> prev,
                                           std::span<const double> state, double dt,
                                           std::vector<double>& work) const {
  const int n = problem_->size();
  problem_->evaluate(state, eval_pert_);
  // Max norm, so the tolerance binds every row individually (the volume
  // closure row in particular must meet newton_tol on its own).
  double norm = 0.0;
  for (int i = 0; i < n; ++i) {
    double r;
    if (problem_->is_differential(i)) {
      r = (state[i] - prev[i] - dt * eval_pert_[i]) / problem_->variable_scale(i);
    } else {
      r = eval_pert_[i];
    }
    work[i] = r;
    if (!finite(r)) return std::numeric_limits<double>::infinity();
    norm = std::max(norm, std::abs(r));
  }
  return norm;
}

void DaeIntegrator::build_jacobian(std::span<const double> prev,
                                   std::span<const double> state, double dt) {
  const int n = problem_->size();
  const int hb = jac_.half_bandwidth();
  const int stride = 2 * hb + 1;
  jac_.clear();

  std::vector<double> base(n), pert(n);
  std::vector<double> z(state.begin(), state.end());
  auto residual_at = [&](std::vector<double>& out) {
    problem_->evaluate(z, eval_);
    for (int i = 0; i < n; ++i) {
      if (problem_->is_differential(i)) {
        out[i] = (z[i] - prev[i] - dt * eval_[i]) / problem_->variable_scale(i);
      } else {
        out[i] = eval_[i];
      }
    }
  };
  residual_at(base);

  // Striped forward differences: columns a stride apart touch disjoint
  // residual rows, so they share one perturbed evaluation.
  std::vector<double> delta(n);
  for (int group = 0; group < std::min(stride, n); ++group) {
    for (int j = group; j < n; j += stride) {
      const double s = problem_->variable_scale(j);
      delta[j] = settings_.fd_epsilon * (std::abs(z[j]) + s);
      z[j] += delta[j];
    }
    residual_at(pert);
    for (int j = group; j < n; j += stride) {
      z[j] -= delta[j];
      const double s = problem_->variable_scale(j);
      const int lo = std::max(0, j - hb);
      const int hi = std::min(n - 1, j + hb);
      for (int i = lo; i <= hi; ++i) {
        jac_.at(i, j) = (pert[i] - base[i]) / (delta[j] / s);
      }
    }
  }
  ++jacobian_refreshes_;
}

bool DaeIntegrator::newton_solve(std::span<const double> prev,
                                 std::vector<double>& state, double dt,
                                 StepInfo& info) {
  const int n = problem_->size();
  std::vector<double> step(n);
  double norm = scaled_residual_norm(prev, state, dt, residual_);
  bool rebuilt_this_iter = false;

  for (int iter = 0; iter < settings_.newton_max_iter; ++iter) {
    if (norm < settings_.newton_tol) {
      info.newton_iterations = iter;
      info.residual_norm = norm;
      return true;
    }
    if (!finite(norm)) {
      if (jac_valid_) {
        jac_valid_ = false;
        continue;
      }
      return false;
    }
    if (!jac_valid_ || jac_dt_ != dt) {
      build_jacobian(prev, state, dt);
      if (!jac_.factorize()) return false;
      jac_valid_ = true;
      jac_dt_ = dt;
      rebuilt_this_iter = true;
    }
    for (int i = 0; i < n; ++i) step[i] = -residual_[i];
    jac_.solve(step);
    if (settings_.verbose) {
      int worst = 0;
      for (int i = 1; i < n; ++i) {
        if (std::abs(residual_[i]) > std::abs(residual_[worst])) worst = i;
      }
      std::fprintf(stderr,
                   "  newton it=%d dt=%.3g norm=%.3e worst row %d (%.3e) rebuilt=%d\n",
                   iter, dt, norm, worst, residual_[worst], int(rebuilt_this_iter));
    }

    // Damped update on the scaled variables, projected onto the
    // nonnegative cone for concentration rows so the converged state never
    // needs a post-hoc cleanup (which would break the step's conservation
    // statement).
    double lambda = 1.0;
    double best_norm = std::numeric_limits<double>::infinity();
    double clipped = 0.0;
    bool improved = false;
    for (int half = 0; half <= 5; ++half) {
      clipped = 0.0;
      for (int i = 0; i < n; ++i) {
        trial_[i] = state[i] + lambda * step[i] * problem_->variable_scale(i);
        if (trial_[i] < 0.0 && problem_->is_concentration(i)) {
          clipped -= trial_[i];
          trial_[i] = 0.0;
        }
      }
      const double trial_norm = scaled_residual_norm(prev, trial_, dt, trial_residual_);
      if (trial_norm < norm) {
        improved = true;
        best_norm = trial_norm;
        break;
      }
      lambda *= 0.5;
    }
    if (settings_.verbose && !improved) {
      std::fprintf(stderr, "  newton it=%d: no improvement (norm %.3e)\n", iter, norm);
    }
    if (!improved) {
      if (!rebuilt_this_iter) {
        // Stale Jacobian is the usual culprit; refresh and retry once.
        jac_valid_ = false;
        continue;
      }
      return false;
    }
    const double rate = best_norm / norm;
    state = trial_;
    residual_ = trial_residual_;
    norm = best_norm;
    info.projected_moles = clipped;
    // Modified Newton: keep the factorization while convergence is brisk.
    if (rate > 0.5) jac_valid_ = false;
    rebuilt_this_iter = false;
  }
  if (norm < settings_.newton_tol) {
    info.newton_iterations = settings_.newton_max_iter;
    info.residual_norm = norm;
    return true;
  }
  return false;
}

StepInfo DaeIntegrator::step(std::vector<double>& state) {
  const int n = problem_->size();
  StepInfo info;
  std::vector<double> prev = state;

  while (true) {
    // Predictor: explicit Euler on the differential rows.
    problem_->evaluate(prev, eval_);
    bool predictor_ok = true;
    info.projected_moles = 0.0;
    for (int i = 0; i < n; ++i) {
      if (problem_->is_differential(i)) {
        state[i] = prev[i] + dt_ * eval_[i];
        if (state[i] < 0.0 && problem_->is_concentration(i)) {
          info.projected_moles -= state[i];
          state[i] = 0.0;
        }
        if (!finite(state[i])) predictor_ok = false;
      } else {
        state[i] = prev[i];
      }
    }
    if (!predictor_ok) state = prev;

    const bool accepted = newton_solve(prev, state, dt_, info);
    std::string reject_reason;
    if (!accepted) reject_reason = "Newton stalled";

    if (accepted) {
      total_projected_ += info.projected_moles;
      info.dt = dt_;
      if (!settings_.fixed_dt && info.newton_iterations <= 6 && info.retries == 0) {
        dt_ = std::min(dt_ * 1.5, settings_.dt_max);
      }
      return info;
    }

    state = prev;
    jac_valid_ = false;
    ++info.retries;
    if (settings_.fixed_dt || dt_ * 0.5 < settings_.dt_min) {
      throw std::runtime_error("time step underflow at dt = " + std::to_string(dt_) +
                               " s (" + reject_reason + ")");
    }
    dt_ *= 0.5;
  }
}

void DaeIntegrator::consistent_initialization(std::vector<double>& state) {
  StepInfo info;
  std::vector<double> prev = state;
  jac_valid_ = false;
  const bool ok = newton_solve(prev, state, 0.0, info);
  jac_valid_ = false;
  if (!ok) {
    scaled_residual_norm(prev, state, 0.0, residual_);
    int worst = 0;
    for (std::size_t i = 1; i < residual_.size(); ++i) {
      if (std::abs(residual_[i]) > std::abs(residual_[worst])) worst = static_cast<int>(i);
    }
    throw std::runtime_error("consistent initialization failed; worst residual " +
                             std::to_string(residual_[worst]) + " at row " +
                             std::to_string(worst));
  }
}

double DaeIntegrator::rhs_norm(std::span<const double> state) const {
  problem_->evaluate(state, eval_pert_);
  double sum = 0.0;
  int count = 0;
  for (int i = 0; i < problem_->size(); ++i) {
    if (!problem_->is_differential(i)) continue;
    const double r = eval_pert_[i] / problem_->variable_scale(i);
    sum += r * r;
    ++count;
  }
  return count > 0 ? std::sqrt(sum / count) : 0.0;
}

} // namespace kiln
