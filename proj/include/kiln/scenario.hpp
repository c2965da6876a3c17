#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "kiln/balances.hpp"

namespace kiln {

/// Uniform freeboard state the simulation starts from: no solids, humid air
/// at one temperature, and a linear pressure ramp along the axis.
struct InitialConditions {
  double temperature = celsius_to_kelvin(800.0); // K, gas and wall alike
  double h2o_fraction = 0.01;                    // mole fraction of the gas
  double pressure_start = 1.00005 * kBar;        // Pa at z = 0
  double pressure_end = 1.00010 * kBar;          // Pa at z = L
};

/// One complete, runnable problem description: geometry, boundary streams,
/// initialization, solver knobs, and output cadence. The text form is a
/// line-oriented `key = value` file (see format()); any key left out keeps
/// the built-in reference value.
struct Scenario {
  KilnParameters kiln;
  BoundaryConditions boundary;
  InitialConditions initial;
  SolverSettings solver;
  /// Multipliers on the built-in per-reaction tuning factors, r1..r11.
  std::array<double, 11> reaction_tuning{};
  double output_cadence = 600.0; // s between recorded snapshots
  double duration = 36000.0;     // s, default span for a plain run

  Scenario();

  /// Throws std::invalid_argument listing every offending field at once.
  void validate() const;

  /// Serialize to the config format; format() then parse() round-trips.
  std::string format() const;
  void save(const std::string& path) const;

  static Scenario parse(const std::string& text);
  static Scenario load(const std::string& path);
};

/// The built-in 50 m / 2 m / 2% / 4 rpm kiln with 102 t/h raw meal at
/// 800 deg C against 3.9 t/h suspended carbon and secondary air at
/// 1200 deg C. Scenario{} gives the same values.
Scenario reference_scenario();

/// Model with the scenario's tuning multipliers already applied.
std::unique_ptr<KilnModel> build_model(const Scenario& s);

/// Algebraically consistent state vector realizing s.initial on the model's
/// grid (empty bed, humid air, linear pressure).
std::vector<double> initial_state(const KilnModel& model, const Scenario& s);

///// Forward-construct a full state from per-segment physical quantities:
/// solid concentrations, gas mole fractions, temperatures, and pressure.
/// Gas totals come from the ideal-gas law on the freeboard volume; the
/// algebraic rows are set to their exact solutions.
std::vector<double> make_state(const KilnModel& model,
                               const std::vector<std::array<double, kNumSolids>>& conc_solid,
                               const std::vector<std::array<double, kNumGases>>& gas_fracs,
                               const std::vector<double>& t_s,
                               const std::vector<double>& t_g,
                               const std::vector<double>& t_w,
                               const std::vector<double>& p);

} // namespace kiln
