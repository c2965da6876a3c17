#pragma once

#include <array>
#include <iosfwd>
#include <string>

#include "kiln/simulation.hpp"

namespace kiln {

/// Standard raw-mix moduli computed on the feed mass fractions:
/// lime saturation factor 100 C / (2.8 S + 1.2 A + 0.65 F), silica
/// modulus S / (A + F), alumina modulus A / F with C/S/A/F the CaO,
/// SiO2, Al2O3, Fe2O3 mass fractions (bound or free).
struct FeedKpis {
  double lsf = 0.0;
  double ms = 0.0;
  double ma = 0.0;
};
FeedKpis feed_kpis(const KilnModel& model);

/// Solid-phase composition of one segment in mass percent, ordered like
/// the solid species vector.
std::array<double, kNumSolids> solid_mass_percent(const KilnModel& model,
                                                  std::span<const double> state,
                                                  int segment);

/// Freeboard composition of one segment in mole percent.
std::array<double, kNumGases> gas_mole_percent(std::span<const double> state, int segment);

/// P(z = L side) - P(z = 0 side) across the axis, Pa.
double pressure_drop(const KilnModel& model, std::span<const double> state);

/// Stacked per-segment profiles, one row per (snapshot, segment); the
/// column set is fixed and starts with time_s, segment, z_m.
void write_profiles_csv(const KilnModel& model, const std::vector<Snapshot>& trajectory,
                        std::ostream& out);
void write_profiles_csv(const KilnModel& model, const std::vector<Snapshot>& trajectory,
                        const std::string& path);

/// Outlet quantities over time: clinker mass %, gas outlet mole %,
/// pressure drop, and exit velocities.
void write_timeseries_csv(const KilnModel& model, const std::vector<Snapshot>& trajectory,
                          std::ostream& out);
void write_timeseries_csv(const KilnModel& model, const std::vector<Snapshot>& trajectory,
                          const std::string& path);

/// Final-state summary with the feed KPI block, machine-parsable
/// `key = value` lines.
void write_summary(const KilnModel& model, const SimulationResult& result, std::ostream& out);
void write_summary(const KilnModel& model, const SimulationResult& result,
                   const std::string& path);

} // namespace kiln
