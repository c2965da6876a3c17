#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "kiln/species.hpp"

namespace kiln {

/// One irreversible reaction: stoichiometry over the global species
/// ordering plus the modified-Arrhenius rate law
///   r = f * k_r T^n e^{-EA/RT} * prod_l C_l^alpha_l * prod_l P_l^beta_l
/// with C in mol/L and P_l in bar. The source-unit tag controls the
/// conversion of the raw rate to mol/(m^3 s).
struct ReactionSpec {
  enum class Unit { PerHour, MassPerVolSec, MolPerVolSec };

  std::string id;
  Phase rate_phase = Phase::Solid; // which temperature drives k(T)
  Unit unit = Unit::MolPerVolSec;
  int reference = -1; // global species index for the mass-based unit
  double rate_constant = 0.0;      // source units
  double temperature_exponent = 0.0;
  double activation_energy = 0.0;  // J/mol
  double tuning = 1.0;
  std::array<double, kNumSpecies> conc_order{};   // alpha, global index
  std::array<double, kNumGases> pressure_order{}; // beta, gas index
  std::array<int, kNumSpecies> stoichiometry{};   // signed, global index

  void validate(const SpeciesSet& species) const;
};

/// The reaction network. The default network is the 11-reaction clinker +
/// fuel set; a user file with the same schema may replace or re-tune it.
class ReactionSet {
 public:
  static const ReactionSet& builtin();
  static ReactionSet load(const std::string& path);
  static ReactionSet parse(const std::string& json_text);
  static const char* builtin_json();

  int size() const { return static_cast<int>(reactions_.size()); }
  const ReactionSpec& reaction(int j) const { return reactions_.at(j); }

  void set_tuning(int j, double factor);
  int index(const std::string& id) const; // throws on unknown id

 private:
  std::vector<ReactionSpec> reactions_;
};

namespace kinetics {

/// Per-reaction rates in mol/(m^3 s) of the unit-stoichiometry turnover.
/// Solid-phase rate laws read C_s at T_s; gas-phase laws read C_g at T_g.
/// Negative concentrations are treated as zero.
std::vector<double> reaction_rates(const ReactionSet& set, const SpeciesSet& species,
                                   double t_s, double t_g, double p,
                                   std::span<const double> conc_solid,
                                   std::span<const double> conc_gas);

/// R = S * r over the fixed species ordering; outputs mol/(m^3 s).
void production_rates(const ReactionSet& set, std::span<const double> rates,
                      std::span<double> prod_solid, std::span<double> prod_gas);

} // namespace kinetics
} // namespace kiln
