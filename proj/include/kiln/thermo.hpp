#pragma once

#include <atomic>
#include <cstdint>
#include <span>

#include "kiln/species.hpp"

namespace kiln {

/// Bulk density and volumetric heat capacity of one phase, both referred
/// to the phase's own occupied volume.
struct MixtureState {
  double density = 0.0;           // kg/m^3
  double heat_capacity_vol = 0.0; // J/(m^3 K)
  bool empty = false;             // no moles present; density reported as 0
};

/// Enthalpy / volume / energy-density functions over the species database.
/// All functions are linear in the mole (or concentration, or flux) vector,
/// so the same evaluation yields H, the densities, and the fluxes.
///
/// Pure and safe for concurrent use; the out-of-range diagnostic counter is
/// the only mutable state.
class Thermo {
 public:
  explicit Thermo(const SpeciesSet& species, double solid_density_factor = 1.0);

  const SpeciesSet& species() const { return *species_; }

  /// c_m(T) = C0 + C1*T + C2*T^2, J/(mol K). No clamping outside the table
  /// validity range; such evaluations are counted.
  double molar_heat_capacity(Phase phase, int index, double t) const;
  bool cp_in_range(Phase phase, int index, double t) const;

  /// h_i(T) = dHf_i + integral of c_m from T0, J/mol (closed form).
  double molar_enthalpy(Phase phase, int index, double t) const;

  /// H(T, P, n) over one phase vector; n may be moles, concentrations, or
  /// fluxes (any sign for flux/rate vectors). J per unit of n.
  double enthalpy(Phase phase, double t, std::span<const double> n) const;

  /// V_s(n) = sum_i (M_i / rho_i) n_i with the density tuning factor applied.
  double solid_volume(std::span<const double> n) const;
  /// V_g(T, P, n) = (R T / P) sum_i n_i (ideal gas).
  double gas_volume(double t, double p, std::span<const double> n) const;

  /// Energy densities (J/m^3) from concentrations:
  ///   U_s = H_s;  U_g = H_g - P*V_g = H_g - R*T*sum(C).
  double solid_energy_density(double t, std::span<const double> conc) const;
  double gas_energy_density(double t, std::span<const double> conc) const;

  MixtureState solid_mixture(double t, std::span<const double> conc) const;
  MixtureState gas_mixture(double t, double p, std::span<const double> conc) const;

  /// Tuned density of solid i, kg/m^3.
  double solid_density(int i) const;
  double solid_density_factor() const { return density_factor_; }

  /// Invert the phase energy density for temperature (scalar Newton).
  double temperature_from_solid_energy(double u, std::span<const double> conc,
                                       double t_guess) const;
  double temperature_from_gas_energy(double u, std::span<const double> conc,
                                     double t_guess) const;

  std::int64_t out_of_range_evaluations() const {
    return out_of_range_.load(std::memory_order_relaxed);
  }

 private:
  const SpeciesSet* species_;
  double density_factor_;
  mutable std::atomic<std::int64_t> out_of_range_{0};
};

} // namespace kiln
