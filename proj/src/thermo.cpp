#include "kiln/thermo.hpp"

#include <cmath>
#include <stdexcept>

#include "kiln/constants.hpp"

namespace kiln {
namespace {

int phase_count(Phase phase) { return phase == Phase::Solid ? kNumSolids : kNumGases; }

} // namespace

Thermo::Thermo(const SpeciesSet& species, double solid_density_factor)
    : species_(&species), density_factor_(solid_density_factor) {
  if (!(solid_density_factor > 0.0)) {
    throw std::invalid_argument("solid density factor must be positive");
  }
}

double Thermo::molar_heat_capacity(Phase phase, int index, double t) const {
  const SpeciesProperties& sp =
      phase == Phase::Solid ? species_->solid(index) : species_->gas(index);
  if (!sp.cp.in_range(t)) out_of_range_.fetch_add(1, std::memory_order_relaxed);
  return sp.cp.evaluate(t);
}

bool Thermo::cp_in_range(Phase phase, int index, double t) const {
  const SpeciesProperties& sp =
      phase == Phase::Solid ? species_->solid(index) : species_->gas(index);
  return sp.cp.in_range(t);
}

double Thermo::molar_enthalpy(Phase phase, int index, double t) const {
  const SpeciesProperties& sp =
      phase == Phase::Solid ? species_->solid(index) : species_->gas(index);
  if (!sp.cp.in_range(t)) out_of_range_.fetch_add(1, std::memory_order_relaxed);
  return sp.enthalpy_formation + sp.cp.integral(kReferenceTemperature, t);
}

double Thermo::enthalpy(Phase phase, double t, std::span<const double> n) const {
  const int count = phase_count(phase);
  if (static_cast<int>(n.size()) != count) {
    throw std::invalid_argument("enthalpy: wrong species vector length");
  }
  double h = 0.0;
  for (int i = 0; i < count; ++i) {
    if (n[i] == 0.0) continue;
    h += n[i] * molar_enthalpy(phase, i, t);
  }
  return h;
}

double Thermo::solid_density(int i) const {
  return species_->solid(i).density * density_factor_;
}

double Thermo::solid_volume(std::span<const double> n) const {
  if (static_cast<int>(n.size()) != kNumSolids) {
    throw std::invalid_argument("solid_volume: wrong species vector length");
  }
  double v = 0.0;
  for (int i = 0; i < kNumSolids; ++i) {
    v += n[i] * species_->solid(i).molar_mass / solid_density(i);
  }
  return v;
}

double Thermo::gas_volume(double t, double p, std::span<const double> n) const {
  if (static_cast<int>(n.size()) != kNumGases) {
    throw std::invalid_argument("gas_volume: wrong species vector length");
  }
  double total = 0.0;
  for (double ni : n) total += ni;
  return kGasConstant * t / p * total;
}

double Thermo::solid_energy_density(double t, std::span<const double> conc) const {
  return enthalpy(Phase::Solid, t, conc);
}

double Thermo::gas_energy_density(double t, std::span<const double> conc) const {
  double total = 0.0;
  for (double c : conc) total += c;
  // U_g = H_g - P*V_g; with ideal gas the P dependence cancels.
  return enthalpy(Phase::Gas, t, conc) - kGasConstant * t * total;
}

MixtureState Thermo::solid_mixture(double t, std::span<const double> conc) const {
  MixtureState m;
  const double v_hat = solid_volume(conc);
  double mass = 0.0;
  double total = 0.0;
  for (int i = 0; i < kNumSolids; ++i) {
    mass += conc[i] * species_->solid(i).molar_mass;
    total += conc[i];
  }
  if (total <= 0.0 || v_hat <= 0.0) {
    m.empty = true;
    return m;
  }
  m.density = mass / v_hat;
  double cp = 0.0;
  for (int i = 0; i < kNumSolids; ++i) {
    if (conc[i] != 0.0) cp += conc[i] * molar_heat_capacity(Phase::Solid, i, t);
  }
  m.heat_capacity_vol = cp / v_hat;
  return m;
}

MixtureState Thermo::gas_mixture(double t, double p, std::span<const double> conc) const {
  MixtureState m;
  const double v_hat = gas_volume(t, p, conc);
  double mass = 0.0;
  double cp = 0.0;
  double total = 0.0;
  for (int i = 0; i < kNumGases; ++i) {
    mass += conc[i] * species_->gas(i).molar_mass;
    total += conc[i];
    if (conc[i] != 0.0) cp += conc[i] * molar_heat_capacity(Phase::Gas, i, t);
  }
  if (total <= 0.0 || v_hat <= 0.0) {
    m.empty = true;
    return m;
  }
  m.density = mass / v_hat;
  m.heat_capacity_vol = cp / v_hat;
  return m;
}

namespace {

template <typename Energy>
double invert_energy(Energy&& u_of_t, double u_target, double t_guess, double cap_floor) {
  double t = t_guess > 0.0 ? t_guess : 1000.0;
  for (int it = 0; it < 100; ++it) {
    const double f = u_of_t(t) - u_target;
    const double dt_fd = std::max(1e-4, 1e-7 * t);
    double dfdt = (u_of_t(t + dt_fd) - u_of_t(t - dt_fd)) / (2.0 * dt_fd);
    if (std::abs(dfdt) < cap_floor) dfdt = dfdt < 0.0 ? -cap_floor : cap_floor;
    double step = f / dfdt;
    if (step > 0.5 * t) step = 0.5 * t;
    if (step < -0.5 * t) step = -0.5 * t;
    t -= step;
    if (std::abs(step) < 1e-9 * std::max(1.0, t)) return t;
  }
  throw std::runtime_error("temperature_from_energy: no convergence");
}

} // namespace

double Thermo::temperature_from_solid_energy(double u, std::span<const double> conc,
                                             double t_guess) const {
  return invert_energy([&](double t) { return solid_energy_density(t, conc); }, u, t_guess,
                       1e-30);
}

double Thermo::temperature_from_gas_energy(double u, std::span<const double> conc,
                                           double t_guess) const {
  return invert_energy([&](double t) { return gas_energy_density(t, conc); }, u, t_guess,
                       1e-30);
}

} // namespace kiln
