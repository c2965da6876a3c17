#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "kiln/species.hpp"

namespace kiln {

/// Signed pairwise heat flows, W; positive from the first to the second
/// subscript phase (gs: gas to solid, gw: gas to wall, ws: wall to solid).
struct HeatExchange {
  double gas_solid = 0.0;
  double gas_wall = 0.0;
  double wall_solid = 0.0;
};

/// Weighted-sum-of-grey-gases emissivity model: four grey gases plus one
/// transparent gas. k_j = K1_j + K2_j*M and a_j quadratic in T/T_ref with
/// coefficients quadratic in the H2O/CO2 molar ratio M.
class WsggModel {
 public:
  struct GreyGas {
    double k1 = 0.0; // 1/(bar m)
    double k2 = 0.0;
    std::array<std::array<double, 3>, 3> c{}; // c[m][i]: ratio power m, temp power i
  };

  static const WsggModel& builtin();
  static WsggModel load(const std::string& path);
  static WsggModel parse(const std::string& json_text);
  static const char* builtin_json();

  /// Emissivity for optical depth p_sum * s_m (bar * m) at temperature t.
  /// The H2O/CO2 ratio is clamped to the fit window.
  double emissivity(double t, double ratio_h2o_co2, double optical_depth) const;

  double ratio_min() const { return ratio_min_; }
  double ratio_max() const { return ratio_max_; }

 private:
  std::array<GreyGas, 4> gases_{};
  double t_ref_ = 1200.0;
  double ratio_min_ = 0.01;
  double ratio_max_ = 4.0;
};

namespace transport {

/// xi = a_omega * omega + b_omega; must land in (0, pi/2).
double repose_angle(double omega, double a_omega, double b_omega);

/// Saeman bed transport velocity. omega is the rotation rate in rad/s and
/// is converted to rotation frequency internally; returns 0 for an empty
/// bed (chord = 0).
double solid_velocity(double omega, double inclination, double slope_angle, double chord,
                      double radius, double repose);

/// Darcy-Weisbach gas velocity from the driving pressure gradient
/// (Pa/m, positive drives positive velocity). Blasius friction factor with
/// a laminar fallback below Re ~ 2300; sgn smoothed by tanh(30 * dpdz).
double gas_velocity(double dpdz, double hydraulic_diameter, double viscosity, double density);

/// Sutherland constant solved from a two-point anchor pair.
double sutherland_constant(const AnchorPair& a);
/// Sutherland-form fit through both anchors, exact at the anchor points.
double sutherland_value(const AnchorPair& a, double t);

double species_viscosity(const SpeciesSet& set, int gas, double t);    // Pa s
double species_conductivity(const SpeciesSet& set, int gas, double t); // W/(m K)

/// Wilke / Wassiljewa mixture rules. Species without anchor data (C_sus)
/// are excluded and the mole fractions renormalized over the rest.
void mixture_viscosity_conductivity(const SpeciesSet& set, double t,
                                    std::span<const double> mole_fractions, double* viscosity,
                                    double* conductivity);

/// Layered (harmonic) solid conductivity weighted by volume fraction.
double solid_conductivity(std::span<const double> volume_fractions,
                          std::span<const double> conductivities);

/// Fuller binary coefficient, m^2/s (T in K, P in Pa).
double fuller_binary(const SpeciesSet& set, int gas_i, int gas_j, double t, double p);

/// Blanc-combined effective diffusion coefficient per gas species, m^2/s.
/// A pure species (x_i = 1) gets 0.
std::vector<double> gas_diffusion_coefficients(const SpeciesSet& set, double t, double p,
                                               std::span<const double> conc);

struct TschengInput {
  double gas_conductivity = 0.0;   // k_g
  double solid_conductivity = 0.0; // k_s
  double gas_density = 0.0;        // rho_g (own volume)
  double gas_viscosity = 0.0;
  double gas_speed = 0.0; // |v_g|
  double solid_heat_capacity_vol = 0.0; // rho_s * C_ps, J/(m^3 K)
  double omega = 0.0;
  double radius = 0.0;
  double theta = 0.0;
  double effective_diameter = 0.0;
  double fill_fraction = 0.0;
};

struct TschengCoefficients {
  double gas_solid = 0.0; // beta_gs, W/(m^2 K)
  double gas_wall = 0.0;
  double wall_solid = 0.0;
  double re_d = 0.0;
  double re_omega = 0.0;
};

/// Tscheng convection coefficients; degenerate geometry (empty bed, zero
/// flow) zeroes the affected coefficient.
TschengCoefficients tscheng_coefficients(const TschengInput& in);

HeatExchange convection_heat(double t_s, double t_g, double t_w, double area_gs, double area_gw,
                             double area_ws, const TschengCoefficients& beta);

/// Gas absorptivity alpha_g = eps_g(T_s) * P_m * S_m * sqrt(T_s / T_g)
/// with P_m the CO2+H2O partial-pressure sum in bar.
double gas_absorptivity(const WsggModel& wsgg, double t_s, double t_g, double ratio,
                        double p_sum_bar, double s_m);

struct RadiationInput {
  double t_s = 0.0, t_g = 0.0, t_w = 0.0;
  double area_gs = 0.0, area_gw = 0.0, area_ws = 0.0;
  double emissivity_gas = 0.0;
  double absorptivity_gas_solid = 0.0; // alpha_g evaluated at T_s
  double absorptivity_gas_wall = 0.0;  // alpha_g evaluated at T_w
  double emissivity_wall = 0.85;
  double emissivity_solid = 0.9;
  double chord = 0.0;
  double radius = 0.0;
  double inclination = 0.0;
};

HeatExchange radiation_heat(const RadiationInput& in);

} // namespace transport
} // namespace kiln
