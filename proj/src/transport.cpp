#include "kiln/transport.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "kiln/constants.hpp"

namespace kiln {

double WsggModel::emissivity(double t, double ratio_h2o_co2, double optical_depth) const {
  double m = ratio_h2o_co2;
  if (!(m > ratio_min_)) m = ratio_min_;
  if (m > ratio_max_) m = ratio_max_;
  if (optical_depth <= 0.0) return 0.0;
  const double tau = t / t_ref_;
  double eps = 0.0;
  for (const GreyGas& gg : gases_) {
    const double k = gg.k1 + gg.k2 * m;
    double a = 0.0;
    for (int i = 0; i < 3; ++i) {
      const double c = gg.c[0][i] + gg.c[1][i] * m + gg.c[2][i] * m * m;
      a += c * std::pow(tau, i);
    }
    eps += a * (1.0 - std::exp(-k * optical_depth));
  }
  if (eps < 0.0) eps = 0.0;
  if (eps > 1.0) eps = 1.0;
  return eps;
}

WsggModel WsggModel::parse(const std::string& json_text) {
  const auto root = nlohmann::json::parse(json_text);
  WsggModel model;
  model.t_ref_ = root.at("t_ref_K").get<double>();
  model.ratio_min_ = root.at("ratio_window").at(0).get<double>();
  model.ratio_max_ = root.at("ratio_window").at(1).get<double>();
  const auto& gases = root.at("grey_gases");
  if (gases.size() != model.gases_.size()) {
    throw std::invalid_argument("WSGG table must define exactly 4 grey gases");
  }
  for (std::size_t j = 0; j < model.gases_.size(); ++j) {
    const auto& g = gases.at(j);
    model.gases_[j].k1 = g.at("K1_per_bar_m").get<double>();
    model.gases_[j].k2 = g.at("K2_per_bar_m").get<double>();
    const auto& c = g.at("C");
    for (int m = 0; m < 3; ++m) {
      for (int i = 0; i < 3; ++i) {
        model.gases_[j].c[m][i] = c.at(m).at(i).get<double>();
      }
    }
  }
  return model;
}

WsggModel WsggModel::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open WSGG coefficient table: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

const WsggModel& WsggModel::builtin() {
  static const WsggModel model = parse(builtin_json());
  return model;
}

namespace transport {

double repose_angle(double omega, double a_omega, double b_omega) {
  const double xi = a_omega * omega + b_omega;
  if (!(xi > 0.0 && xi < kPi / 2.0)) {
    throw std::invalid_argument("repose angle out of (0, pi/2)");
  }
  return xi;
}

double solid_velocity(double omega, double inclination, double slope_angle, double chord,
                      double radius, double repose) {
  if (!(repose > 0.0)) throw std::invalid_argument("repose angle must be positive");
  if (chord <= 0.0) return 0.0;
  const double freq = omega / (2.0 * kPi); // rotations per second
  double ratio = chord / (2.0 * radius);
  if (ratio > 1.0) ratio = 1.0;
  const double half_angle = std::asin(ratio);
  const double cascade = half_angle > 0.0 ? kPi * chord / half_angle : 2.0 * kPi * radius;
  return freq * (inclination + slope_angle * std::cos(repose)) / std::sin(repose) * cascade;
}

double gas_velocity(double dpdz, double hydraulic_diameter, double viscosity, double density) {
  if (!(viscosity > 0.0 && density > 0.0 && hydraulic_diameter > 0.0)) {
    throw std::invalid_argument("gas_velocity: nonpositive fluid properties");
  }
  if (dpdz == 0.0) return 0.0;
  const double mag = std::abs(dpdz);
  const double smooth = std::tanh(30.0 * dpdz);
  // Turbulent branch (Blasius), closed form.
  const double coeff =
      2.0 / 0.316 *
      std::pow(std::pow(hydraulic_diameter, 5) / (viscosity * std::pow(density, 3)), 0.25);
  const double v_turb = std::pow(coeff * mag, 4.0 / 7.0);
  // Laminar branch (f = 64/Re, Hagen-Poiseuille), also closed form.
  const double v_lam = mag * hydraulic_diameter * hydraulic_diameter / (32.0 * viscosity);
  const double re_turb = density * v_turb * hydraulic_diameter / viscosity;
  double v;
  if (re_turb >= 2300.0) {
    v = v_turb;
  } else if (re_turb <= 2000.0) {
    // min() keeps v continuous and monotone in dpdz across the transition.
    v = std::min(v_lam, v_turb);
  } else {
    const double w = (re_turb - 2000.0) / 300.0;
    v = w * v_turb + (1.0 - w) * std::min(v_lam, v_turb);
  }
  return v * smooth;
}

double sutherland_constant(const AnchorPair& a) {
  if (!a.valid) throw std::invalid_argument("species has no anchor data");
  const double r = (a.v2 / a.v1) / std::pow(a.t2 / a.t1, 1.5);
  if (r == 1.0) return 0.0;
  return (r * a.t2 - a.t1) / (1.0 - r);
}

double sutherland_value(const AnchorPair& a, double t) {
  const double s = sutherland_constant(a);
  // A negative constant puts a pole below the first anchor; extrapolate
  // flat there instead (only reachable far outside the operating range).
  if (t + s < 0.05 * a.t1) t = a.t1;
  return a.v1 * std::pow(t / a.t1, 1.5) * (a.t1 + s) / (t + s);
}

double species_viscosity(const SpeciesSet& set, int gas, double t) {
  const auto& anchors = set.gas(gas).viscosity_anchors;
  if (!anchors.valid) {
    throw std::invalid_argument("no viscosity data for " + set.gas(gas).name);
  }
  return sutherland_value(anchors, t);
}

double species_conductivity(const SpeciesSet& set, int gas, double t) {
  const auto& anchors = set.gas(gas).conductivity_anchors;
  if (!anchors.valid) {
    throw std::invalid_argument("no conductivity data for " + set.gas(gas).name);
  }
  return sutherland_value(anchors, t);
}

void mixture_viscosity_conductivity(const SpeciesSet& set, double t,
                                    std::span<const double> mole_fractions, double* viscosity,
                                    double* conductivity) {
  // Species without transport data are treated as transparent: excluded,
  // with the remaining mole fractions renormalized.
  double x[kNumGases] = {0.0};
  double mu[kNumGases] = {0.0};
  double kg[kNumGases] = {0.0};
  double total = 0.0;
  for (int i = 0; i < kNumGases; ++i) {
    if (!set.gas(i).viscosity_anchors.valid) continue;
    if (mole_fractions[i] <= 0.0) continue;
    x[i] = mole_fractions[i];
    total += x[i];
  }
  if (total <= 0.0) {
    throw std::invalid_argument("mixture has no species with transport data");
  }
  for (int i = 0; i < kNumGases; ++i) {
    if (x[i] <= 0.0) continue;
    x[i] /= total;
    mu[i] = species_viscosity(set, i, t);
    kg[i] = species_conductivity(set, i, t);
  }
  double mu_mix = 0.0;
  double k_mix = 0.0;
  for (int i = 0; i < kNumGases; ++i) {
    if (x[i] <= 0.0) continue;
    const double m_i = set.gas(i).molar_mass;
    double denom = 0.0;
    for (int j = 0; j < kNumGases; ++j) {
      if (x[j] <= 0.0) continue;
      const double m_j = set.gas(j).molar_mass;
      const double phi =
          std::pow(1.0 + std::sqrt(mu[i] / mu[j]) * std::pow(m_j / m_i, 0.25), 2) /
          (2.0 * std::sqrt(2.0) * std::sqrt(1.0 + m_i / m_j));
      denom += x[j] * phi;
    }
    mu_mix += x[i] * mu[i] / denom;
    k_mix += x[i] * kg[i] / denom;
  }
  if (viscosity) *viscosity = mu_mix;
  if (conductivity) *conductivity = k_mix;
}

double solid_conductivity(std::span<const double> volume_fractions,
                          std::span<const double> conductivities) {
  double sum = 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < volume_fractions.size(); ++i) {
    if (volume_fractions[i] <= 0.0) continue;
    if (!(conductivities[i] > 0.0)) {
      throw std::invalid_argument("solid_conductivity: nonpositive species conductivity");
    }
    sum += volume_fractions[i] / conductivities[i];
    total += volume_fractions[i];
  }
  if (total <= 0.0) return 0.0;
  return total / sum;
}

double fuller_binary(const SpeciesSet& set, int gas_i, int gas_j, double t, double p) {
  const double m_i = set.gas(gas_i).molar_mass * 1e3; // g/mol in the correlation
  const double m_j = set.gas(gas_j).molar_mass * 1e3;
  const double m_ij = 2.0 / (1.0 / m_i + 1.0 / m_j);
  const double v_i = std::cbrt(set.gas(gas_i).diffusion_volume);
  const double v_j = std::cbrt(set.gas(gas_j).diffusion_volume);
  const double p_bar = p / kBar;
  const double d_cm2 =
      0.00143 * std::pow(t, 1.75) / (p_bar * std::sqrt(m_ij) * (v_i + v_j) * (v_i + v_j));
  return d_cm2 * 1e-4;
}

std::vector<double> gas_diffusion_coefficients(const SpeciesSet& set, double t, double p,
                                               std::span<const double> conc) {
  double total = 0.0;
  for (double c : conc) total += c;
  if (!(total > 0.0)) {
    throw std::invalid_argument("gas_diffusion_coefficients: empty gas phase");
  }
  std::vector<double> d(kNumGases, 0.0);
  for (int i = 0; i < kNumGases; ++i) {
    const double x_i = conc[i] / total;
    double sum = 0.0;
    for (int j = 0; j < kNumGases; ++j) {
      if (j == i) continue;
      const double x_j = conc[j] / total;
      if (x_j <= 0.0) continue;
      sum += x_j / fuller_binary(set, i, j, t, p);
    }
    // Blanc/Fairbanks-Wilke combination; a pure species has no counter
    // species to diffuse against.
    d[i] = sum > 0.0 ? (1.0 - x_i) / sum : 0.0;
  }
  return d;
}

TschengCoefficients tscheng_coefficients(const TschengInput& in) {
  TschengCoefficients out;
  const double d_e = in.effective_diameter;
  if (in.gas_viscosity > 0.0 && in.gas_density > 0.0 && d_e > 0.0) {
    out.re_d = in.gas_density * std::abs(in.gas_speed) * d_e / in.gas_viscosity;
    out.re_omega = in.gas_density * in.omega * d_e * d_e / in.gas_viscosity;
  }
  const double kg_over_de = d_e > 0.0 ? in.gas_conductivity / d_e : 0.0;
  if (out.re_d > 0.0 && in.fill_fraction > 0.0) {
    out.gas_solid = kg_over_de * 0.46 * std::pow(out.re_d, 0.535) *
                    std::pow(out.re_omega, 0.104) * std::pow(in.fill_fraction, -0.341);
  }
  if (out.re_d > 0.0 && out.re_omega > 0.0) {
    out.gas_wall =
        kg_over_de * 1.54 * std::pow(out.re_d, 0.575) * std::pow(out.re_omega, -0.292);
  }
  const double contact = in.radius * in.theta; // l_w
  if (contact > 0.0 && in.solid_conductivity > 0.0 && in.solid_heat_capacity_vol > 0.0 &&
      in.omega > 0.0) {
    const double alpha_b = in.solid_conductivity / in.solid_heat_capacity_vol;
    out.wall_solid = 11.6 * in.solid_conductivity / contact *
                     std::pow(in.omega * in.radius * in.radius * in.theta / alpha_b, 0.3);
  }
  return out;
}

HeatExchange convection_heat(double t_s, double t_g, double t_w, double area_gs, double area_gw,
                             double area_ws, const TschengCoefficients& beta) {
  HeatExchange q;
  q.gas_solid = area_gs * beta.gas_solid * (t_g - t_s);
  q.gas_wall = area_gw * beta.gas_wall * (t_g - t_w);
  q.wall_solid = area_ws * beta.wall_solid * (t_w - t_s);
  return q;
}

double gas_absorptivity(const WsggModel& wsgg, double t_s, double t_g, double ratio,
                        double p_sum_bar, double s_m) {
  if (!(t_s > 0.0 && t_g > 0.0)) throw std::invalid_argument("nonpositive temperature");
  const double eps_at_ts = wsgg.emissivity(t_s, ratio, p_sum_bar * s_m);
  double alpha = eps_at_ts * p_sum_bar * s_m * std::sqrt(t_s / t_g);
  if (alpha > 1.0) alpha = 1.0;
  return alpha;
}

HeatExchange radiation_heat(const RadiationInput& in) {
  HeatExchange q;
  const double t_s4 = std::pow(in.t_s, 4);
  const double t_g4 = std::pow(in.t_g, 4);
  const double t_w4 = std::pow(in.t_w, 4);
  q.gas_solid = kStefanBoltzmann * in.area_gs * (1.0 + in.emissivity_solid) *
                0.5 * (in.emissivity_gas * t_g4 - in.absorptivity_gas_solid * t_s4);
  q.gas_wall = kStefanBoltzmann * in.area_gw * (1.0 + in.emissivity_wall) *
               0.5 * (in.emissivity_gas * t_g4 - in.absorptivity_gas_wall * t_w4);
  const double omega_form =
      in.radius > 0.0 ? in.chord / (2.0 * (kPi - in.inclination) * in.radius) : 0.0;
  q.wall_solid = kStefanBoltzmann * in.area_ws * in.emissivity_wall * in.emissivity_solid *
                 omega_form * (t_w4 - t_s4);
  return q;
}

} // namespace transport
} // namespace kiln
