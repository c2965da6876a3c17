#include <doctest.h>

#include <array>
#include <cmath>

#include "kiln/constants.hpp"
#include "kiln/transport.hpp"

using namespace kiln;
using namespace kiln::transport;

namespace {
const SpeciesSet& db() { return SpeciesSet::builtin(); }
} // namespace

TEST_CASE("Sutherland fit reproduces both anchors and the solved constant") {
  const auto& n2 = db().gas(kN2).viscosity_anchors;
  CHECK(sutherland_constant(n2) == doctest::Approx(131.8403290).epsilon(1e-8)); // [DERIVED]
  CHECK(sutherland_value(n2, 300.0) == doctest::Approx(17.89e-6).epsilon(1e-12));
  CHECK(sutherland_value(n2, 1000.0) == doctest::Approx(41.54e-6).epsilon(1e-12));
  CHECK(species_viscosity(db(), kN2, 650.0) ==
        doctest::Approx(3.15140067e-5).epsilon(1e-8)); // [DERIVED]
  // H2O's 300 K anchor sits on the liquid side; the solved constant is
  // negative and the fit still hits both anchors.
  const auto& h2o = db().gas(kH2O).viscosity_anchors;
  CHECK(sutherland_constant(h2o) == doctest::Approx(-294.89529).epsilon(1e-6)); // [DERIVED]
  CHECK(sutherland_value(h2o, 1000.0) == doctest::Approx(37.615e-6).epsilon(1e-10));
  CHECK(sutherland_value(h2o, 100.0) > 0.0); // guarded below the pole
}

TEST_CASE("pure-gas mixture properties equal the species values") {
  std::array<double, kNumGases> x{};
  x[kN2] = 1.0;
  double mu = 0.0, kg = 0.0;
  mixture_viscosity_conductivity(db(), 800.0, x, &mu, &kg);
  CHECK(mu == doctest::Approx(species_viscosity(db(), kN2, 800.0)).epsilon(1e-14));
  CHECK(kg == doctest::Approx(species_conductivity(db(), kN2, 800.0)).epsilon(1e-14));
}

TEST_CASE("suspended carbon is transparent to the mixture rules") {
  std::array<double, kNumGases> with{};
  with[kN2] = 0.4;
  with[kO2] = 0.4;
  with[kCsus] = 0.2;
  std::array<double, kNumGases> without{};
  without[kN2] = 0.5;
  without[kO2] = 0.5;
  double mu1, k1, mu2, k2;
  mixture_viscosity_conductivity(db(), 1200.0, with, &mu1, &k1);
  mixture_viscosity_conductivity(db(), 1200.0, without, &mu2, &k2);
  CHECK(mu1 == doctest::Approx(mu2));
  CHECK(k1 == doctest::Approx(k2));
  CHECK(mu1 > 1e-5);
  CHECK(mu1 < 1e-4);
}

TEST_CASE("mixture viscosity lies within the species bracket") {
  std::array<double, kNumGases> x{};
  x[kCO2] = 0.25;
  x[kN2] = 0.55;
  x[kO2] = 0.15;
  x[kH2O] = 0.05;
  double mu, kg;
  mixture_viscosity_conductivity(db(), 1500.0, x, &mu, &kg);
  double lo = 1e9, hi = 0.0;
  for (int i : {kCO2, kN2, kO2, kH2O}) {
    lo = std::min(lo, species_viscosity(db(), i, 1500.0));
    hi = std::max(hi, species_viscosity(db(), i, 1500.0));
  }
  CHECK(mu > 0.8 * lo);
  CHECK(mu < 1.2 * hi);
  CHECK(kg > 0.0);
}

TEST_CASE("layered solid conductivity is the volume-weighted harmonic mean") {
  std::array<double, 3> vf{0.5, 0.3, 0.2};
  std::array<double, 3> k{2.0, 30.0, 1.4};
  const double expect = 1.0 / (0.5 / 2.0 + 0.3 / 30.0 + 0.2 / 1.4);
  CHECK(solid_conductivity(vf, k) == doctest::Approx(expect));
  std::array<double, 3> single{0.0, 1.0, 0.0};
  CHECK(solid_conductivity(single, k) == doctest::Approx(30.0));
  std::array<double, 3> none{};
  CHECK(solid_conductivity(none, k) == 0.0);
}

TEST_CASE("Fuller binary diffusion and Blanc combination") {
  // CO2/N2 at 1000 K and 1 bar. [DERIVED] 1.6195 cm^2/s from the Fuller
  // correlation evaluated in an independent script.
  const double d = fuller_binary(db(), kCO2, kN2, 1000.0, 1.0e5);
  CHECK(d == doctest::Approx(1.61953357e-4).epsilon(1e-8));
  CHECK(fuller_binary(db(), kN2, kCO2, 1000.0, 1.0e5) == doctest::Approx(d));
  // Doubling pressure halves D.
  CHECK(fuller_binary(db(), kCO2, kN2, 1000.0, 2.0e5) == doctest::Approx(d / 2.0));

  // Binary mixture: effective coefficient reduces to the binary one.
  std::array<double, kNumGases> binary{};
  binary[kCO2] = 3.0;
  binary[kN2] = 7.0;
  auto deff = gas_diffusion_coefficients(db(), 1000.0, 1.0e5, binary);
  CHECK(deff[kCO2] == doctest::Approx(d));
  CHECK(deff[kN2] == doctest::Approx(d));
  CHECK(deff[kO2] > 0.0); // absent species get the trace-limit coefficient

  // Ternary spot value. [DERIVED]
  std::array<double, kNumGases> tern{};
  tern[kCO2] = 0.5;
  tern[kN2] = 0.3;
  tern[kO2] = 0.2;
  auto d3 = gas_diffusion_coefficients(db(), 1000.0, 1.0e5, tern);
  CHECK(d3[kCO2] == doctest::Approx(1.62152963e-4).epsilon(1e-8));

  // Pure gas has nothing to diffuse against.
  std::array<double, kNumGases> pure{};
  pure[kN2] = 1.0;
  CHECK(gas_diffusion_coefficients(db(), 1000.0, 1.0e5, pure)[kN2] == 0.0);
}

TEST_CASE("bed velocity matches the reference throughput calibration") {
  // 4 rpm, psi = 0.02 rad, theta = 1.793, r = 2 m, flat bed, calibrated
  // repose intercept. [DERIVED] 0.04798 m/s.
  const double omega = 4.0 * kRpmToRadPerSec;
  const double xi = repose_angle(omega, 0.0, 0.30918);
  const double lc = 2.0 * 2.0 * std::sin(0.5 * 1.793);
  CHECK(solid_velocity(omega, 0.02, 0.0, lc, 2.0, xi) ==
        doctest::Approx(0.04798006).epsilon(1e-6));
  // Empty bed does not move; steeper slope moves faster.
  CHECK(solid_velocity(omega, 0.02, 0.0, 0.0, 2.0, xi) == 0.0);
  CHECK(solid_velocity(omega, 0.02, 0.05, lc, 2.0, xi) >
        solid_velocity(omega, 0.02, 0.0, lc, 2.0, xi));
  CHECK_THROWS(repose_angle(omega, 0.0, -0.1));
}

TEST_CASE("gas velocity inverts the Blasius friction law in turbulent flow") {
  const double d_h = 3.0, mu = 4e-5, rho = 0.25;
  const double v = gas_velocity(0.5, d_h, mu, rho);
  CHECK(v == doctest::Approx(32.5834335).epsilon(1e-4)); // [DERIVED]
  // Plug back: f/D_H * rho v^2 / 2 must reproduce the gradient.
  const double re = rho * v * d_h / mu;
  const double f = 0.316 * std::pow(re, -0.25);
  CHECK(f / d_h * rho * v * v / 2.0 == doctest::Approx(0.5).epsilon(1e-6));
  // Antisymmetric in the gradient; zero at zero.
  CHECK(gas_velocity(-0.5, d_h, mu, rho) == doctest::Approx(-v).epsilon(1e-4));
  CHECK(gas_velocity(0.0, d_h, mu, rho) == 0.0);
  // Deep laminar limit: Hagen-Poiseuille. [DERIVED]
  CHECK(gas_velocity(1e-7, d_h, mu, rho) ==
        doctest::Approx(1e-7 * d_h * d_h / (32.0 * mu) * std::tanh(30e-7)).epsilon(1e-6));
  // Monotone through the transition band.
  double prev = 0.0;
  for (double dp = 1e-8; dp < 1.0; dp *= 1.5) {
    const double vi = gas_velocity(dp, d_h, mu, rho);
    CHECK(vi >= prev);
    prev = vi;
  }
}

TEST_CASE("Tscheng coefficients at the documented operating point") {
  TschengInput in;
  in.gas_conductivity = 0.07;
  in.effective_diameter = 3.0;
  in.fill_fraction = 0.13;
  // Choose rho, mu, v, omega to land exactly on Re_D = 1e4, Re_om = 1e3.
  in.gas_viscosity = 4e-5;
  in.gas_density = 0.25;
  in.gas_speed = 1e4 * in.gas_viscosity / (in.gas_density * in.effective_diameter);
  in.omega = 1e3 * in.gas_viscosity / (in.gas_density * in.effective_diameter *
                                       in.effective_diameter);
  in.radius = 2.0;
  in.theta = 1.793;
  in.solid_conductivity = 2.0;
  in.solid_heat_capacity_vol = 2.2e6;
  auto c = tscheng_coefficients(in);
  CHECK(c.re_d == doctest::Approx(1e4));
  CHECK(c.re_omega == doctest::Approx(1e3));
  CHECK(c.gas_solid == doctest::Approx(6.09368406).epsilon(1e-6));  // [DERIVED]
  CHECK(c.gas_wall == doctest::Approx(0.95388827).epsilon(1e-6));   // [DERIVED]
  // beta_ws at 4 rpm. [DERIVED]
  in.omega = 4.0 * kRpmToRadPerSec;
  CHECK(tscheng_coefficients(in).wall_solid ==
        doctest::Approx(584.270787).epsilon(1e-6));

  // Degenerate inputs zero the affected coefficients instead of NaN.
  TschengInput empty;
  auto z = tscheng_coefficients(empty);
  CHECK(z.gas_solid == 0.0);
  CHECK(z.gas_wall == 0.0);
  CHECK(z.wall_solid == 0.0);
}

TEST_CASE("convection heat flows down the temperature differences") {
  TschengCoefficients beta;
  beta.gas_solid = 6.0;
  beta.gas_wall = 1.0;
  beta.wall_solid = 500.0;
  auto q = convection_heat(1100.0, 1500.0, 1200.0, 10.0, 30.0, 12.0, beta);
  CHECK(q.gas_solid == doctest::Approx(10.0 * 6.0 * 400.0));
  CHECK(q.gas_wall == doctest::Approx(30.0 * 1.0 * 300.0));
  CHECK(q.wall_solid == doctest::Approx(12.0 * 500.0 * 100.0));
}

TEST_CASE("WSGG emissivity is bounded and behaves like a grey-gas sum") {
  const auto& w = WsggModel::builtin();
  // [DERIVED] spot values frozen from an independent evaluation of the
  // embedded table.
  CHECK(w.emissivity(1900.0, 1.0, 0.6) == doctest::Approx(0.22430461).epsilon(1e-7));
  CHECK(w.emissivity(1200.0, 1.0, 0.6) == doctest::Approx(0.25081150).epsilon(1e-7));
  CHECK(w.emissivity(1200.0, 1.0, 0.0) == 0.0);
  // Monotone in optical depth; saturates below 1.
  double prev = 0.0;
  for (double pl = 0.01; pl < 100.0; pl *= 2.0) {
    const double e = w.emissivity(1500.0, 1.0, pl);
    CHECK(e >= prev);
    CHECK(e < 1.0);
    prev = e;
  }
  // Ratio clamps to the fit window instead of extrapolating.
  CHECK(w.emissivity(1500.0, 100.0, 0.6) ==
        doctest::Approx(w.emissivity(1500.0, w.ratio_max(), 0.6)));
  CHECK(w.emissivity(1500.0, 0.0, 0.6) ==
        doctest::Approx(w.emissivity(1500.0, w.ratio_min(), 0.6)));
  // Bounded over the whole fit window.
  for (double t = 500.0; t <= 2500.0; t += 100.0) {
    for (double m = 0.1; m <= 4.0; m += 0.3) {
      const double e = w.emissivity(t, m, 1e6);
      CHECK(e > 0.0);
      CHECK(e < 1.0);
    }
  }
}

TEST_CASE("gas absorptivity scales emissivity at the surface temperature") {
  const auto& w = WsggModel::builtin();
  // [DERIVED] eps(1300 K) * Pm Sm * sqrt(1300/1900) from the script.
  CHECK(gas_absorptivity(w, 1300.0, 1900.0, 1.0, 1.0, 0.6) ==
        doctest::Approx(0.12249552).epsilon(1e-6));
  // Clamped to 1 for huge optical depth products.
  CHECK(gas_absorptivity(w, 1300.0, 1300.0, 1.0, 10.0, 4.0) == 1.0);
}

TEST_CASE("radiation exchange vanishes at equilibrium and heats the cold sink") {
  RadiationInput in;
  in.t_s = in.t_g = in.t_w = 1400.0;
  in.area_gs = 10.0;
  in.area_gw = 30.0;
  in.area_ws = 12.0;
  in.emissivity_gas = 0.2;
  in.absorptivity_gas_solid = 0.2;
  in.absorptivity_gas_wall = 0.2;
  in.chord = 3.12;
  in.radius = 2.0;
  in.inclination = 0.02;
  auto q0 = radiation_heat(in);
  CHECK(q0.gas_solid == doctest::Approx(0.0));
  CHECK(q0.gas_wall == doctest::Approx(0.0));
  CHECK(q0.wall_solid == doctest::Approx(0.0));

  in.t_s = 1100.0; // cold bed receives from gas and wall
  auto q = radiation_heat(in);
  CHECK(q.gas_solid > 0.0);
  CHECK(q.wall_solid > 0.0);
  CHECK(q.gas_wall == doctest::Approx(0.0));

  // Hand value for the gas->solid term. [TRIVIAL]
  const double expect = kStefanBoltzmann * 10.0 * (1.0 + 0.9) / 2.0 *
                        (0.2 * std::pow(1400.0, 4) - 0.2 * std::pow(1100.0, 4));
  CHECK(q.gas_solid == doctest::Approx(expect));
}
