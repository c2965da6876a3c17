#include "kiln/output.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <stdexcept>

namespace kiln {

namespace {

constexpr std::array<const char*, kNumSolids> kSolidNames = {
    "CaCO3", "CaO", "SiO2", "Al2O3", "Fe2O3", "C2S", "C3S", "C3A", "C4AF"};
constexpr std::array<const char*, kNumGases> kGasNames = {
    "CO2", "N2", "O2", "Ar", "CO", "H2", "H2O", "C_sus"};

void require_nonempty(const std::vector<Snapshot>& trajectory) {
  if (trajectory.empty()) throw std::invalid_argument("empty trajectory");
}

template <typename Fn>
void to_file(const std::string& path, Fn&& fn) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  fn(out);
  if (!out.good()) throw std::runtime_error("write failed: " + path);
}

} // namespace

FeedKpis feed_kpis(const KilnModel& model) {
  const auto& sp = model.species();
  std::array<double, kNumSolids> mass{};
  double total = 0.0;
  for (int i = 0; i < kNumSolids; ++i) {
    mass[i] = model.boundary().solid_inlet_conc[i] * sp.solid(i).molar_mass;
    total += mass[i];
  }
  if (!(total > 0.0)) throw std::invalid_argument("feed carries no solids");
  const double c = mass[kCaO] / total;
  const double s = mass[kSiO2] / total;
  const double a = mass[kAl2O3] / total;
  const double f = mass[kFe2O3] / total;
  FeedKpis k;
  k.lsf = 100.0 * c / (2.8 * s + 1.2 * a + 0.65 * f);
  k.ms = s / (a + f);
  k.ma = f > 0.0 ? a / f : 0.0;
  return k;
}

std::array<double, kNumSolids> solid_mass_percent(const KilnModel& model,
                                                  std::span<const double> state,
                                                  int segment) {
  using namespace layout;
  const auto& sp = model.species();
  std::array<double, kNumSolids> mass{};
  double total = 0.0;
  for (int i = 0; i < kNumSolids; ++i) {
    mass[i] = std::max(state[index(segment, kSolid + i)], 0.0) * sp.solid(i).molar_mass;
    total += mass[i];
  }
  if (total > 0.0) {
    for (auto& m : mass) m *= 100.0 / total;
  }
  return mass;
}

std::array<double, kNumGases> gas_mole_percent(std::span<const double> state, int segment) {
  using namespace layout;
  std::array<double, kNumGases> frac{};
  double total = 0.0;
  for (int i = 0; i < kNumGases; ++i) {
    frac[i] = std::max(state[index(segment, kGas + i)], 0.0);
    total += frac[i];
  }
  if (total > 0.0) {
    for (auto& f : frac) f *= 100.0 / total;
  }
  return frac;
}

double pressure_drop(const KilnModel& model, std::span<const double> state) {
  using namespace layout;
  const int n = model.params().dims.n_segments;
  return state[index(n - 1, kP)] - state[index(0, kP)];
}

void write_profiles_csv(const KilnModel& model, const std::vector<Snapshot>& trajectory,
                        std::ostream& out) {
  using namespace layout;
  require_nonempty(trajectory);
  out << "time_s,segment,z_m";
  for (const char* n : kSolidNames) out << ",Cs_" << n << "_mol_per_m3";
  for (const char* n : kGasNames) out << ",Cg_" << n << "_mol_per_m3";
  out << ",T_s_K,T_g_K,T_w_K,P_Pa,theta_rad,v_s_m_per_s,v_g_m_per_s\n";
  const int n = model.params().dims.n_segments;
  const double dz = model.params().dims.dz();
  out << std::setprecision(10);
  for (const auto& snap : trajectory) {
    const auto vs = model.solid_velocities(snap.state);
    const auto vg = model.gas_velocities(snap.state);
    for (int k = 0; k < n; ++k) {
      out << snap.time << "," << k << "," << (k + 0.5) * dz;
      for (int i = 0; i < kNumSolids; ++i) out << "," << snap.state[index(k, kSolid + i)];
      for (int i = 0; i < kNumGases; ++i) out << "," << snap.state[index(k, kGas + i)];
      out << "," << snap.state[index(k, kTs)] << "," << snap.state[index(k, kTg)] << ","
          << snap.state[index(k, kTw)] << "," << snap.state[index(k, kP)] << ","
          << snap.state[index(k, kTheta)] << "," << vs[k] << "," << vg[k] << "\n";
    }
  }
}

void write_timeseries_csv(const KilnModel& model, const std::vector<Snapshot>& trajectory,
                          std::ostream& out) {
  using namespace layout;
  require_nonempty(trajectory);
  out << "time_s";
  for (const char* n : kSolidNames) out << ",clinker_" << n << "_mass_pct";
  for (const char* n : kGasNames) out << ",offgas_" << n << "_mol_pct";
  out << ",pressure_drop_Pa,v_s_exit_m_per_s,v_g_exit_m_per_s\n";
  const int n = model.params().dims.n_segments;
  out << std::setprecision(10);
  for (const auto& snap : trajectory) {
    // Solids leave at z = L (last segment), gas at z = 0 (first segment).
    const auto clinker = solid_mass_percent(model, snap.state, n - 1);
    const auto offgas = gas_mole_percent(snap.state, 0);
    const auto vs = model.solid_velocities(snap.state);
    const auto vg = model.gas_velocities(snap.state);
    out << snap.time;
    for (double v : clinker) out << "," << v;
    for (double v : offgas) out << "," << v;
    out << "," << pressure_drop(model, snap.state) << "," << vs[n - 1] << "," << vg[0]
        << "\n";
  }
}

void write_summary(const KilnModel& model, const SimulationResult& result,
                   std::ostream& out) {
  using namespace layout;
  require_nonempty(result.trajectory);
  const auto& snap = result.trajectory.back();
  const int n = model.params().dims.n_segments;
  const auto kpi = feed_kpis(model);
  const auto clinker = solid_mass_percent(model, snap.state, n - 1);
  const auto offgas = gas_mole_percent(snap.state, 0);
  const auto vs = model.solid_velocities(snap.state);
  const auto vg = model.gas_velocities(snap.state);
  out << std::setprecision(10);
  out << "time_s = " << snap.time << "\n";
  out << "steady = " << (result.steady ? "true" : "false") << "\n";
  out << "steps = " << result.steps << "\n";
  out << "rhs_norm_per_s = " << result.final_rhs_norm << "\n";
  out << "feed.LSF = " << kpi.lsf << "\n";
  out << "feed.MS = " << kpi.ms << "\n";
  out << "feed.MA = " << kpi.ma << "\n";
  for (int i = 0; i < kNumSolids; ++i) {
    out << "clinker." << kSolidNames[i] << "_mass_pct = " << clinker[i] << "\n";
  }
  for (int i = 0; i < kNumGases; ++i) {
    out << "offgas." << kGasNames[i] << "_mol_pct = " << offgas[i] << "\n";
  }
  out << "pressure_drop_Pa = " << pressure_drop(model, snap.state) << "\n";
  out << "v_s_exit_m_per_s = " << vs[n - 1] << "\n";
  out << "v_g_exit_m_per_s = " << vg[0] << "\n";
  out << "max_T_s_K = ";
  double mts = 0.0, mtg = 0.0;
  for (int k = 0; k < n; ++k) {
    mts = std::max(mts, snap.state[index(k, kTs)]);
    mtg = std::max(mtg, snap.state[index(k, kTg)]);
  }
  out << mts << "\n";
  out << "max_T_g_K = " << mtg << "\n";
}

void write_profiles_csv(const KilnModel& model, const std::vector<Snapshot>& trajectory,
                        const std::string& path) {
  require_nonempty(trajectory);
  to_file(path, [&](std::ostream& out) { write_profiles_csv(model, trajectory, out); });
}

void write_timeseries_csv(const KilnModel& model, const std::vector<Snapshot>& trajectory,
                          const std::string& path) {
  require_nonempty(trajectory);
  to_file(path, [&](std::ostream& out) { write_timeseries_csv(model, trajectory, out); });
}

void write_summary(const KilnModel& model, const SimulationResult& result,
                   const std::string& path) {
  require_nonempty(result.trajectory);
  to_file(path, [&](std::ostream& out) { write_summary(model, result, out); });
}

} // namespace kiln
