#include "kiln/species.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace kiln {
namespace {

using nlohmann::json;

CpPolynomial parse_cp(const json& j) {
  CpPolynomial cp;
  cp.c0 = j.at("c0").get<double>();
  cp.c1 = j.at("c1_e3").get<double>() * 1e-3;
  cp.c2 = j.at("c2_e5").get<double>() * 1e-5;
  cp.t_min = j.at("t_min").get<double>();
  cp.t_max = j.at("t_max").get<double>();
  return cp;
}

AnchorPair parse_anchors(const json& j, const char* key, double unit) {
  AnchorPair a;
  if (!j.contains(key)) return a;
  const auto& arr = j.at(key);
  a.t1 = arr.at(0).at(0).get<double>();
  a.v1 = arr.at(0).at(1).get<double>() * unit;
  a.t2 = arr.at(1).at(0).get<double>();
  a.v2 = arr.at(1).at(1).get<double>() * unit;
  a.valid = true;
  return a;
}

void check_positive(double v, const std::string& what, const std::string& name) {
  if (!(v > 0.0)) {
    throw std::invalid_argument("species " + name + ": " + what + " must be positive");
  }
}

} // namespace

SpeciesSet SpeciesSet::parse(const std::string& json_text) {
  json root = json::parse(json_text);
  SpeciesSet set;

  for (const auto& j : root.at("solids")) {
    SpeciesProperties s;
    s.name = j.at("name").get<std::string>();
    s.phase = Phase::Solid;
    s.molar_mass = j.at("molar_mass_g_mol").get<double>() * 1e-3;
    s.density = j.at("density_g_cm3").get<double>() * 1e3;
    s.enthalpy_formation = j.at("enthalpy_formation_kJ_mol").get<double>() * 1e3;
    s.conductivity = j.at("conductivity_W_mK").get<double>();
    s.cp = parse_cp(j.at("cp"));
    check_positive(s.molar_mass, "molar mass", s.name);
    check_positive(s.density, "density", s.name);
    set.solids_.push_back(std::move(s));
  }
  for (const auto& j : root.at("gases")) {
    SpeciesProperties g;
    g.name = j.at("name").get<std::string>();
    g.phase = Phase::Gas;
    g.molar_mass = j.at("molar_mass_g_mol").get<double>() * 1e-3;
    g.enthalpy_formation = j.at("enthalpy_formation_kJ_mol").get<double>() * 1e3;
    g.diffusion_volume = j.at("diffusion_volume_cm3").get<double>();
    g.conductivity_anchors = parse_anchors(j, "conductivity_anchors_mW_mK", 1e-3);
    g.viscosity_anchors = parse_anchors(j, "viscosity_anchors_uPa_s", 1e-6);
    g.cp = parse_cp(j.at("cp"));
    check_positive(g.molar_mass, "molar mass", g.name);
    check_positive(g.diffusion_volume, "diffusion volume", g.name);
    set.gases_.push_back(std::move(g));
  }

  if (set.solids_.size() != kNumSolids || set.gases_.size() != kNumGases) {
    throw std::invalid_argument("species database must contain exactly 9 solids and 8 gases");
  }
  // Ordering is part of the contract; the stoichiometry and element
  // matrices are indexed positionally.
  static const char* solid_order[kNumSolids] = {"CaCO3", "CaO", "SiO2", "Al2O3", "Fe2O3",
                                                "C2S", "C3S", "C3A", "C4AF"};
  static const char* gas_order[kNumGases] = {"CO2", "N2", "O2", "Ar", "CO", "H2", "H2O", "C_sus"};
  for (int i = 0; i < kNumSolids; ++i) {
    if (set.solids_[i].name != solid_order[i]) {
      throw std::invalid_argument("solid species out of order: expected " +
                                  std::string(solid_order[i]) + ", got " + set.solids_[i].name);
    }
  }
  for (int i = 0; i < kNumGases; ++i) {
    if (set.gases_[i].name != gas_order[i]) {
      throw std::invalid_argument("gas species out of order: expected " +
                                  std::string(gas_order[i]) + ", got " + set.gases_[i].name);
    }
  }
  return set;
}

SpeciesSet SpeciesSet::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open species database: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

const SpeciesSet& SpeciesSet::builtin() {
  static const SpeciesSet set = parse(builtin_json());
  return set;
}

int SpeciesSet::solid_index(const std::string& name) const {
  for (int i = 0; i < kNumSolids; ++i) {
    if (solids_[i].name == name) return i;
  }
  throw std::invalid_argument("unknown solid species: " + name);
}

int SpeciesSet::gas_index(const std::string& name) const {
  for (int i = 0; i < kNumGases; ++i) {
    if (gases_[i].name == name) return i;
  }
  throw std::invalid_argument("unknown gas species: " + name);
}

const std::array<std::array<int, kNumSpecies>, kNumElements>& SpeciesSet::element_matrix() {
  // Columns: CaCO3 CaO SiO2 Al2O3 Fe2O3 C2S C3S C3A C4AF | CO2 N2 O2 Ar CO H2 H2O C_sus
  static const std::array<std::array<int, kNumSpecies>, kNumElements> e = {{
      /* Ca */ {{1, 1, 0, 0, 0, 2, 3, 3, 4, 0, 0, 0, 0, 0, 0, 0, 0}},
      /* Si */ {{0, 0, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
      /* Al */ {{0, 0, 0, 2, 0, 0, 0, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0}},
      /* Fe */ {{0, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0}},
      /* C  */ {{1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1}},
      /* O  */ {{3, 1, 2, 3, 3, 4, 5, 6, 10, 2, 0, 2, 0, 1, 0, 1, 0}},
      /* H  */ {{0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 0}},
      /* N  */ {{0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0}},
      /* Ar */ {{0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0}},
  }};
  return e;
}

} // namespace kiln
