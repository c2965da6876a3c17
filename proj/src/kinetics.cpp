#include "kiln/kinetics.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "kiln/constants.hpp"

namespace kiln {
namespace {

int global_index(const SpeciesSet& species, const std::string& name) {
  for (int i = 0; i < kNumSpecies; ++i) {
    if (species.species(i).name == name) return i;
  }
  throw std::invalid_argument("unknown species in reaction data: " + name);
}

// Smoothed fractional power: equals x^a up to O(eps) but with a bounded
// derivative at x = 0, which keeps the finite-difference Jacobian sane.
double smooth_pow(double x, double a) {
  if (x <= 0.0) return 0.0;
  if (a == 1.0) return x;
  if (a == 2.0) return x * x;
  if (a == 3.0) return x * x * x;
  if (a == 4.0) return x * x * x * x;
  return x * std::pow(x + 1e-12, a - 1.0);
}

} // namespace

void ReactionSpec::validate(const SpeciesSet& species) const {
  if (!(rate_constant > 0.0)) throw std::invalid_argument(id + ": k_r must be positive");
  if (activation_energy < 0.0) throw std::invalid_argument(id + ": EA must be >= 0");
  if (!(tuning >= 0.0)) throw std::invalid_argument(id + ": tuning must be non-negative");
  if (unit == Unit::MassPerVolSec &&
      (reference < 0 || reference >= kNumSpecies)) {
    throw std::invalid_argument(id + ": mass-based unit needs a reference species");
  }
  for (double a : conc_order) {
    if (a < 0.0) throw std::invalid_argument(id + ": negative concentration order");
  }
  // Atoms must balance.
  const auto& e = SpeciesSet::element_matrix();
  for (int el = 0; el < kNumElements; ++el) {
    int sum = 0;
    for (int i = 0; i < kNumSpecies; ++i) sum += e[el][i] * stoichiometry[i];
    if (sum != 0) {
      throw std::invalid_argument(id + ": unbalanced element " +
                                  std::string(kElementNames[el]));
    }
  }
  (void)species;
}

ReactionSet ReactionSet::parse(const std::string& json_text) {
  const auto root = nlohmann::json::parse(json_text);
  const auto& species = SpeciesSet::builtin();
  ReactionSet set;
  for (const auto& rec : root.at("reactions")) {
    ReactionSpec r;
    r.id = rec.at("id").get<std::string>();
    const std::string phase = rec.at("phase").get<std::string>();
    if (phase == "solid") {
      r.rate_phase = Phase::Solid;
    } else if (phase == "gas") {
      r.rate_phase = Phase::Gas;
    } else {
      throw std::invalid_argument(r.id + ": phase must be solid or gas");
    }
    const std::string unit = rec.at("unit").get<std::string>();
    if (unit == "per_hour") {
      r.unit = ReactionSpec::Unit::PerHour;
    } else if (unit == "kg_m3_s") {
      r.unit = ReactionSpec::Unit::MassPerVolSec;
    } else if (unit == "mol_m3_s") {
      r.unit = ReactionSpec::Unit::MolPerVolSec;
    } else {
      throw std::invalid_argument(r.id + ": unknown unit " + unit);
    }
    if (rec.contains("reference")) {
      r.reference = global_index(species, rec.at("reference").get<std::string>());
    }
    r.rate_constant = rec.at("k_r").get<double>();
    r.temperature_exponent = rec.value("n", 0.0);
    r.activation_energy = rec.at("EA_kJ_mol").get<double>() * 1e3;
    r.tuning = rec.value("tuning", 1.0);
    for (const auto& [name, a] : rec.at("conc_orders").items()) {
      r.conc_order[global_index(species, name)] = a.get<double>();
    }
    if (rec.contains("pressure_orders")) {
      for (const auto& [name, b] : rec.at("pressure_orders").items()) {
        r.pressure_order[species.gas_index(name)] = b.get<double>();
      }
    }
    for (const auto& [name, nu] : rec.at("stoichiometry").items()) {
      r.stoichiometry[global_index(species, name)] = nu.get<int>();
    }
    r.validate(species);
    set.reactions_.push_back(std::move(r));
  }
  if (set.reactions_.empty()) throw std::invalid_argument("empty reaction set");
  return set;
}

ReactionSet ReactionSet::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open reaction data: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

const ReactionSet& ReactionSet::builtin() {
  static const ReactionSet set = parse(builtin_json());
  return set;
}

void ReactionSet::set_tuning(int j, double factor) {
  if (!(factor >= 0.0)) throw std::invalid_argument("tuning must be non-negative");
  reactions_.at(j).tuning = factor;
}

int ReactionSet::index(const std::string& id) const {
  for (int j = 0; j < size(); ++j) {
    if (reactions_[j].id == id) return j;
  }
  throw std::invalid_argument("unknown reaction id: " + id);
}

namespace kinetics {

std::vector<double> reaction_rates(const ReactionSet& set, const SpeciesSet& species,
                                   double t_s, double t_g, double p,
                                   std::span<const double> conc_solid,
                                   std::span<const double> conc_gas) {
  double gas_total = 0.0;
  for (double c : conc_gas) gas_total += std::max(c, 0.0);

  std::vector<double> rates(set.size(), 0.0);
  for (int j = 0; j < set.size(); ++j) {
    const ReactionSpec& r = set.reaction(j);
    const double t = r.rate_phase == Phase::Solid ? t_s : t_g;
    double rate = r.rate_constant * std::pow(t, r.temperature_exponent) *
                  std::exp(-r.activation_energy / (kGasConstant * t));
    for (int i = 0; i < kNumSpecies && rate != 0.0; ++i) {
      const double a = r.conc_order[i];
      if (a == 0.0) continue;
      const double c = i < kNumSolids ? conc_solid[i] : conc_gas[i - kNumSolids];
      rate *= smooth_pow(std::max(c, 0.0) * 1e-3, a); // mol/m^3 -> mol/L
    }
    for (int i = 0; i < kNumGases && rate != 0.0; ++i) {
      const double b = r.pressure_order[i];
      if (b == 0.0) continue;
      const double x = gas_total > 0.0 ? std::max(conc_gas[i], 0.0) / gas_total : 0.0;
      rate *= smooth_pow(x * p / kBar, b); // partial pressure in bar
    }
    switch (r.unit) {
      case ReactionSpec::Unit::PerHour:
        rate /= 3600.0;
        break;
      case ReactionSpec::Unit::MassPerVolSec:
        rate /= species.species(r.reference).molar_mass;
        break;
      case ReactionSpec::Unit::MolPerVolSec:
        break;
    }
    rates[j] = rate * r.tuning;
  }
  return rates;
}

void production_rates(const ReactionSet& set, std::span<const double> rates,
                      std::span<double> prod_solid, std::span<double> prod_gas) {
  for (auto& v : prod_solid) v = 0.0;
  for (auto& v : prod_gas) v = 0.0;
  for (int j = 0; j < set.size(); ++j) {
    const auto& nu = set.reaction(j).stoichiometry;
    for (int i = 0; i < kNumSolids; ++i) prod_solid[i] += nu[i] * rates[j];
    for (int i = 0; i < kNumGases; ++i) prod_gas[i] += nu[kNumSolids + i] * rates[j];
  }
}

} // namespace kinetics
} // namespace kiln
