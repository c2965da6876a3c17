#include "kiln/kinetics.hpp"

namespace kiln {

// Default clinker + fuel network. Rate constants in the unit named by
// "unit" (converted to mol/(m^3 s) on evaluation), activation energies in
// kJ/mol, concentration orders over mol/L, pressure orders over bar.
// "reference" names the species whose mass a kg-based constant counts.
// Default tuning factors match the calibrated operating point.
const char* ReactionSet::builtin_json() {
  return R"JSON({
  "reactions": [
    {"id": "r1", "phase": "solid", "unit": "kg_m3_s", "reference": "CaCO3",
     "k_r": 1.0e8, "n": 0.0, "EA_kJ_mol": 175.7, "tuning": 5.0,
     "conc_orders": {"CaCO3": 1},
     "stoichiometry": {"CaCO3": -1, "CaO": 1, "CO2": 1}},
    {"id": "r2", "phase": "solid", "unit": "kg_m3_s", "reference": "CaO",
     "k_r": 1.0e7, "n": 0.0, "EA_kJ_mol": 240.0, "tuning": 200.0,
     "conc_orders": {"CaO": 2, "SiO2": 1},
     "stoichiometry": {"CaO": -2, "SiO2": -1, "C2S": 1}},
    {"id": "r3", "phase": "solid", "unit": "kg_m3_s", "reference": "CaO",
     "k_r": 1.0e9, "n": 0.0, "EA_kJ_mol": 420.0, "tuning": 60.0,
     "conc_orders": {"CaO": 1, "C2S": 1},
     "stoichiometry": {"CaO": -1, "C2S": -1, "C3S": 1}},
    {"id": "r4", "phase": "solid", "unit": "kg_m3_s", "reference": "CaO",
     "k_r": 1.0e8, "n": 0.0, "EA_kJ_mol": 310.0, "tuning": 5.0e3,
     "conc_orders": {"CaO": 3, "Al2O3": 1},
     "stoichiometry": {"CaO": -3, "Al2O3": -1, "C3A": 1}},
    {"id": "r5", "phase": "solid", "unit": "kg_m3_s", "reference": "CaO",
     "k_r": 1.0e8, "n": 0.0, "EA_kJ_mol": 330.0, "tuning": 5.0e6,
     "conc_orders": {"CaO": 4, "Al2O3": 1, "Fe2O3": 1},
     "stoichiometry": {"CaO": -4, "Al2O3": -1, "Fe2O3": -1, "C4AF": 1}},
    {"id": "r6", "phase": "gas", "unit": "kg_m3_s", "reference": "CO",
     "k_r": 7.0e4, "n": 0.0, "EA_kJ_mol": 66.51, "tuning": 3.0e4,
     "conc_orders": {"CO": 1, "O2": 1},
     "stoichiometry": {"CO": -2, "O2": -1, "CO2": 2}},
    {"id": "r7", "phase": "gas", "unit": "mol_m3_s",
     "k_r": 2.75e6, "n": 0.0, "EA_kJ_mol": 83.68, "tuning": 1.0,
     "conc_orders": {"CO": 1, "H2O": 1},
     "stoichiometry": {"CO": -1, "H2O": -1, "CO2": 1, "H2": 1}},
    {"id": "r8", "phase": "gas", "unit": "mol_m3_s",
     "k_r": 1.37e6, "n": 0.51, "EA_kJ_mol": 295.48, "tuning": 1.0,
     "conc_orders": {"H2": 1, "O2": 1},
     "stoichiometry": {"H2": -2, "O2": -1, "H2O": 2}},
    {"id": "r9", "phase": "gas", "unit": "mol_m3_s",
     "k_r": 8.82e13, "n": 0.0, "EA_kJ_mol": 239.0, "tuning": 1.0,
     "conc_orders": {"C_sus": 1, "O2": 0.5},
     "stoichiometry": {"C_sus": -2, "O2": -1, "CO": 2}},
    {"id": "r10", "phase": "gas", "unit": "mol_m3_s",
     "k_r": 2.62e8, "n": 0.0, "EA_kJ_mol": 237.0, "tuning": 1.0,
     "conc_orders": {"C_sus": 1},
     "pressure_orders": {"H2O": 0.57},
     "stoichiometry": {"C_sus": -1, "H2O": -1, "CO": 1, "H2": 1}},
    {"id": "r11", "phase": "gas", "unit": "mol_m3_s",
     "k_r": 3.1e6, "n": 0.0, "EA_kJ_mol": 215.0, "tuning": 1.0,
     "conc_orders": {"C_sus": 1},
     "pressure_orders": {"CO2": 0.38},
     "stoichiometry": {"C_sus": -1, "CO2": -1, "CO": 2}}
  ]
})JSON";
}

} // namespace kiln
