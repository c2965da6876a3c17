#include "kiln/species.hpp"

namespace kiln {

// Default property database. cp: c_m = c0 + c1*T + c2*T^2 with c1 in
// 1e-3 J/(mol K^2) and c2 in 1e-5 J/(mol K^3); molar mass in g/mol,
// solid density in g/cm^3, formation enthalpy in kJ/mol, gas
// conductivity anchors in mW/(m K), viscosity anchors in uPa s,
// diffusion volumes in cm^3.
const char* SpeciesSet::builtin_json() {
  return R"JSON({
  "solids": [
    {"name": "CaCO3",  "molar_mass_g_mol": 100.09, "density_g_cm3": 2.71, "enthalpy_formation_kJ_mol": -1207.6,
     "conductivity_W_mK": 2.248, "cp": {"c0": 23.12,   "c1_e3": 263.4,    "c2_e5": -19.86,  "t_min": 300, "t_max": 600}},
    {"name": "CaO",    "molar_mass_g_mol": 56.08,  "density_g_cm3": 3.34, "enthalpy_formation_kJ_mol": -634.9,
     "conductivity_W_mK": 30.1,  "cp": {"c0": 71.69,   "c1_e3": -3.08,    "c2_e5": 0.22,    "t_min": 200, "t_max": 1800}},
    {"name": "SiO2",   "molar_mass_g_mol": 60.09,  "density_g_cm3": 2.65, "enthalpy_formation_kJ_mol": -910.7,
     "conductivity_W_mK": 1.4,   "cp": {"c0": 58.91,   "c1_e3": 5.02,     "c2_e5": 0.0,     "t_min": 844, "t_max": 1800}},
    {"name": "Al2O3",  "molar_mass_g_mol": 101.96, "density_g_cm3": 3.99, "enthalpy_formation_kJ_mol": -1675.7,
     "conductivity_W_mK": 36.0,  "cp": {"c0": 233.004, "c1_e3": -19.5913, "c2_e5": 0.94441, "t_min": 200, "t_max": 1800}},
    {"name": "Fe2O3",  "molar_mass_g_mol": 159.69, "density_g_cm3": 5.25, "enthalpy_formation_kJ_mol": -824.2,
     "conductivity_W_mK": 0.335, "cp": {"c0": 103.9,   "c1_e3": 0.0,      "c2_e5": 0.0,     "t_min": 298, "t_max": 1800}},
    {"name": "C2S",    "molar_mass_g_mol": 172.24, "density_g_cm3": 3.31, "enthalpy_formation_kJ_mol": -2053.1,
     "conductivity_W_mK": 3.45,  "cp": {"c0": 199.6,   "c1_e3": 0.0,      "c2_e5": 0.0,     "t_min": 1650, "t_max": 1800}},
    {"name": "C3S",    "molar_mass_g_mol": 228.32, "density_g_cm3": 3.13, "enthalpy_formation_kJ_mol": -2704.1,
     "conductivity_W_mK": 3.35,  "cp": {"c0": 333.92,  "c1_e3": -2.33,    "c2_e5": 0.0,     "t_min": 200, "t_max": 1800}},
    {"name": "C3A",    "molar_mass_g_mol": 270.19, "density_g_cm3": 3.04, "enthalpy_formation_kJ_mol": -3602.5,
     "conductivity_W_mK": 3.74,  "cp": {"c0": 260.58,  "c1_e3": 4.79,     "c2_e5": 0.0,     "t_min": 298, "t_max": 1800}},
    {"name": "C4AF",   "molar_mass_g_mol": 485.97, "density_g_cm3": 3.8,  "enthalpy_formation_kJ_mol": -4998.6,
     "conductivity_W_mK": 3.17,  "cp": {"c0": 374.43,  "c1_e3": 36.4,     "c2_e5": 0.0,     "t_min": 298, "t_max": 1863}}
  ],
  "gases": [
    {"name": "CO2",   "molar_mass_g_mol": 44.01,  "enthalpy_formation_kJ_mol": -395.5, "diffusion_volume_cm3": 16.3,
     "conductivity_anchors_mW_mK": [[300, 16.77], [1000, 70.78]], "viscosity_anchors_uPa_s": [[300, 15.0],   [1000, 41.18]],
     "cp": {"c0": 25.98,   "c1_e3": 43.61,   "c2_e5": -1.494,    "t_min": 298, "t_max": 1500}},
    {"name": "N2",    "molar_mass_g_mol": 28.014, "enthalpy_formation_kJ_mol": 0.0,    "diffusion_volume_cm3": 18.5,
     "conductivity_anchors_mW_mK": [[300, 25.97], [1000, 65.36]], "viscosity_anchors_uPa_s": [[300, 17.89],  [1000, 41.54]],
     "cp": {"c0": 27.31,   "c1_e3": 5.19,    "c2_e5": -1.553e-4, "t_min": 298, "t_max": 1500}},
    {"name": "O2",    "molar_mass_g_mol": 31.998, "enthalpy_formation_kJ_mol": 0.0,    "diffusion_volume_cm3": 16.3,
     "conductivity_anchors_mW_mK": [[300, 26.49], [1000, 71.55]], "viscosity_anchors_uPa_s": [[300, 20.65],  [1000, 49.12]],
     "cp": {"c0": 25.82,   "c1_e3": 12.63,   "c2_e5": -0.3573,   "t_min": 298, "t_max": 1100}},
    {"name": "Ar",    "molar_mass_g_mol": 39.948, "enthalpy_formation_kJ_mol": 0.0,    "diffusion_volume_cm3": 16.2,
     "conductivity_anchors_mW_mK": [[300, 17.84], [1000, 43.58]], "viscosity_anchors_uPa_s": [[300, 22.74],  [1000, 55.69]],
     "cp": {"c0": 20.79,   "c1_e3": 0.0,     "c2_e5": 0.0,       "t_min": 298, "t_max": 1500}},
    {"name": "CO",    "molar_mass_g_mol": 28.010, "enthalpy_formation_kJ_mol": -110.5, "diffusion_volume_cm3": 18.0,
     "conductivity_anchors_mW_mK": [[300, 25.0],  [600, 43.2]],   "viscosity_anchors_uPa_s": [[300, 17.8],   [1000, 29.1]],
     "cp": {"c0": 26.87,   "c1_e3": 6.939,   "c2_e5": -0.08237,  "t_min": 298, "t_max": 1500}},
    {"name": "H2",    "molar_mass_g_mol": 2.016,  "enthalpy_formation_kJ_mol": 0.0,    "diffusion_volume_cm3": 6.12,
     "conductivity_anchors_mW_mK": [[300, 193.1], [1000, 459.7]], "viscosity_anchors_uPa_s": [[300, 8.938],  [1000, 20.73]],
     "cp": {"c0": 28.95,   "c1_e3": -0.5839, "c2_e5": 0.1888,    "t_min": 298, "t_max": 1500}},
    {"name": "H2O",   "molar_mass_g_mol": 18.015, "enthalpy_formation_kJ_mol": -241.8, "diffusion_volume_cm3": 13.1,
     "conductivity_anchors_mW_mK": [[300, 609.50],[1000, 95.877]],"viscosity_anchors_uPa_s": [[300, 853.74], [1000, 37.615]],
     "cp": {"c0": 30.89,   "c1_e3": 7.858,   "c2_e5": 0.2494,    "t_min": 298, "t_max": 1300}},
    {"name": "C_sus", "molar_mass_g_mol": 12.011, "enthalpy_formation_kJ_mol": 0.0,    "diffusion_volume_cm3": 15.9,
     "cp": {"c0": -0.4493, "c1_e3": 35.53,   "c2_e5": -1.308,    "t_min": 298, "t_max": 1500}}
  ]
})JSON";
}

} // namespace kiln
