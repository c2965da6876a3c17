#include "kiln/transport.hpp"

namespace kiln {

// Smooth four-grey-gas surrogate fit, calibrated against published total
// emissivity charts for CO2/H2O combustion mixtures (Hottel-type data):
// eps ~ 0.2 at 1900 K, M ~ 1, pL ~ 0.6 bar m, rising toward ~0.4 at large
// optical depth and low temperature. Weights stay positive and sum below 1
// for T in [500, 2500] K and M in the fit window.
const char* WsggModel::builtin_json() {
  return R"json({
  "t_ref_K": 1200.0,
  "ratio_window": [0.01, 4.0],
  "grey_gases": [
    {
      "K1_per_bar_m": 0.055, "K2_per_bar_m": 0.012,
      "C": [[0.358, -0.100, 0.010],
            [0.020, -0.005, 0.0],
            [-0.002, 0.0005, 0.0]]
    },
    {
      "K1_per_bar_m": 0.88, "K2_per_bar_m": -0.021,
      "C": [[0.250, -0.050, 0.004],
            [0.015, -0.004, 0.0],
            [-0.0015, 0.0004, 0.0]]
    },
    {
      "K1_per_bar_m": 10.0, "K2_per_bar_m": 0.30,
      "C": [[0.120, -0.020, 0.002],
            [0.010, -0.002, 0.0],
            [-0.001, 0.0002, 0.0]]
    },
    {
      "K1_per_bar_m": 135.0, "K2_per_bar_m": 5.0,
      "C": [[0.050, -0.010, 0.001],
            [0.005, -0.001, 0.0],
            [-0.0005, 0.0001, 0.0]]
    }
  ]
})json";
}

} // namespace kiln
