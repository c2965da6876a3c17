#pragma once

namespace kiln {

// Physical constants (SI).
inline constexpr double kGasConstant = 8.314462618;        // J/(mol K)
inline constexpr double kStefanBoltzmann = 5.670374419e-8; // W/(m^2 K^4)

// Standard reference state for formation enthalpies.
inline constexpr double kReferenceTemperature = 298.15; // K
inline constexpr double kReferencePressure = 1.0e5;     // Pa (1 bar)

inline constexpr double kPi = 3.14159265358979323846;

// Unit conversions used at configuration boundaries.
inline constexpr double kBar = 1.0e5;            // Pa
inline constexpr double kCelsiusOffset = 273.15; // K
inline constexpr double kRpmToRadPerSec = 2.0 * kPi / 60.0;

inline constexpr double celsius_to_kelvin(double t_c) { return t_c + kCelsiusOffset; }
inline constexpr double kelvin_to_celsius(double t_k) { return t_k - kCelsiusOffset; }

} // namespace kiln
