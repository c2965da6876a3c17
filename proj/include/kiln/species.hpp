#pragma once

#include <array>
#include <string>
#include <vector>

namespace kiln {

enum class Phase { Solid, Gas };

/// Heat-capacity polynomial c_m(T) = c0 + c1*T + c2*T^2 in J/(mol K),
/// with the stated validity range in K. Evaluation outside the range is
/// permitted (no clamping); callers may check in_range().
struct CpPolynomial {
  double c0 = 0.0; // J/(mol K)
  double c1 = 0.0; // J/(mol K^2)
  double c2 = 0.0; // J/(mol K^3)
  double t_min = 0.0;
  double t_max = 0.0;

  double evaluate(double t) const { return c0 + t * (c1 + t * c2); }

  /// Closed-form integral of c_m from ta to tb (J/mol).
  double integral(double ta, double tb) const {
    auto anti = [this](double t) { return t * (c0 + t * (c1 / 2.0 + t * c2 / 3.0)); };
    return anti(tb) - anti(ta);
  }

  bool in_range(double t) const { return t >= t_min && t <= t_max; }
};

/// Two (T, value) anchor points, used to calibrate the Sutherland-form
/// temperature fits for gas viscosity and conductivity.
struct AnchorPair {
  double t1 = 0.0;
  double v1 = 0.0;
  double t2 = 0.0;
  double v2 = 0.0;
  bool valid = false;
};

struct SpeciesProperties {
  std::string name;
  Phase phase = Phase::Solid;
  double molar_mass = 0.0;         // kg/mol
  double density = 0.0;            // kg/m^3, untuned (solids only)
  double enthalpy_formation = 0.0; // J/mol
  CpPolynomial cp;
  double conductivity = 0.0;       // W/(m K) (solids only)
  AnchorPair conductivity_anchors; // W/(m K) (gases)
  AnchorPair viscosity_anchors;    // Pa s (gases)
  double diffusion_volume = 0.0;   // cm^3 (gases)
};

inline constexpr int kNumSolids = 9;
inline constexpr int kNumGases = 8;
inline constexpr int kNumSpecies = kNumSolids + kNumGases;
inline constexpr int kNumElements = 9;

// Fixed species ordering. Solids first, then gases.
enum SolidIndex : int {
  kCaCO3 = 0, kCaO, kSiO2, kAl2O3, kFe2O3, kC2S, kC3S, kC3A, kC4AF
};
enum GasIndex : int {
  kCO2 = 0, kN2, kO2, kAr, kCO, kH2, kH2O, kCsus
};
enum ElementIndex : int {
  kElCa = 0, kElSi, kElAl, kElFe, kElC, kElO, kElH, kElN, kElAr
};

inline constexpr std::array<const char*, kNumElements> kElementNames = {
    "Ca", "Si", "Al", "Fe", "C", "O", "H", "N", "Ar"};

/// Immutable property database over the fixed 9-solid / 8-gas ordering.
class SpeciesSet {
 public:
  /// Built-in database (embedded data file).
  static const SpeciesSet& builtin();

  /// Load from a user-supplied file with the same schema as the embedded one.
  static SpeciesSet load(const std::string& path);

  /// Parse from JSON text.
  static SpeciesSet parse(const std::string& json_text);

  const SpeciesProperties& solid(int i) const { return solids_.at(i); }
  const SpeciesProperties& gas(int i) const { return gases_.at(i); }

  /// Global species index: solids 0..8, gases 9..16.
  const SpeciesProperties& species(int i) const {
    return i < kNumSolids ? solids_.at(i) : gases_.at(i - kNumSolids);
  }

  int solid_index(const std::string& name) const;
  int gas_index(const std::string& name) const;

  /// Elemental composition counts, rows = elements, columns = species
  /// (solids then gases).
  static const std::array<std::array<int, kNumSpecies>, kNumElements>& element_matrix();

  /// JSON text of the embedded default database.
  static const char* builtin_json();

 private:
  std::vector<SpeciesProperties> solids_;
  std::vector<SpeciesProperties> gases_;
};

} // namespace kiln
