#pragma once

#include <span>
#include <vector>

#include "kiln/constants.hpp"

namespace kiln {

struct KilnDimensions {
  double length = 0.0;       // m
  double inner_radius = 0.0; // m
  double inclination = 0.0;  // rad
  int n_segments = 0;

  double dz() const { return length / n_segments; }
  double cross_section() const { return kPi * inner_radius * inner_radius; }
  double segment_volume() const { return cross_section() * dz(); }

  void validate() const;
};

/// Derived bed geometry per segment and per interface.
struct GeometryProfile {
  // Per segment.
  std::vector<double> theta;              // fill angle, rad
  std::vector<double> area_solid;         // A_s, m^2
  std::vector<double> area_gas;           // A_g, m^2
  std::vector<double> chord;              // L_c, m
  std::vector<double> bed_height;         // h, m
  std::vector<double> slope_angle;        // phi, rad
  std::vector<double> area_gas_solid;     // A_gs, m^2
  std::vector<double> area_wall_solid;    // A_ws, m^2
  std::vector<double> area_gas_wall;      // A_gw, m^2
  std::vector<double> hydraulic_diameter; // D_H, m
  std::vector<double> effective_diameter; // D_e, m
  std::vector<double> fill_fraction;      // eta
  std::vector<double> mean_beam_length;   // S_m, m
  // Per interface (n_segments + 1 faces).
  std::vector<double> face_area_solid;
  std::vector<double> face_bed_height;
  int clamped_faces = 0; // negative reconstructed faces clamped to zero
};

namespace geometry {

/// A_s(theta) = (r^2/2)(theta - sin theta).
double segment_area_from_angle(double theta, double radius);

/// Unique inverse of segment_area_from_angle on [0, 2*pi]; safeguarded
/// Newton with bisection fallback, residual below 1e-12 * r^2.
double fill_angle_from_area(double area_solid, double radius);

double chord_from_angle(double theta, double radius);      // L_c = 2 r sin(theta/2)
double bed_height_from_angle(double theta, double radius); // h = r (1 - cos(theta/2))

/// phi = atan(-dh/dz), central differences at interior segment centers,
/// one-sided at the two ends.
std::vector<double> slope_angles(std::span<const double> bed_height, double dz);

/// Interface cross-sections from per-segment solid volumes via the integral
/// relation V_k = (A_{k-1/2} + A_{k+1/2})/2 * dz, marching from a pinned
/// inlet face area. Negative reconstructed values are clamped to zero;
/// *clamped (optional) receives the clamp count.
std::vector<double> interface_cross_sections(std::span<const double> solid_volume, double dz,
                                             double inlet_face_area, int* clamped = nullptr);

double hydraulic_diameter(double theta, double radius);
double effective_diameter(double theta, double radius);
double fill_fraction(double theta); // eta = (theta - sin theta) / (2 pi)

/// Full derived geometry from the per-segment fill angles. The inlet solid
/// face area pins the interface reconstruction.
GeometryProfile build_profile(const KilnDimensions& dims, std::span<const double> theta,
                              double inlet_face_area);

} // namespace geometry
} // namespace kiln
