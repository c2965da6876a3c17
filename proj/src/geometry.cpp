#include "kiln/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace kiln {

void KilnDimensions::validate() const {
  if (!(length > 0.0)) throw std::invalid_argument("kiln length must be positive");
  if (!(inner_radius > 0.0)) throw std::invalid_argument("kiln radius must be positive");
  if (n_segments < 2) throw std::invalid_argument("kiln must have at least 2 segments");
  if (!(inclination >= 0.0 && inclination < kPi / 2.0)) {
    throw std::invalid_argument("kiln inclination must lie in [0, pi/2)");
  }
}

namespace geometry {

double segment_area_from_angle(double theta, double radius) {
  return 0.5 * radius * radius * (theta - std::sin(theta));
}

double fill_angle_from_area(double area_solid, double radius) {
  const double full = kPi * radius * radius;
  // Tiny negative areas from upstream Newton iterations are clamped.
  if (area_solid < 0.0) {
    if (area_solid < -1e-9 * radius * radius) {
      throw std::invalid_argument("fill_angle_from_area: negative bed area");
    }
    area_solid = 0.0;
  }
  if (area_solid > full * (1.0 + 1e-12)) {
    throw std::invalid_argument("fill_angle_from_area: bed area exceeds cross-section");
  }
  const double m = 2.0 * area_solid / (radius * radius); // solve theta - sin(theta) = m
  if (m <= 0.0) return 0.0;

  double lo = 0.0;
  double hi = 2.0 * kPi;
  // Small-angle seed: theta - sin(theta) ~ theta^3/6.
  double theta = m < 1.0 ? std::cbrt(6.0 * m) : kPi * m / (2.0 * kPi - 0.0);
  if (theta <= lo || theta >= hi) theta = 0.5 * (lo + hi);
  const double tol = 1e-12;
  for (int it = 0; it < 200; ++it) {
    const double f = theta - std::sin(theta) - m;
    if (std::abs(f) < tol) return theta;
    if (f > 0.0) hi = theta; else lo = theta;
    const double df = 1.0 - std::cos(theta);
    double next = df > 1e-14 ? theta - f / df : 0.5 * (lo + hi);
    if (next <= lo || next >= hi) next = 0.5 * (lo + hi);
    theta = next;
  }
  return theta;
}

double chord_from_angle(double theta, double radius) {
  return 2.0 * radius * std::sin(0.5 * theta);
}

double bed_height_from_angle(double theta, double radius) {
  return radius * (1.0 - std::cos(0.5 * theta));
}

std::vector<double> slope_angles(std::span<const double> bed_height, double dz) {
  const int n = static_cast<int>(bed_height.size());
  std::vector<double> phi(n, 0.0);
  if (n < 2) return phi;
  for (int k = 0; k < n; ++k) {
    double dhdz;
    if (k == 0) {
      dhdz = (bed_height[1] - bed_height[0]) / dz;
    } else if (k == n - 1) {
      dhdz = (bed_height[n - 1] - bed_height[n - 2]) / dz;
    } else {
      dhdz = (bed_height[k + 1] - bed_height[k - 1]) / (2.0 * dz);
    }
    phi[k] = std::atan(-dhdz);
  }
  return phi;
}

std::vector<double> interface_cross_sections(std::span<const double> solid_volume, double dz,
                                             double inlet_face_area, int* clamped) {
  const int n = static_cast<int>(solid_volume.size());
  std::vector<double> face(n + 1, 0.0);
  int clamps = 0;
  face[0] = inlet_face_area;
  if (face[0] < 0.0) {
    face[0] = 0.0;
    ++clamps;
  }
  for (int k = 0; k < n; ++k) {
    double a = 2.0 * solid_volume[k] / dz - face[k];
    if (a < 0.0) {
      a = 0.0;
      ++clamps;
    }
    face[k + 1] = a;
  }
  if (clamped) *clamped = clamps;
  return face;
}

double hydraulic_diameter(double theta, double radius) {
  // D_H = 4 V_g / (A_gw + A_gs), per unit axial length.
  const double a_g = kPi * radius * radius - segment_area_from_angle(theta, radius);
  const double perimeter = radius * (2.0 * kPi - theta) + chord_from_angle(theta, radius);
  return 4.0 * a_g / perimeter;
}

double effective_diameter(double theta, double radius) {
  const double num = kPi - 0.5 * theta + 0.5 * std::sin(theta);
  const double den = kPi - 0.5 * theta + std::sin(0.5 * theta);
  return 2.0 * radius * num / den;
}

double fill_fraction(double theta) { return (theta - std::sin(theta)) / (2.0 * kPi); }

GeometryProfile build_profile(const KilnDimensions& dims, std::span<const double> theta,
                              double inlet_face_area) {
  const int n = static_cast<int>(theta.size());
  const double r = dims.inner_radius;
  const double dz = dims.dz();
  GeometryProfile g;
  g.theta.assign(theta.begin(), theta.end());
  g.area_solid.resize(n);
  g.area_gas.resize(n);
  g.chord.resize(n);
  g.bed_height.resize(n);
  g.area_gas_solid.resize(n);
  g.area_wall_solid.resize(n);
  g.area_gas_wall.resize(n);
  g.hydraulic_diameter.resize(n);
  g.effective_diameter.resize(n);
  g.fill_fraction.resize(n);
  g.mean_beam_length.resize(n);

  std::vector<double> solid_volume(n);
  for (int k = 0; k < n; ++k) {
    const double th = theta[k];
    g.area_solid[k] = segment_area_from_angle(th, r);
    g.area_gas[k] = kPi * r * r - g.area_solid[k];
    g.chord[k] = chord_from_angle(th, r);
    g.bed_height[k] = bed_height_from_angle(th, r);
    // Midpoint rule for the axial surface-area integrals.
    g.area_gas_solid[k] = g.chord[k] * dz;
    g.area_wall_solid[k] = r * th * dz;
    g.area_gas_wall[k] = 2.0 * kPi * r * dz - g.area_wall_solid[k];
    g.hydraulic_diameter[k] = hydraulic_diameter(th, r);
    g.effective_diameter[k] = effective_diameter(th, r);
    g.fill_fraction[k] = fill_fraction(th);
    g.mean_beam_length[k] = 0.95 * (2.0 * r - g.bed_height[k]);
    solid_volume[k] = g.area_solid[k] * dz;
  }
  g.slope_angle = slope_angles(g.bed_height, dz);
  g.face_area_solid =
      interface_cross_sections(solid_volume, dz, inlet_face_area, &g.clamped_faces);
  g.face_bed_height.resize(n + 1);
  for (int k = 0; k <= n; ++k) {
    const double th = fill_angle_from_area(std::min(g.face_area_solid[k], kPi * r * r), r);
    g.face_bed_height[k] = bed_height_from_angle(th, r);
  }
  return g;
}

} // namespace geometry
} // namespace kiln
