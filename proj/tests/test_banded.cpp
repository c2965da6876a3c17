#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "kiln/banded.hpp"

using kiln::BandedMatrix;

namespace {

// Reference: multiply the original band matrix (kept as a dense copy).
std::vector<double> matvec(const std::vector<std::vector<double>>& a,
                           const std::vector<double>& x) {
  const int n = static_cast<int>(x.size());
  std::vector<double> y(n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) y[i] += a[i][j] * x[j];
  }
  return y;
}

} // namespace

TEST_CASE("banded LU solves random diagonally loaded systems") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (auto [n, kd] : {std::pair{8, 1}, {25, 3}, {60, 7}, {50, 49}}) {
    BandedMatrix band(n, kd);
    std::vector<std::vector<double>> dense(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) {
      for (int j = std::max(0, i - kd); j <= std::min(n - 1, i + kd); ++j) {
        const double v = u(rng) + (i == j ? 3.0 : 0.0);
        band.at(i, j) = v;
        dense[i][j] = v;
      }
    }
    std::vector<double> x_true(n);
    for (auto& v : x_true) v = u(rng);
    std::vector<double> b = matvec(dense, x_true);
    REQUIRE(band.factorize());
    band.solve(b);
    for (int i = 0; i < n; ++i) CHECK(b[i] == doctest::Approx(x_true[i]).epsilon(1e-10));
  }
}

TEST_CASE("banded LU pivots rows (zero diagonal, nonsingular)") {
  // [[0, 1], [1, 0]] requires a swap.
  BandedMatrix band(2, 1);
  band.at(0, 1) = 1.0;
  band.at(1, 0) = 1.0;
  REQUIRE(band.factorize());
  std::vector<double> b{5.0, 7.0};
  band.solve(b);
  CHECK(b[0] == doctest::Approx(7.0));
  CHECK(b[1] == doctest::Approx(5.0));
}

TEST_CASE("banded LU reports singularity") {
  BandedMatrix band(3, 1);
  band.at(0, 0) = 1.0; // rows 1 and 2 are identically zero
  CHECK(!band.factorize());
}

TEST_CASE("pivoting keeps an ill-ordered system accurate") {
  // Tiny diagonal pivot would destroy accuracy without row exchange.
  const int n = 30, kd = 2;
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  BandedMatrix band(n, kd);
  std::vector<std::vector<double>> dense(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    for (int j = std::max(0, i - kd); j <= std::min(n - 1, i + kd); ++j) {
      double v = u(rng);
      if (i == j) v = 1e-14 * v;
      if (j == i + 1 || j == i - 1) v += (v < 0 ? -2.0 : 2.0);
      band.at(i, j) = v;
      dense[i][j] = v;
    }
  }
  std::vector<double> x_true(n);
  for (auto& v : x_true) v = u(rng);
  std::vector<double> b = matvec(dense, x_true);
  REQUIRE(band.factorize());
  band.solve(b);
  for (int i = 0; i < n; ++i) CHECK(b[i] == doctest::Approx(x_true[i]).epsilon(1e-8));
}
