#include "kiln/banded.hpp"

#include <cmath>
#include <stdexcept>

namespace kiln {

// Storage mirrors LAPACK's dgbtrf layout: column j holds rows
// j-kd .. j+2kd at offsets 2kd + (i - j). The extra kd rows above absorb
// fill-in from row swaps.
BandedMatrix::BandedMatrix(int n, int half_bandwidth)
    : n_(n), kd_(half_bandwidth), stride_(3 * half_bandwidth + 1),
      a_(static_cast<std::size_t>(n) * stride_, 0.0), pivot_(n, 0) {
  if (n <= 0 || half_bandwidth < 0 || half_bandwidth >= n) {
    throw std::invalid_argument("BandedMatrix: bad dimensions");
  }
}

double& BandedMatrix::at(int row, int col) {
  return a_[static_cast<std::size_t>(col) * stride_ + (2 * kd_ + row - col)];
}

double BandedMatrix::value(int row, int col) const {
  if (!in_band(row, col)) return 0.0;
  return a_[static_cast<std::size_t>(col) * stride_ + (2 * kd_ + row - col)];
}

void BandedMatrix::clear() {
  a_.assign(a_.size(), 0.0);
  factored_ = false;
}

bool BandedMatrix::factorize() {
  auto entry = [&](int row, int col) -> double& {
    return a_[static_cast<std::size_t>(col) * stride_ + (2 * kd_ + row - col)];
  };
  for (int j = 0; j < n_; ++j) {
    // Pivot search in column j, rows j .. min(j+kd, n-1).
    const int last = std::min(j + kd_, n_ - 1);
    int piv = j;
    double best = std::abs(entry(j, j));
    for (int i = j + 1; i <= last; ++i) {
      const double v = std::abs(entry(i, j));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    pivot_[j] = piv;
    if (!(best > 0.0) || !std::isfinite(best)) return false;
    const int width = std::min(2 * kd_, n_ - 1 - j); // columns j+1 .. j+width
    if (piv != j) {
      for (int c = j; c <= j + width; ++c) std::swap(entry(j, c), entry(piv, c));
    }
    const double diag = entry(j, j);
    for (int i = j + 1; i <= last; ++i) {
      const double m = entry(i, j) / diag;
      entry(i, j) = m;
      for (int c = j + 1; c <= j + width; ++c) entry(i, c) -= m * entry(j, c);
    }
  }
  factored_ = true;
  return true;
}

void BandedMatrix::solve(std::span<double> b) const {
  if (!factored_) throw std::logic_error("BandedMatrix::solve before factorize");
  auto entry = [&](int row, int col) -> double {
    return a_[static_cast<std::size_t>(col) * stride_ + (2 * kd_ + row - col)];
  };
  // Forward: apply pivots and L.
  for (int j = 0; j < n_; ++j) {
    if (pivot_[j] != j) std::swap(b[j], b[pivot_[j]]);
    const int last = std::min(j + kd_, n_ - 1);
    for (int i = j + 1; i <= last; ++i) b[i] -= entry(i, j) * b[j];
  }
  // Backward: U.
  for (int j = n_ - 1; j >= 0; --j) {
    const int width = std::min(2 * kd_, n_ - 1 - j);
    double s = b[j];
    for (int c = j + 1; c <= j + width; ++c) s -= entry(j, c) * b[c];
    b[j] = s / entry(j, j);
  }
}

} // namespace kiln
