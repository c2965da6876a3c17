#pragma once

#include <span>
#include <vector>

namespace kiln {

/// Square banded matrix with equal lower/upper half-bandwidth, stored
/// column-major in LAPACK band layout with room for pivoting fill-in.
/// Supports in-place LU factorization with partial pivoting and solve.
class BandedMatrix {
 public:
  BandedMatrix(int n, int half_bandwidth);

  int size() const { return n_; }
  int half_bandwidth() const { return kd_; }

  double& at(int row, int col);
  double value(int row, int col) const; // 0 outside the band
  bool in_band(int row, int col) const { return row - col <= kd_ && col - row <= kd_; }

  void clear();

  /// LU with partial pivoting; returns false on a (numerically) singular
  /// pivot. The factorization overwrites the storage.
  bool factorize();

  /// Solve A x = b using the factorization; b is overwritten with x.
  void solve(std::span<double> b) const;

 private:
  int n_;
  int kd_;        // half-bandwidth of the input matrix
  int stride_;    // rows per column in storage: 3*kd + 1
  bool factored_ = false;
  std::vector<double> a_;   // band storage
  std::vector<int> pivot_;
};

} // namespace kiln
