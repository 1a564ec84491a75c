#ifndef EIGENBAND_LINALG_HPP
#define EIGENBAND_LINALG_HPP

#include <stdexcept>
#include <vector>

#include "eigenband/bigreal.hpp"

namespace eigenband {

// Raised when a computed quantity violates a structural identity that the
// construction guarantees (e.g. a normalization self-check fails); it always
// indicates a defect in the kernel assembly, never bad user input.
class internal_consistency_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Dense square matrix of BigReal entries, row-major.
class BigMatrix {
 public:
  BigMatrix(int n, int precision_bits)
      : n_(n), data_(static_cast<size_t>(n) * n, BigReal::zero(precision_bits)) {}

  int dim() const { return n_; }
  BigReal& at(int i, int j) { return data_[static_cast<size_t>(i) * n_ + j]; }
  const BigReal& at(int i, int j) const { return data_[static_cast<size_t>(i) * n_ + j]; }
  void swap_rows(int r1, int r2);
  void swap_cols(int c1, int c2);

 private:
  int n_;
  std::vector<BigReal> data_;
};

// (1/2) ln det of a skew-symmetric matrix with even dimension, computed by
// Parlett-Reid tridiagonalization with partial pivoting; the skew structure
// is preserved throughout, so the determinant is the square of the pivot
// product and cannot come out negative. Consumes the entries of A.
// Returns sign 0 (log -inf) for a structurally singular matrix.
//
// The returned LogScaled carries (1/2) ln det = sum of ln |pivots|.
LogScaled log_sqrt_det_skew(BigMatrix& A);

// ln |det| and sign by LU with partial pivoting; consumes the entries.
LogScaled log_det_lu(BigMatrix& A);

// Hadamard bound on ln |det| (sum of row-norm logs); a scale reference for
// classifying tiny negative determinants as noise.
BigReal log_det_hadamard_bound(const BigMatrix& A);

}  // namespace eigenband

#endif  // EIGENBAND_LINALG_HPP
