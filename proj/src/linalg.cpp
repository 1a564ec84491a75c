#include "eigenband/linalg.hpp"

#include <utility>

namespace eigenband {

void BigMatrix::swap_rows(int r1, int r2) {
  if (r1 == r2) return;
  for (int j = 0; j < n_; ++j) at(r1, j).swap(at(r2, j));
}

void BigMatrix::swap_cols(int c1, int c2) {
  if (c1 == c2) return;
  for (int i = 0; i < n_; ++i) at(i, c1).swap(at(i, c2));
}

LogScaled log_sqrt_det_skew(BigMatrix& A) {
  const int n = A.dim();
  if (n % 2 != 0)
    throw internal_consistency_error("log_sqrt_det_skew: dimension must be even (pad odd kernels)");
  const int prec = n > 0 ? A.at(0, 0).precision() : BigReal::kMinPrecision;
  BigReal log_pf = BigReal::zero(prec);
  std::vector<BigReal> tau;
  tau.reserve(n);
  for (int k = 0; k + 1 < n; k += 2) {
    // pivot: largest |A(i,k)| among i > k
    int kp = k + 1;
    for (int i = k + 2; i < n; ++i)
      if (mpfr_cmpabs(A.at(i, k).raw(), A.at(kp, k).raw()) > 0) kp = i;
    if (kp != k + 1) {
      A.swap_rows(k + 1, kp);
      A.swap_cols(k + 1, kp);
    }
    const BigReal& pivot = A.at(k, k + 1);
    if (pivot.is_zero()) return LogScaled::zero(prec);
    log_pf += log(abs(pivot));

    tau.clear();
    for (int i = k + 2; i < n; ++i) tau.push_back(A.at(k, i) / pivot);
    // rank-2 update of the trailing block; only the upper triangle is
    // computed, the lower is mirrored to keep the skew structure exact
    for (int i = k + 2; i < n; ++i) {
      const BigReal& bi = A.at(i, k + 1);
      for (int j = i + 1; j < n; ++j) {
        BigReal& aij = A.at(i, j);
        aij.add_mul(tau[i - (k + 2)], A.at(j, k + 1));
        aij.sub_mul(tau[j - (k + 2)], bi);
        A.at(j, i) = -aij;
      }
    }
  }
  return LogScaled(std::move(log_pf), +1);
}

LogScaled log_det_lu(BigMatrix& A) {
  const int n = A.dim();
  const int prec = n > 0 ? A.at(0, 0).precision() : BigReal::kMinPrecision;
  BigReal log_det = BigReal::zero(prec);
  int sign = +1;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    for (int i = k + 1; i < n; ++i)
      if (mpfr_cmpabs(A.at(i, k).raw(), A.at(piv, k).raw()) > 0) piv = i;
    if (piv != k) {
      A.swap_rows(k, piv);
      sign = -sign;
    }
    const BigReal& pivot = A.at(k, k);
    if (pivot.is_zero()) return LogScaled::zero(prec);
    log_det += log(abs(pivot));
    if (pivot.sign() < 0) sign = -sign;
    for (int i = k + 1; i < n; ++i) {
      BigReal mult = A.at(i, k) / pivot;
      for (int j = k + 1; j < n; ++j) A.at(i, j).sub_mul(mult, A.at(k, j));
    }
  }
  return LogScaled(std::move(log_det), sign);
}

BigReal log_det_hadamard_bound(const BigMatrix& A) {
  const int n = A.dim();
  const int prec = n > 0 ? A.at(0, 0).precision() : BigReal::kMinPrecision;
  BigReal bound = BigReal::zero(prec);
  for (int i = 0; i < n; ++i) {
    BigReal s = BigReal::zero(prec);
    for (int j = 0; j < n; ++j) s.add_mul(A.at(i, j), A.at(i, j));
    if (s.is_zero()) continue;
    bound += ldexp2(log(s), -1);
  }
  return bound;
}

}  // namespace eigenband
