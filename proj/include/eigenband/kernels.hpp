#ifndef EIGENBAND_KERNELS_HPP
#define EIGENBAND_KERNELS_HPP

#include <vector>

#include "eigenband/bigreal.hpp"
#include "eigenband/ensemble.hpp"
#include "eigenband/linalg.hpp"

namespace eigenband {

// Kernel matrices whose (scaled) determinants give psi(a,b).
//
// Real ensembles produce skew-symmetric kernels: psi = const * sqrt(det).
// Odd dimensions are padded to (p+1) x (p+1) inside the builders.
// Complex ensembles produce general kernels: psi = const * det.
//
// log_const holds the normalizing prefactor on the log scale; its magnitude
// grows like p^2 log p and would overflow any fixed-exponent format.
struct SkewKernel {
  int matrix_dim;     // p before padding
  BigMatrix entries;  // dim x dim, dim even
  LogScaled log_const;
};

struct DetKernel {
  BigMatrix entries;
  LogScaled log_const;
};

// Builders evaluate every entry at `prec` bits through upward recursions
// seeded from closed forms, with all incomplete-function tables produced by
// one direct evaluation at the extreme parameter plus stable one-step
// recurrences. `parallel` distributes independent rows across OpenMP
// threads; both paths perform identical per-entry operations, so results
// are bit-identical.
//
// Intervals must already be clamped to the ensemble support.
SkewKernel build_real_wishart_kernel(int p, int m, const Interval& iv, int prec,
                                     bool parallel = true);
SkewKernel build_goe_kernel(int n, const Interval& iv, int prec, bool parallel = true);
SkewKernel build_real_beta_kernel(int s, double m, double n, const Interval& iv, int prec,
                                  bool parallel = true);
DetKernel build_complex_white_kernel(int p, int m, const Interval& iv, int prec,
                                     bool parallel = true);
DetKernel build_complex_correlated_kernel(int m, const std::vector<double>& sigma,
                                          const Interval& iv, int prec, bool parallel = true);
DetKernel build_complex_spiked_kernel(int p, int m, double sigma1, double sigma2,
                                      const Interval& iv, int prec, bool parallel = true);
DetKernel build_complex_beta_kernel(int s, double m, double n, const Interval& iv, int prec,
                                    bool parallel = true);
DetKernel build_gue_kernel(int n, const Interval& iv, int prec, bool parallel = true);

namespace chains {

// P(nu0+k, x) for k = 0..len-1, built from one direct evaluation at the top
// parameter followed by the downward recursion P(a,x) = P(a+1,x) + w(a,x),
// w(a,x) = x^a e^{-x} / Gamma(a+1), which only adds positive terms.
std::vector<BigReal> p_chain(const BigReal& nu0, int len, const BigReal& x, int prec);

// Q(nu0+k, x); built upward via Q(a+1,x) = Q(a,x) + w(a,x).
std::vector<BigReal> q_chain(const BigReal& nu0, int len, const BigReal& x, int prec);

// P(nu0+k; x1, x2) = P(nu0+k, x2) - P(nu0+k, x1) for 0 <= x1 <= x2 <= inf.
// The increment w(a,x2) - w(a,x1) is evaluated through expm1, which keeps
// full precision for narrow intervals.
std::vector<BigReal> pdiff_chain(const BigReal& nu0, int len, const BigReal& x1,
                                 const BigReal& x2, int prec);

// T[s] = (1/Gamma(s/2)) int_a^b t^{s-1} e^{-t^2} dt
//      = (1/2) [sgn(b)^s P(s/2, b^2) - sgn(a)^s P(s/2, a^2)]
// for s = smin..smax; a <= b, either endpoint may be infinite.
std::vector<BigReal> gaussian_halfmoment_table(int smin, int smax, const BigReal& a,
                                               const BigReal& b, int prec);

// B(x1, x2; A0+k, B) for k = 0..len-1, via the downward recursion
// B(.;A,B) = ((A+B) B(.;A+1,B) + x2^A(1-x2)^B - x1^A(1-x1)^B) / A.
std::vector<BigReal> beta_chain(const BigReal& A0, int len, const BigReal& B,
                                const BigReal& x1, const BigReal& x2, int prec);

}  // namespace chains

}  // namespace eigenband

#endif  // EIGENBAND_KERNELS_HPP
