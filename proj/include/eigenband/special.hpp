#ifndef EIGENBAND_SPECIAL_HPP
#define EIGENBAND_SPECIAL_HPP

#include <utility>

#include "eigenband/bigreal.hpp"

namespace eigenband {

// Scalar special functions on BigReal. Each routine works at the largest
// precision among its BigReal arguments; iterative expansions run until the
// relative change drops below 2^(8 - precision).
//
// Conventions:
//   P(a,x)      regularized lower incomplete gamma, P(a,0)=0, P(a,inf)=1
//   Q(a,x)      1 - P(a,x), computed directly (no cancellation for large x)
//   P(a;x,y)    P(a,y) - P(a,x), guarded against cancellation for narrow [x,y]
//   B(x,y;a,b)  unregularized incomplete beta integral of t^(a-1)(1-t)^(b-1)

// ln Gamma(a), a > 0.
BigReal log_gamma(const BigReal& a);

// P(a,x): series for x < a+1, continued fraction otherwise.
BigReal reg_lower_gamma(const BigReal& a, const BigReal& x);

// Q(a,x) = 1 - P(a,x).
BigReal reg_upper_gamma(const BigReal& a, const BigReal& x);

// P(a;x,y) for 0 <= x <= y (y may be +inf). Uses a midpoint Taylor expansion
// of the integrand when (y-x)/max(x,1) < 1e-3, and the upper-tail route when
// both arguments sit above the bulk of the distribution.
BigReal reg_gamma_interval(const BigReal& a, const BigReal& x, const BigReal& y);

// P(a+n,x) from P_ax = P(a,x) by the finite-sum recursion
//   P(a+n,x) = P(a,x) - e^{-x} sum_{k=0}^{n-1} x^{a+k}/Gamma(a+k+1).
BigReal gamma_shift(const BigReal& a, long n, const BigReal& x, const BigReal& P_ax);

// Regularized incomplete beta I_x(a,b) (continued fraction).
BigReal reg_inc_beta(const BigReal& x, const BigReal& a, const BigReal& b);

// Unregularized B(x,y;a,b) for 0 <= x <= y <= 1.
BigReal inc_beta(const BigReal& x, const BigReal& y, const BigReal& a, const BigReal& b);

// B(0,x;a+1,b) from B_ax = B(0,x;a,b) by the one-step recursion
//   B(0,x;a+1,b) = a/(a+b) B(0,x;a,b) - x^a (1-x)^b / (a+b).
BigReal beta_shift(const BigReal& x, const BigReal& a, const BigReal& b, const BigReal& B_ax);

// (erf x, erfc x); the pair sums to 1 at working precision.
std::pair<BigReal, BigReal> erf_erfc(const BigReal& x);

}  // namespace eigenband

#endif  // EIGENBAND_SPECIAL_HPP
