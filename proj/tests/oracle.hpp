// Test-side reference implementations, independent of the library code paths
// they check: double-precision special functions come from Boost.Math, the
// defining kernel integrals are evaluated by adaptive Simpson quadrature.
#ifndef EIGENBAND_TESTS_ORACLE_HPP
#define EIGENBAND_TESTS_ORACLE_HPP

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace oracle {

inline double gamma_p(double a, double x) { return boost::math::gamma_p(a, x); }
inline double gamma_p(double a, double x, double y) {
  return boost::math::gamma_p(a, y) - boost::math::gamma_p(a, x);
}
// unregularized incomplete beta int_x^y t^(a-1)(1-t)^(b-1) dt; routed through
// the smaller tail so the reference itself does not lose digits
inline double inc_beta(double x, double y, double a, double b) {
  double B = boost::math::beta(a, b);
  if (boost::math::ibeta(a, b, x) > 0.5)
    return B * (boost::math::ibetac(a, b, x) - boost::math::ibetac(a, b, y));
  return B * (boost::math::ibeta(a, b, y) - boost::math::ibeta(a, b, x));
}

// erf by its Maclaurin series (converges fast for |x| <= 3)
inline double erf_series(double x) {
  double term = x, sum = x;
  for (int n = 1; n < 200; ++n) {
    term *= -x * x / n;
    double add = term / (2 * n + 1);
    sum += add;
    if (std::fabs(add) < 1e-18 * std::fabs(sum)) break;
  }
  return sum * 2.0 / std::sqrt(M_PI);
}

namespace detail {
inline double simpson(const std::function<double(double)>& f, double a, double b, double fa,
                      double fm, double fb, double whole, double tol, int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double left = (m - a) / 6.0 * (fa + 4 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4 * frm + fb);
  double delta = left + right - whole;
  if (depth <= 0) throw std::runtime_error("oracle quadrature: recursion limit");
  if (std::fabs(delta) <= 15 * tol) return left + right + delta / 15.0;
  return simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}
}  // namespace detail

// adaptive Simpson; the tolerance is scaled off a coarse 256-point scan of
// |f| so integrals that cancel to ~0 still terminate (their absolute error
// is what matters downstream)
inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double rel_tol = 1e-12) {
  if (a == b) return 0.0;
  double mag = 0;
  const int kScan = 256;
  for (int i = 0; i <= kScan; ++i) {
    double t = a + (b - a) * i / kScan;
    mag += std::fabs(f(t));
  }
  mag *= (b - a) / (kScan + 1);
  double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  double whole = (b - a) / 6.0 * (fa + 4 * fm + fb);
  double scale = std::max({std::fabs(whole), mag, 1e-300});
  return detail::simpson(f, a, b, fa, fm, fb, whole, rel_tol * scale, 48);
}

inline double intpow(double x, int k) {
  double r = 1;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

// --- defining kernel integrals (single-integral forms of the skew kernels) ---

// real white Wishart entry, alpha_l = (m-p-1)/2 + l:
//   [P(a_j,b/2)+P(a_j,a/2)] P(a_i;a/2,b/2) - 2/Gamma(a_i) int x^(a_i-1)e^-x P(a_j,x)
inline double wishart_entry(int i, int j, int p, int m, double a, double b) {
  double alpha = (m - p - 1) / 2.0;
  double ai = alpha + i, aj = alpha + j;
  double ah = a / 2, bh = b / 2;
  double term1 = (gamma_p(aj, bh) + gamma_p(aj, ah)) * gamma_p(ai, ah, bh);
  double integral = integrate(
      [&](double x) { return std::pow(x, ai - 1.0) * std::exp(-x) * gamma_p(aj, x); }, ah, bh);
  return term1 - 2.0 / boost::math::tgamma(ai) * integral;
}

// GOE half-moment F_j(y) = (1/2) sgn(y)^j P(j/2, y^2)
inline double goe_F(int j, double y) {
  double s = y >= 0 ? 1.0 : ((j % 2 == 0) ? 1.0 : -1.0);
  return 0.5 * s * gamma_p(j / 2.0, y * y);
}

// GOE entry: [F_j(bh)+F_j(ah)] F_i(ah,bh) - 2/Gamma(i/2) int x^(i-1) e^(-x^2) F_j(x)
inline double goe_entry(int i, int j, double a, double b) {
  double ah = a / std::sqrt(2.0), bh = b / std::sqrt(2.0);
  double term1 = (goe_F(j, bh) + goe_F(j, ah)) * (goe_F(i, bh) - goe_F(i, ah));
  double integral = integrate(
      [&](double x) { return intpow(x, i - 1) * std::exp(-x * x) * goe_F(j, x); }, ah, bh);
  return term1 - 2.0 / boost::math::tgamma(i / 2.0) * integral;
}

// real beta entry with k_l = Gamma(m+n+l+1)/Gamma(m+l):
//   k_i k_j [B(0,a;m+j,n+1)+B(0,b;m+j,n+1)] B(a,b;m+i,n+1)
//   - 2 k_i k_j int x^(m+i-1)(1-x)^n B(0,x;m+j,n+1) dx
inline double beta_entry(int i, int j, double m, double n, double a, double b) {
  auto kl = [&](int l) {
    return std::exp(std::lgamma(m + n + l + 1) - std::lgamma(m + l));
  };
  double ki = kl(i), kj = kl(j);
  double term1 = ki * kj *
                 (boost::math::beta(m + j, n + 1, a) + boost::math::beta(m + j, n + 1, b)) *
                 inc_beta(a, b, m + i, n + 1);
  double integral = integrate(
      [&](double x) {
        return std::pow(x, m + i - 1) * std::pow(1.0 - x, n) * boost::math::beta(m + j, n + 1, x);
      },
      a, b);
  return term1 - 2.0 * ki * kj * integral;
}

// complex white Wishart entry: gamma(m+p-i-j+1; a, b), by quadrature
inline double cw_entry(int i, int j, int p, int m, double a, double b) {
  double nu = m + p - i - j + 1;
  return integrate([&](double t) { return std::pow(t, nu - 1.0) * std::exp(-t); }, a, b);
}

// GUE entry: int_a^b t^(i+j-2) e^(-t^2) dt, by quadrature
inline double gue_entry(int i, int j, double a, double b) {
  return integrate([&](double t) { return intpow(t, i + j - 2) * std::exp(-t * t); }, a, b);
}

}  // namespace oracle

#endif  // EIGENBAND_TESTS_ORACLE_HPP
