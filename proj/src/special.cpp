#include "eigenband/special.hpp"

#include <algorithm>
#include <stdexcept>

namespace eigenband {

namespace {

constexpr long kMaxIter = 2000000L;
constexpr int kGuardBits = 64;

int work_prec(const BigReal& a) { return a.precision() + kGuardBits; }
int work_prec(const BigReal& a, const BigReal& b) {
  return std::max(a.precision(), b.precision()) + kGuardBits;
}
int work_prec(const BigReal& a, const BigReal& b, const BigReal& c) {
  return std::max(std::max(a.precision(), b.precision()), c.precision()) + kGuardBits;
}

// Relative-change stopping threshold 2^(8 - precision) of the call.
BigReal rel_eps(int result_prec) {
  return ldexp2(BigReal::one(result_prec), 8 - static_cast<long>(result_prec));
}

BigReal clamp01(BigReal v) {
  if (v.sign() < 0) return BigReal::zero(v.precision());
  if (v.cmp_d(1.0) > 0) return BigReal::one(v.precision());
  return v;
}

// Lower series: P(a,x) = x^a e^{-x}/Gamma(a+1) * sum_k prod_{i<=k} x/(a+i).
BigReal gamma_p_series(const BigReal& a_in, const BigReal& x_in, int wp) {
  BigReal a = a_in.to_precision(wp), x = x_in.to_precision(wp);
  BigReal eps = rel_eps(wp);
  BigReal sum = BigReal::one(wp);
  BigReal term = BigReal::one(wp);
  BigReal ai = a;
  for (long k = 0; k < kMaxIter; ++k) {
    ai += 1.0;
    term *= x;
    term /= ai;
    sum += term;
    if (term < eps * sum) {
      BigReal lead = exp(a * log(x) - x - lngamma(a + 1.0));
      return lead * sum;
    }
  }
  throw std::runtime_error("reg_lower_gamma: series did not converge");
}

// Upper continued fraction (modified Lentz):
// Q(a,x) = x^a e^{-x}/Gamma(a) * 1/(x+1-a - 1(1-a)/(x+3-a - 2(2-a)/(...))).
BigReal gamma_q_cf(const BigReal& a_in, const BigReal& x_in, int wp) {
  BigReal a = a_in.to_precision(wp), x = x_in.to_precision(wp);
  BigReal eps = rel_eps(wp);
  BigReal tiny = ldexp2(BigReal::one(wp), -(1L << 28));
  BigReal b = x + 1.0 - a;
  BigReal c = 1.0 / tiny;
  BigReal d = 1.0 / b;
  BigReal h = d;
  for (long i = 1; i < kMaxIter; ++i) {
    BigReal an = (a - static_cast<double>(i)) * static_cast<double>(i);
    b += 2.0;
    d = an * d + b;
    if (d.is_zero()) d = tiny;
    c = b + an / c;
    if (c.is_zero()) c = tiny;
    d = 1.0 / d;
    BigReal del = d * c;
    h *= del;
    if (abs(del - 1.0) < eps) {
      BigReal lead = exp(a * log(x) - x - lngamma(a));
      return lead * h;
    }
  }
  throw std::runtime_error("reg_upper_gamma: continued fraction did not converge");
}

// Midpoint Taylor integration of t^{a-1} e^{-t} / Gamma(a) over a narrow [x,y].
// Coefficients d_k = f^{(k)}(t0)/k! follow from t f' = (a-1-t) f:
//   d_{k+1} = ((a-1-t0-k) d_k - d_{k-1}) / (t0 (k+1)).
BigReal gamma_interval_taylor(const BigReal& a, const BigReal& x, const BigReal& y, int wp) {
  BigReal eps = rel_eps(wp);
  BigReal t0 = (x.to_precision(wp) + y) / 2.0;
  BigReal h2 = (y.to_precision(wp) - x) / 2.0;
  BigReal dkm1 = BigReal::zero(wp);
  BigReal dk = exp((a - 1.0) * log(t0) - t0 - lngamma(a).to_precision(wp));
  BigReal sum = BigReal::zero(wp);
  BigReal hpow = h2;  // h2^(k+1)
  for (long k = 0; k < kMaxIter; ++k) {
    if (k % 2 == 0) {
      BigReal term = ldexp2(dk * hpow, 1) / static_cast<double>(k + 1);
      sum += term;
      if (k > 2 && abs(term) < eps * abs(sum)) return sum;
    }
    BigReal dkp1 = ((a - 1.0 - t0 - static_cast<double>(k)) * dk - dkm1) / (t0 * static_cast<double>(k + 1));
    dkm1 = std::move(dk);
    dk = std::move(dkp1);
    hpow *= h2;
  }
  throw std::runtime_error("reg_gamma_interval: Taylor expansion did not converge");
}

// Continued fraction for the regularized incomplete beta (Lentz).
BigReal beta_cf(const BigReal& x_in, const BigReal& a_in, const BigReal& b_in, int wp) {
  BigReal x = x_in.to_precision(wp), a = a_in.to_precision(wp), b = b_in.to_precision(wp);
  BigReal eps = rel_eps(wp);
  BigReal tiny = ldexp2(BigReal::one(wp), -(1L << 28));
  BigReal qab = a + b, qap = a + 1.0, qam = a - 1.0;
  BigReal c = BigReal::one(wp);
  BigReal d = 1.0 - qab * x / qap;
  if (d.is_zero()) d = tiny;
  d = 1.0 / d;
  BigReal h = d;
  for (long m = 1; m < kMaxIter; ++m) {
    double md = static_cast<double>(m);
    BigReal aa = (b - md) * md * x / ((qam + 2.0 * md) * (a + 2.0 * md));
    d = 1.0 + aa * d;
    if (d.is_zero()) d = tiny;
    c = 1.0 + aa / c;
    if (c.is_zero()) c = tiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + md) * (qab + md) * x / ((a + 2.0 * md) * (qap + 2.0 * md));
    d = 1.0 + aa * d;
    if (d.is_zero()) d = tiny;
    c = 1.0 + aa / c;
    if (c.is_zero()) c = tiny;
    d = 1.0 / d;
    BigReal del = d * c;
    h *= del;
    if (abs(del - 1.0) < eps) return h;
  }
  throw std::runtime_error("reg_inc_beta: continued fraction did not converge");
}

BigReal reg_inc_beta_wp(const BigReal& x, const BigReal& a, const BigReal& b, int wp);

BigReal reg_inc_beta_front(const BigReal& x_in, const BigReal& a_in, const BigReal& b_in,
                           int wp) {
  BigReal x = x_in.to_precision(wp), a = a_in.to_precision(wp), b = b_in.to_precision(wp);
  BigReal lnB = lngamma(a) + lngamma(b) - lngamma(a + b);
  BigReal front = exp(a * log(x) + b * log1p(-x) - lnB);
  return front * beta_cf(x, a, b, wp) / a;
}

BigReal reg_inc_beta_wp(const BigReal& x, const BigReal& a, const BigReal& b, int wp) {
  if (x.sign() <= 0) return BigReal::zero(wp);
  if (x.cmp_d(1.0) >= 0) return BigReal::one(wp);
  BigReal split = (a + 1.0) / (a + b + 2.0);
  if (x < split) return reg_inc_beta_front(x, a, b, wp);
  return 1.0 - reg_inc_beta_front(1.0 - x.to_precision(wp), b, a, wp);
}

// Midpoint Taylor integration of t^{a-1}(1-t)^{b-1} over a narrow [x,y],
// from t(1-t) f' = ((a-1)(1-t) - (b-1)t) f:
//   d_{k+1} = ((A(1-t0)-B t0 - (1-2 t0)k) d_k + (k-1-A-B) d_{k-1}) / (t0(1-t0)(k+1)).
BigReal beta_interval_taylor(const BigReal& x, const BigReal& y, const BigReal& a,
                             const BigReal& b, int wp) {
  BigReal eps = rel_eps(wp);
  BigReal t0 = (x.to_precision(wp) + y) / 2.0;
  BigReal h2 = (y.to_precision(wp) - x) / 2.0;
  BigReal A = a.to_precision(wp) - 1.0, B = b.to_precision(wp) - 1.0;
  BigReal omt0 = 1.0 - t0;
  BigReal denom0 = t0 * omt0;
  BigReal dkm1 = BigReal::zero(wp);
  BigReal dk = exp(A * log(t0) + B * log(omt0));
  BigReal sum = BigReal::zero(wp);
  BigReal hpow = h2;
  BigReal c1 = A * omt0 - B * t0;
  BigReal c2 = 1.0 - ldexp2(t0, 1);
  for (long k = 0; k < kMaxIter; ++k) {
    if (k % 2 == 0) {
      BigReal term = ldexp2(dk * hpow, 1) / static_cast<double>(k + 1);
      sum += term;
      if (k > 2 && abs(term) < eps * abs(sum)) return sum;
    }
    double kd = static_cast<double>(k);
    BigReal dkp1 =
        ((c1 - c2 * kd) * dk + (kd - 1.0 - A - B) * dkm1) / (denom0 * (kd + 1.0));
    dkm1 = std::move(dk);
    dk = std::move(dkp1);
    hpow *= h2;
  }
  throw std::runtime_error("inc_beta: Taylor expansion did not converge");
}

}  // namespace

BigReal log_gamma(const BigReal& a) {
  if (!(a.sign() > 0)) throw std::domain_error("log_gamma: argument must be positive");
  return lngamma(a.to_precision(work_prec(a))).to_precision(a.precision());
}

BigReal reg_lower_gamma(const BigReal& a, const BigReal& x) {
  if (!(a.sign() > 0) || a.is_inf()) throw std::domain_error("reg_lower_gamma: a must be positive and finite");
  if (x.is_nan() || x.sign() < 0) throw std::domain_error("reg_lower_gamma: x must be >= 0");
  int rp = std::max(a.precision(), x.precision());
  if (x.is_inf()) return BigReal::one(rp);
  if (x.is_zero()) return BigReal::zero(rp);
  int wp = rp + kGuardBits;
  BigReal r = (x < a + 1.0) ? gamma_p_series(a, x, wp)
                            : 1.0 - gamma_q_cf(a, x, wp);
  return clamp01(r.to_precision(rp));
}

BigReal reg_upper_gamma(const BigReal& a, const BigReal& x) {
  if (!(a.sign() > 0) || a.is_inf()) throw std::domain_error("reg_upper_gamma: a must be positive and finite");
  if (x.is_nan() || x.sign() < 0) throw std::domain_error("reg_upper_gamma: x must be >= 0");
  int rp = std::max(a.precision(), x.precision());
  if (x.is_inf()) return BigReal::zero(rp);
  if (x.is_zero()) return BigReal::one(rp);
  int wp = rp + kGuardBits;
  BigReal r = (x < a + 1.0) ? 1.0 - gamma_p_series(a, x, wp)
                            : gamma_q_cf(a, x, wp);
  return clamp01(r.to_precision(rp));
}

BigReal reg_gamma_interval(const BigReal& a, const BigReal& x, const BigReal& y) {
  if (!(a.sign() > 0)) throw std::domain_error("reg_gamma_interval: a must be positive");
  if (x.is_nan() || y.is_nan() || x.sign() < 0 || y < x)
    throw std::domain_error("reg_gamma_interval: requires 0 <= x <= y");
  int rp = work_prec(a, x, y) - kGuardBits;
  if (x == y) return BigReal::zero(rp);
  if (x.is_zero()) return reg_lower_gamma(a.to_precision(rp), y.to_precision(rp));
  if (y.is_inf()) return reg_upper_gamma(a.to_precision(rp), x.to_precision(rp));
  int wp = rp + kGuardBits;
  BigReal width_scale = max(x, BigReal::one(x.precision()));
  if ((y - x) < width_scale * 1e-3)
    return clamp01(gamma_interval_taylor(a, x, y, wp).to_precision(rp));
  // Route through the smaller tail to avoid 1-vs-1 cancellation.
  if (x < a + 1.0) {
    BigReal px = gamma_p_series(a, x, wp);
    BigReal r = (px.cmp_d(0.5) <= 0)
                    ? reg_lower_gamma(a.to_precision(wp), y.to_precision(wp)) - px
                    : (1.0 - px) - reg_upper_gamma(a.to_precision(wp), y.to_precision(wp));
    return clamp01(r.to_precision(rp));
  }
  BigReal qx = gamma_q_cf(a, x, wp);
  BigReal r = (qx.cmp_d(0.5) <= 0)
                  ? qx - reg_upper_gamma(a.to_precision(wp), y.to_precision(wp))
                  : reg_lower_gamma(a.to_precision(wp), y.to_precision(wp)) - (1.0 - qx);
  return clamp01(r.to_precision(rp));
}

BigReal gamma_shift(const BigReal& a, long n, const BigReal& x, const BigReal& P_ax) {
  if (!(a.sign() > 0)) throw std::domain_error("gamma_shift: a must be positive");
  if (n < 0) throw std::domain_error("gamma_shift: n must be >= 0");
  if (n == 0 || x.is_zero() || x.is_inf()) return P_ax;
  int wp = std::max(work_prec(a, x), P_ax.precision() + kGuardBits);
  BigReal term = exp(a * log(x).to_precision(wp) - x - lngamma(a + 1.0).to_precision(wp));
  BigReal s = term;
  BigReal ak = a.to_precision(wp);
  for (long k = 1; k < n; ++k) {
    ak += 1.0;
    term *= x;
    term /= ak;
    s += term;
  }
  return clamp01((P_ax - s).to_precision(P_ax.precision()));
}

BigReal reg_inc_beta(const BigReal& x, const BigReal& a, const BigReal& b) {
  if (!(a.sign() > 0) || !(b.sign() > 0))
    throw std::domain_error("reg_inc_beta: a,b must be positive");
  if (x.is_nan() || x.sign() < 0 || x.cmp_d(1.0) > 0)
    throw std::domain_error("reg_inc_beta: x must lie in [0,1]");
  int rp = std::max({x.precision(), a.precision(), b.precision()});
  return clamp01(reg_inc_beta_wp(x, a, b, rp + kGuardBits).to_precision(rp));
}

BigReal inc_beta(const BigReal& x, const BigReal& y, const BigReal& a, const BigReal& b) {
  if (!(a.sign() > 0) || !(b.sign() > 0)) throw std::domain_error("inc_beta: a,b must be positive");
  if (x.is_nan() || y.is_nan() || x.sign() < 0 || y < x || y.cmp_d(1.0) > 0)
    throw std::domain_error("inc_beta: requires 0 <= x <= y <= 1");
  int rp = std::max({x.precision(), y.precision(), a.precision(), b.precision()});
  if (x == y) return BigReal::zero(rp);
  int wp = rp + kGuardBits;
  BigReal lnB = lngamma(a.to_precision(wp)) + lngamma(b.to_precision(wp)) -
                lngamma((a + b).to_precision(wp));
  BigReal h = y - x;
  BigReal t0 = (x + y) / 2.0;
  bool interior = x.sign() > 0 && y.cmp_d(1.0) < 0;
  if (interior && h < min(t0, 1.0 - t0.to_precision(wp)) * 1e-3) {
    BigReal r = beta_interval_taylor(x, y, a, b, wp);
    return max(r, BigReal::zero(wp)).to_precision(rp);
  }
  BigReal Ix = reg_inc_beta_wp(x.to_precision(wp), a, b, wp);
  BigReal diff;
  if (Ix.cmp_d(0.5) <= 0) {
    diff = reg_inc_beta_wp(y.to_precision(wp), a, b, wp) - Ix;
  } else {
    // complementary route: I^c(x) - I^c(y) with I^c(t) = I_{1-t}(b,a)
    BigReal icx = reg_inc_beta_wp(1.0 - x.to_precision(wp), b, a, wp);
    BigReal icy = reg_inc_beta_wp(1.0 - y.to_precision(wp), b, a, wp);
    diff = icx - icy;
  }
  BigReal r = exp(lnB) * max(diff, BigReal::zero(wp));
  return r.to_precision(rp);
}

BigReal beta_shift(const BigReal& x, const BigReal& a, const BigReal& b, const BigReal& B_ax) {
  if (!(a.sign() > 0) || !(b.sign() > 0)) throw std::domain_error("beta_shift: a,b must be positive");
  int wp = std::max(work_prec(x, a, b), B_ax.precision() + kGuardBits);
  if (x.is_zero()) return BigReal::zero(B_ax.precision());
  BigReal apb = (a + b).to_precision(wp);
  BigReal boundary = exp(a * log(x).to_precision(wp) + b * log1p(-x.to_precision(wp)));
  BigReal r = (a * B_ax.to_precision(wp) - boundary) / apb;
  return r.to_precision(B_ax.precision());
}

std::pair<BigReal, BigReal> erf_erfc(const BigReal& x) {
  if (x.is_nan()) throw std::domain_error("erf_erfc: argument must not be NaN");
  int wp = work_prec(x);
  BigReal xe = x.to_precision(wp);
  return {erf(xe).to_precision(x.precision()), erfc(xe).to_precision(x.precision())};
}

}  // namespace eigenband
