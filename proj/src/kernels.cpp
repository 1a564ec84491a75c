#include "eigenband/kernels.hpp"

#include <cmath>
#include <stdexcept>

#include "eigenband/special.hpp"

namespace eigenband {

namespace {

BigReal endpoint(double x, int prec) {
  if (std::isinf(x)) return x > 0 ? BigReal::pos_inf(prec) : BigReal::neg_inf(prec);
  return BigReal(x, prec);
}

// x^a e^{-x} / Gamma(a+1); 0 at x = 0 (a > 0) and x = +inf.
BigReal gamma_weight(const BigReal& a, const BigReal& x, int prec) {
  if (x.is_zero() || x.is_inf()) return BigReal::zero(prec);
  return exp(a * log(x) - x - lngamma(a + 1.0));
}

int padded_dim(int p) { return p % 2 == 0 ? p : p + 1; }

void antisymmetrize(BigMatrix& A) {
  for (int i = 0; i < A.dim(); ++i)
    for (int j = 0; j < i; ++j) A.at(i, j) = -A.at(j, i);
}

}  // namespace

namespace chains {

std::vector<BigReal> p_chain(const BigReal& nu0, int len, const BigReal& x, int prec) {
  std::vector<BigReal> P;
  if (len <= 0) return P;
  if (x.is_inf()) {
    P.assign(len, BigReal::one(prec));
    return P;
  }
  if (x.is_zero()) {
    P.assign(len, BigReal::zero(prec));
    return P;
  }
  P.assign(len, BigReal::zero(prec));
  BigReal top = nu0 + static_cast<double>(len - 1);
  P[len - 1] = reg_lower_gamma(top.to_precision(prec), x.to_precision(prec));
  if (len == 1) return P;
  BigReal a = top - 1.0;
  BigReal w = gamma_weight(a, x, prec);
  for (int t = len - 2; t >= 0; --t) {
    P[t] = P[t + 1] + w;
    if (t > 0) {
      w *= a;
      w /= x;
      a -= 1.0;
    }
  }
  return P;
}

std::vector<BigReal> q_chain(const BigReal& nu0, int len, const BigReal& x, int prec) {
  std::vector<BigReal> Q;
  if (len <= 0) return Q;
  if (x.is_inf()) {
    Q.assign(len, BigReal::zero(prec));
    return Q;
  }
  if (x.is_zero()) {
    Q.assign(len, BigReal::one(prec));
    return Q;
  }
  Q.assign(len, BigReal::zero(prec));
  Q[0] = reg_upper_gamma(nu0.to_precision(prec), x.to_precision(prec));
  if (len == 1) return Q;
  BigReal a = nu0.to_precision(prec);
  BigReal w = gamma_weight(a, x, prec);
  for (int t = 1; t < len; ++t) {
    Q[t] = Q[t - 1] + w;
    if (t + 1 < len) {
      a += 1.0;
      w *= x;
      w /= a;
    }
  }
  return Q;
}

std::vector<BigReal> pdiff_chain(const BigReal& nu0, int len, const BigReal& x1,
                                 const BigReal& x2, int prec) {
  std::vector<BigReal> D;
  if (len <= 0) return D;
  if (x1 == x2) {
    D.assign(len, BigReal::zero(prec));
    return D;
  }
  if (x1.is_zero()) return p_chain(nu0, len, x2, prec);
  if (x2.is_inf()) return q_chain(nu0, len, x1, prec);
  D.assign(len, BigReal::zero(prec));
  BigReal top = nu0 + static_cast<double>(len - 1);
  D[len - 1] = reg_gamma_interval(top.to_precision(prec), x1.to_precision(prec),
                                  x2.to_precision(prec));
  if (len == 1) return D;
  BigReal L = log(x2) - log(x1.to_precision(prec));
  BigReal dX = x2 - x1.to_precision(prec);
  BigReal a = top - 1.0;
  BigReal w1 = gamma_weight(a, x1, prec);
  BigReal u = a * L - dX;
  for (int t = len - 2; t >= 0; --t) {
    D[t] = D[t + 1] + w1 * expm1(u);
    if (t > 0) {
      w1 *= a;
      w1 /= x1;
      u -= L;
      a -= 1.0;
    }
  }
  return D;
}

std::vector<BigReal> gaussian_halfmoment_table(int smin, int smax, const BigReal& a,
                                               const BigReal& b, int prec) {
  const int len = smax - smin + 1;
  std::vector<BigReal> T(std::max(len, 0), BigReal::zero(prec));
  if (len <= 0) return T;
  const bool a_inf = a.is_inf(), b_inf = b.is_inf();
  BigReal a2 = a_inf ? BigReal::pos_inf(prec) : sqr(a.to_precision(prec));
  BigReal b2 = b_inf ? BigReal::pos_inf(prec) : sqr(b.to_precision(prec));
  const int sa = a.sign(), sb = b.sign();

  // per-parity chains over nu = s/2, stepping by 1 within a parity class
  auto class_len = [&](int s0) { return s0 > smax ? 0 : (smax - s0) / 2 + 1; };
  auto nu_of = [&](int s0) { return BigReal(s0, prec) / 2.0; };

  // T = (c_b - c_a)/2 with c_x(s) = sgn(x)^s P(s/2, x^2); assemble per case
  // so every difference is evaluated by a cancellation-free chain.
  auto assemble = [&](int s0, auto&& fill) {
    for (int s = s0, k = 0; s <= smax; s += 2, ++k) fill(s, k);
  };

  for (int s0 = smin; s0 <= std::min(smax, smin + 1); ++s0) {
    const bool odd = (s0 % 2) != 0;
    const int len_c = class_len(s0);
    if (len_c == 0) continue;
    BigReal nu0 = nu_of(s0);
    if (a_inf && b_inf) {
      // int over all reals: 1 for odd s, 0 for even s
      assemble(s0, [&](int s, int) {
        T[s - smin] = (s % 2) ? BigReal::one(prec) : BigReal::zero(prec);
      });
    } else if (a_inf) {
      // c_a = (-1)^s
      std::vector<BigReal> Q = q_chain(nu0, len_c, b2, prec);
      std::vector<BigReal> P;
      if (odd) P = p_chain(nu0, len_c, b2, prec);
      assemble(s0, [&](int s, int k) {
        if (s % 2 == 0)
          T[s - smin] = ldexp2(-Q[k], -1);  // (P-1)/2
        else if (sb >= 0)
          T[s - smin] = ldexp2(P[k] + 1.0, -1);
        else
          T[s - smin] = ldexp2(Q[k], -1);  // (1-P)/2
      });
    } else if (b_inf) {
      // c_b = 1
      std::vector<BigReal> Q = q_chain(nu0, len_c, a2, prec);
      std::vector<BigReal> P;
      if (odd && sa < 0) P = p_chain(nu0, len_c, a2, prec);
      assemble(s0, [&](int s, int k) {
        if (s % 2 == 0 || sa >= 0)
          T[s - smin] = ldexp2(Q[k], -1);
        else
          T[s - smin] = ldexp2(P[k] + 1.0, -1);
      });
    } else if (sa >= 0) {
      std::vector<BigReal> D = pdiff_chain(nu0, len_c, a2, b2, prec);
      assemble(s0, [&](int s, int k) { T[s - smin] = ldexp2(D[k], -1); });
    } else if (sb <= 0) {
      // both negative: |b| <= |a|
      std::vector<BigReal> D = pdiff_chain(nu0, len_c, b2, a2, prec);
      assemble(s0, [&](int s, int k) {
        T[s - smin] = (s % 2 == 0) ? ldexp2(-D[k], -1) : ldexp2(D[k], -1);
      });
    } else {
      // a < 0 < b: odd s sums, even s differences of the squared endpoints
      if (odd) {
        std::vector<BigReal> Pa = p_chain(nu0, len_c, a2, prec);
        std::vector<BigReal> Pb = p_chain(nu0, len_c, b2, prec);
        assemble(s0, [&](int s, int k) { T[s - smin] = ldexp2(Pb[k] + Pa[k], -1); });
      } else {
        bool b_larger = b2 >= a2;
        std::vector<BigReal> D = b_larger ? pdiff_chain(nu0, len_c, a2, b2, prec)
                                          : pdiff_chain(nu0, len_c, b2, a2, prec);
        assemble(s0, [&](int s, int k) {
          T[s - smin] = b_larger ? ldexp2(D[k], -1) : ldexp2(-D[k], -1);
        });
      }
    }
  }
  return T;
}

std::vector<BigReal> beta_chain(const BigReal& A0, int len, const BigReal& B,
                                const BigReal& x1, const BigReal& x2, int prec) {
  std::vector<BigReal> V;
  if (len <= 0) return V;
  V.assign(len, BigReal::zero(prec));
  if (x1 == x2) return V;
  BigReal top = A0 + static_cast<double>(len - 1);
  V[len - 1] = inc_beta(x1.to_precision(prec), x2.to_precision(prec), top.to_precision(prec),
                        B.to_precision(prec));
  if (len == 1) return V;

  const bool lo0 = x1.is_zero();
  const bool hi1 = x2.cmp_d(1.0) == 0;
  BigReal A = top - 1.0;
  // boundary terms x^A (1-x)^B at both endpoints, maintained multiplicatively
  BigReal w1 = (!lo0) ? exp(A * log(x1.to_precision(prec)) + B * log1p(-x1.to_precision(prec)))
                      : BigReal::zero(prec);
  BigReal w2 = (!hi1) ? exp(A * log(x2.to_precision(prec)) + B * log1p(-x2.to_precision(prec)))
                      : BigReal::zero(prec);
  BigReal L = BigReal::zero(prec), u = BigReal::zero(prec);
  const bool interior = !lo0 && !hi1;
  if (interior) {
    L = log(x2.to_precision(prec)) - log(x1.to_precision(prec));
    u = A * L + B * (log1p(-x2.to_precision(prec)) - log1p(-x1.to_precision(prec)));
  }
  for (int t = len - 2; t >= 0; --t) {
    BigReal bterm(prec);
    if (interior)
      bterm = w1 * expm1(u);
    else if (lo0 && hi1)
      bterm = BigReal::zero(prec);
    else if (lo0)
      bterm = w2;
    else
      bterm = -w1;
    V[t] = ((A + B) * V[t + 1] + bterm) / A;
    if (t > 0) {
      if (!lo0) w1 /= x1;
      if (!hi1 && lo0) w2 /= x2;
      if (interior) u -= L;
      A -= 1.0;
    }
  }
  return V;
}

}  // namespace chains

// ---------------------------------------------------------------------------
// Real white Wishart: skew kernel from the single-step recursion
//   a_{i,j+1} = a_{i,j} + C(i,j) P(alpha_i+alpha_j; a, b)
//                       - (g(alpha_j,a/2)+g(alpha_j,b/2))/Gamma(alpha_j+1)
//                         * P(alpha_i; a/2, b/2)
// with C(i,j) = Gamma(alpha_i+alpha_j) 2^{1-alpha_i-alpha_j} /
//               (Gamma(alpha_j+1) Gamma(alpha_i)), alpha_l = (m-p-1)/2 + l.
// ---------------------------------------------------------------------------
SkewKernel build_real_wishart_kernel(int p, int m, const Interval& iv, int prec, bool parallel) {
  if (p < 1 || m < p) throw std::domain_error("real Wishart kernel: requires m >= p >= 1");
  const int dim = padded_dim(p);
  SkewKernel K{p, BigMatrix(dim, prec), LogScaled()};

  const BigReal a = endpoint(iv.lo, prec), b = endpoint(iv.hi, prec);
  const BigReal ah = a / 2.0;
  const BigReal bh = b.is_inf() ? BigReal::pos_inf(prec) : b / 2.0;
  const BigReal alpha = BigReal(m - p - 1, prec) / 2.0;

  // P(2 alpha + s; a, b) for s = i+j in [2, 2p-2]
  std::vector<BigReal> Pab =
      chains::pdiff_chain(ldexp2(alpha, 1) + 2.0, std::max(0, 2 * p - 3), a, b, prec);
  // P(alpha_i; a/2, b/2) for i = 1..p
  std::vector<BigReal> Phalf = chains::pdiff_chain(alpha + 1.0, p, ah, bh, prec);

  // E[j] = (g(alpha_j, a/2) + g(alpha_j, b/2)) / Gamma(alpha_j + 1), j = 1..p-1
  std::vector<BigReal> E;
  if (p >= 2) {
    E.assign(p - 1, BigReal::zero(prec));
    BigReal a1 = alpha + 1.0;
    BigReal wa = (!ah.is_zero()) ? exp(a1 * log(ah) - ah) : BigReal::zero(prec);
    BigReal wb = (!bh.is_inf()) ? exp(a1 * log(bh) - bh) : BigReal::zero(prec);
    BigReal invG = exp(-lngamma(a1 + 1.0));
    BigReal aj = a1;
    for (int j = 1; j <= p - 1; ++j) {
      E[j - 1] = (wa + wb) * invG;
      if (j < p - 1) {
        wa *= ah;
        wb *= bh.is_inf() ? BigReal::zero(prec) : bh;
        aj += 1.0;
        invG /= aj;
      }
    }
  }

#pragma omp parallel for schedule(static) if (parallel)
  for (int i = 1; i <= p - 1; ++i) {
    BigReal ai = alpha + static_cast<double>(i);
    BigReal C = exp(lngamma(ldexp2(ai, 1)) + (1.0 - ldexp2(ai, 1)) * BigReal::ln2(prec) -
                    lngamma(ai + 1.0) - lngamma(ai));
    BigReal t = BigReal::zero(prec);
    for (int j = i; j <= p - 1; ++j) {
      t += C * Pab[i + j - 2];
      t -= E[j - 1] * Phalf[i - 1];
      K.entries.at(i - 1, j) = t;
      BigReal aj = alpha + static_cast<double>(j);
      C *= (ai + aj) / (ldexp2(aj + 1.0, 1));
    }
  }
  if (p % 2 == 1)
    for (int i = 1; i <= p; ++i) K.entries.at(i - 1, p) = Phalf[i - 1];
  antisymmetrize(K.entries);

  // K' = K 2^{alpha p + p(p+1)/2} prod_l Gamma(alpha+l),
  // K = pi^{p^2/2} / (2^{pm/2} Gamma_p(m/2) Gamma_p(p/2))
  const BigReal lnpi = log(BigReal::pi(prec));
  const BigReal ln2 = BigReal::ln2(prec);
  auto ln_gamma_p = [&](const BigReal& x) {
    BigReal s = BigReal(static_cast<long>(p) * (p - 1), prec) / 4.0 * lnpi;
    for (int i = 1; i <= p; ++i) s += lngamma(x - BigReal(i - 1, prec) / 2.0);
    return s;
  };
  BigReal lnK = BigReal(static_cast<long>(p) * p, prec) / 2.0 * lnpi -
                BigReal(static_cast<long>(p) * m, prec) / 2.0 * ln2 -
                ln_gamma_p(BigReal(m, prec) / 2.0) - ln_gamma_p(BigReal(p, prec) / 2.0);
  BigReal lnKp = lnK + (alpha * static_cast<double>(p) +
                        BigReal(static_cast<long>(p) * (p + 1), prec) / 2.0) *
                           ln2;
  for (int l = 1; l <= p; ++l) lnKp += lngamma(alpha + static_cast<double>(l));
  K.log_const = LogScaled(std::move(lnKp), +1);
  return K;
}

// ---------------------------------------------------------------------------
// GOE: skew kernel. Seed a_{1,2} in closed form, first superdiagonal by the
// zig-zag walk (skew flip + one stride-2 step), remaining entries by
//   a_{i,j+2} = a_{i,j} + G(i,j) F_{i+j}(a,b)
//                       - (q(j,a/r2)+q(j,b/r2))/(2 Gamma(j/2+1)) F_i(a/r2,b/r2)
// with G(i,j) = Gamma((i+j)/2) 2^{-(i+j)/2} / (Gamma(i/2) Gamma(j/2+1)),
// q(j,x) = x^j e^{-x^2}, F_s the normalized Gaussian half-moment integral.
// ---------------------------------------------------------------------------
SkewKernel build_goe_kernel(int n, const Interval& iv, int prec, bool parallel) {
  if (n < 1) throw std::domain_error("GOE kernel: requires n >= 1");
  const int dim = padded_dim(n);
  SkewKernel K{n, BigMatrix(dim, prec), LogScaled()};

  const BigReal a = endpoint(iv.lo, prec), b = endpoint(iv.hi, prec);
  const BigReal r2 = sqrt(BigReal(2.0, prec));
  const BigReal ah = a / r2, bh = b / r2;

  std::vector<BigReal> Fab = chains::gaussian_halfmoment_table(2, 2 * n - 2, a, b, prec);
  std::vector<BigReal> Fh = chains::gaussian_halfmoment_table(1, n, ah, bh, prec);
  auto Fab_at = [&](int s) -> const BigReal& { return Fab[s - 2]; };
  auto Fh_at = [&](int i) -> const BigReal& { return Fh[i - 1]; };

  // QW[j] = (q(j, a/r2) + q(j, b/r2)) / (2 Gamma(j/2+1)), j = 1..n-2
  std::vector<BigReal> QW;
  if (n >= 3) {
    QW.assign(n - 2, BigReal::zero(prec));
    BigReal qa = ah.is_inf() ? BigReal::zero(prec) : ah * exp(-sqr(ah));
    BigReal qb = bh.is_inf() ? BigReal::zero(prec) : bh * exp(-sqr(bh));
    BigReal ig1 = exp(-lngamma(BigReal(3, prec) / 2.0)) / 2.0;  // 1/(2 Gamma(3/2))
    BigReal ig2 = BigReal(0.5, prec);                           // 1/(2 Gamma(2))
    for (int j = 1; j <= n - 2; ++j) {
      QW[j - 1] = (qa + qb) * (j % 2 == 1 ? ig1 : ig2);
      qa *= ah.is_inf() ? BigReal::zero(prec) : ah;
      qb *= bh.is_inf() ? BigReal::zero(prec) : bh;
      if (j % 2 == 1)
        ig1 /= (BigReal(j, prec) / 2.0 + 1.0);
      else
        ig2 /= (BigReal(j, prec) / 2.0 + 1.0);
    }
  }

  const BigReal ln2 = BigReal::ln2(prec);
  auto G_direct = [&](int i, int j) {
    BigReal ij2 = BigReal(i + j, prec) / 2.0;
    return exp(lngamma(ij2) - ij2 * ln2 - lngamma(BigReal(i, prec) / 2.0) -
               lngamma(BigReal(j, prec) / 2.0 + 1.0));
  };
  auto iter = [&](int i, int j, const BigReal& prev, const BigReal& G) {
    return prev + G * Fab_at(i + j) - QW[j - 1] * Fh_at(i);
  };

  // closed-form seed and the zig-zag first superdiagonal
  std::vector<BigReal> diag1(std::max(n - 1, 0), BigReal::zero(prec));
  if (n >= 2) {
    BigReal ea = a.is_inf() ? BigReal::zero(prec) : exp(-ldexp2(sqr(a), -1));
    BigReal eb = b.is_inf() ? BigReal::zero(prec) : exp(-ldexp2(sqr(b), -1));
    BigReal seed =
        -(r2 * (erfc(b) - erfc(a)) + (ea + eb) * (erfc(ah) - erfc(bh))) / 4.0;
    diag1[0] = seed;
    for (int i = 2; i <= n - 1; ++i)
      diag1[i - 1] = iter(i, i - 1, -diag1[i - 2], G_direct(i, i - 1));
  }

#pragma omp parallel for schedule(static) if (parallel)
  for (int i = 1; i <= n - 1; ++i) {
    K.entries.at(i - 1, i) = diag1[i - 1];
    // even-offset run from a_{i,i} = 0
    {
      BigReal t = BigReal::zero(prec);
      BigReal G = G_direct(i, i);
      for (int j = i; j + 2 <= n; j += 2) {
        t = iter(i, j, t, G);
        K.entries.at(i - 1, j + 1) = t;
        G *= BigReal(i + j, prec) / (2.0 * (j + 2));
      }
    }
    // odd-offset run from a_{i,i+1}
    if (i + 1 <= n) {
      BigReal t = diag1[i - 1];
      BigReal G = G_direct(i, i + 1);
      for (int j = i + 1; j + 2 <= n; j += 2) {
        t = iter(i, j, t, G);
        K.entries.at(i - 1, j + 1) = t;
        G *= BigReal(i + j, prec) / (2.0 * (j + 2));
      }
    }
  }
  if (n % 2 == 1)
    for (int i = 1; i <= n; ++i) K.entries.at(i - 1, n) = Fh_at(i);
  antisymmetrize(K.entries);

  // K'_GOE = K_GOE 2^{n(n+1)/4} prod_l Gamma(l/2), K_GOE = (2^{n/2} prod_l Gamma(l/2))^{-1}
  BigReal lnKp = BigReal(static_cast<long>(n) * (n + 1), prec) / 4.0 * ln2 -
                 BigReal(n, prec) / 2.0 * ln2;
  K.log_const = LogScaled(std::move(lnKp), +1);
  return K;
}

// ---------------------------------------------------------------------------
// Real multivariate beta: skew kernel from
//   a_{i,j+1} = a_{i,j} - k_i (g_{j+1}(a)+g_{j+1}(b)) B(a,b; m+i, n+1)
//                       + 2 k_i k_{j+1}/(m+n+j+1) B(a,b; 2m+i+j, 2n+2)
// with k_l = Gamma(m+n+l+1)/Gamma(m+l),
//      g_l(x) = x^{m+l-1} (1-x)^{n+1} k_l/(m+n+l).
// ---------------------------------------------------------------------------
SkewKernel build_real_beta_kernel(int s, double m, double n, const Interval& iv, int prec,
                                  bool parallel) {
  if (s < 1 || !(m >= 0) || !(n >= 0))
    throw std::domain_error("beta kernel: requires s >= 1 and exponents >= 0");
  const int p = s;
  const int dim = padded_dim(p);
  SkewKernel K{p, BigMatrix(dim, prec), LogScaled()};

  const BigReal a = endpoint(iv.lo, prec), b = endpoint(iv.hi, prec);
  const BigReal mB(m, prec), nB(n, prec);

  // B(a,b; m+i, n+1), i = 1..p and B(a,b; 2m+s, 2n+2), s = i+j in [2, 2p-2]
  std::vector<BigReal> Bab = chains::beta_chain(mB + 1.0, p, nB + 1.0, a, b, prec);
  std::vector<BigReal> Bab2 = chains::beta_chain(ldexp2(mB, 1) + 2.0, std::max(0, 2 * p - 3),
                                                 ldexp2(nB, 1) + 2.0, a, b, prec);

  // k_l ladder, l = 1..p
  std::vector<BigReal> kl(p + 1, BigReal::zero(prec));
  kl[1] = exp(lngamma(mB + nB + 2.0) - lngamma(mB + 1.0));
  for (int l = 1; l < p; ++l)
    kl[l + 1] = kl[l] * ((mB + nB + static_cast<double>(l + 1)) / (mB + static_cast<double>(l)));

  // GS[j] = g_{j+1}(a) + g_{j+1}(b) and H[j] = 2 k_{j+1}/(m+n+j+1), j = 1..p-1
  std::vector<BigReal> GS, H;
  if (p >= 2) {
    GS.assign(p - 1, BigReal::zero(prec));
    H.assign(p - 1, BigReal::zero(prec));
    auto g_seed = [&](const BigReal& x) {
      if (x.is_zero() || x.cmp_d(1.0) == 0) return BigReal::zero(prec);
      return exp((mB + 1.0) * log(x) + (nB + 1.0) * log1p(-x)) * kl[2] / (mB + nB + 2.0);
    };
    BigReal ga = g_seed(a), gb = g_seed(b);
    for (int j = 1; j <= p - 1; ++j) {
      GS[j - 1] = ga + gb;
      H[j - 1] = ldexp2(kl[j + 1], 1) / (mB + nB + static_cast<double>(j + 1));
      if (j < p - 1) {
        // g_{l+1}(x) = g_l(x) * x * (m+n+l)/(m+l) with l = j+1
        BigReal f = (mB + nB + static_cast<double>(j + 1)) / (mB + static_cast<double>(j + 1));
        ga *= a * f;
        gb *= b * f;
      }
    }
  }

#pragma omp parallel for schedule(static) if (parallel)
  for (int i = 1; i <= p - 1; ++i) {
    BigReal R = kl[i] * Bab[i - 1];
    BigReal t = BigReal::zero(prec);
    for (int j = i; j <= p - 1; ++j) {
      t -= GS[j - 1] * R;
      t += kl[i] * (H[j - 1] * Bab2[i + j - 2]);
      K.entries.at(i - 1, j) = t;
    }
  }
  if (p % 2 == 1)
    for (int i = 1; i <= p; ++i) K.entries.at(i - 1, p) = kl[i] * Bab[i - 1];
  antisymmetrize(K.entries);

  // K'_MB = K_MB prod_l Gamma(m+l)/Gamma(m+l+n+1), K_MB from the joint density
  const BigReal lnpi = log(BigReal::pi(prec));
  BigReal lnKp = BigReal(p, prec) / 2.0 * lnpi;
  for (int i = 1; i <= p; ++i) {
    BigReal id(i, prec);
    lnKp += lngamma((id + ldexp2(mB, 1) + ldexp2(nB, 1) + static_cast<double>(p + 2)) / 2.0) -
            lngamma(id / 2.0) - lngamma((id + ldexp2(mB, 1) + 1.0) / 2.0) -
            lngamma((id + ldexp2(nB, 1) + 1.0) / 2.0);
  }
  for (int l = 1; l <= p; ++l)
    lnKp += lngamma(mB + static_cast<double>(l)) -
            lngamma(mB + nB + static_cast<double>(l + 1));
  K.log_const = LogScaled(std::move(lnKp), +1);
  return K;
}

// ---------------------------------------------------------------------------
// Complex kernels (general determinants).
// ---------------------------------------------------------------------------

// Uncorrelated: a_{i,j} = gamma(m+p-i-j+1; a, b), psi = det/prod (m-i)!(p-i)!.
DetKernel build_complex_white_kernel(int p, int m, const Interval& iv, int prec, bool parallel) {
  if (p < 1 || m < p) throw std::domain_error("complex Wishart kernel: requires m >= p >= 1");
  DetKernel K{BigMatrix(p, prec), LogScaled()};
  const BigReal a = endpoint(iv.lo, prec), b = endpoint(iv.hi, prec);

  // nu = m+p-i-j+1 ranges over [m-p+1, m+p-1]
  std::vector<BigReal> D = chains::pdiff_chain(BigReal(m - p + 1, prec), 2 * p - 1, a, b, prec);
  std::vector<BigReal> gam(2 * p - 1, BigReal::zero(prec));
  for (int t = 0; t < 2 * p - 1; ++t) gam[t] = exp(lngamma(BigReal(m - p + 1 + t, prec)));

#pragma omp parallel for schedule(static) if (parallel)
  for (int i = 1; i <= p; ++i)
    for (int j = 1; j <= p; ++j) {
      int t = 2 * p - i - j;  // nu - (m-p+1)
      K.entries.at(i - 1, j - 1) = gam[t] * D[t];
    }

  BigReal lnK = BigReal::zero(prec);
  for (int i = 1; i <= p; ++i)
    lnK -= lngamma(BigReal(m - i + 1, prec)) + lngamma(BigReal(p - i + 1, prec));
  K.log_const = LogScaled(std::move(lnK), +1);
  return K;
}

// Correlated with distinct covariance eigenvalues:
// a_{i,j} = sigma_j^{m-i+1} gamma(m-i+1; a/sigma_j, b/sigma_j).
DetKernel build_complex_correlated_kernel(int m, const std::vector<double>& sigma,
                                          const Interval& iv, int prec, bool parallel) {
  const int p = static_cast<int>(sigma.size());
  if (p < 1 || m < p) throw std::domain_error("complex Wishart kernel: requires m >= p >= 1");
  DetKernel K{BigMatrix(p, prec), LogScaled()};
  const BigReal a = endpoint(iv.lo, prec), b = endpoint(iv.hi, prec);

  std::vector<BigReal> gam(p, BigReal::zero(prec));  // Gamma(m-i+1), i=1..p
  for (int i = 1; i <= p; ++i) gam[i - 1] = exp(lngamma(BigReal(m - i + 1, prec)));

#pragma omp parallel for schedule(static) if (parallel)
  for (int j = 1; j <= p; ++j) {
    BigReal sj(sigma[j - 1], prec);
    std::vector<BigReal> D =
        chains::pdiff_chain(BigReal(m - p + 1, prec), p, a / sj, b / sj, prec);
    BigReal sp = exp(BigReal(m, prec) * log(sj));  // sigma_j^{m-i+1}, i = 1
    for (int i = 1; i <= p; ++i) {
      K.entries.at(i - 1, j - 1) = sp * gam[i - 1] * D[p - i];
      if (i < p) sp /= sj;
    }
  }

  BigReal lnK = BigReal::zero(prec);
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j)
      lnK -= log(BigReal(sigma[i], prec) - BigReal(sigma[j], prec));
  for (int i = 1; i <= p; ++i)
    lnK -= BigReal(m - p + 1, prec) * log(BigReal(sigma[i - 1], prec)) +
           lngamma(BigReal(m - i + 1, prec));
  K.log_const = LogScaled(std::move(lnK), +1);
  return K;
}

// Spiked covariance (sigma1 spike, sigma2 bulk):
// column 1 follows sigma1, columns 2..p follow sigma2 with descending powers.
DetKernel build_complex_spiked_kernel(int p, int m, double sigma1, double sigma2,
                                      const Interval& iv, int prec, bool parallel) {
  if (p < 2 || m < p)
    throw std::domain_error("spiked kernel: requires m >= p >= 2");
  if (!(sigma2 > 0) || !(sigma1 > sigma2))
    throw std::domain_error("spiked kernel: requires sigma1 > sigma2 > 0");
  DetKernel K{BigMatrix(p, prec), LogScaled()};
  const BigReal a = endpoint(iv.lo, prec), b = endpoint(iv.hi, prec);
  const BigReal s1(sigma1, prec), s2(sigma2, prec);

  std::vector<BigReal> D1 = chains::pdiff_chain(BigReal(m - p + 1, prec), p, a / s1, b / s1, prec);
  // nu = m+p-i-j+1 for j >= 2 ranges over [m-p+1, m+p-2]
  std::vector<BigReal> D2 =
      chains::pdiff_chain(BigReal(m - p + 1, prec), 2 * p - 2, a / s2, b / s2, prec);
  std::vector<BigReal> gam(2 * p - 1, BigReal::zero(prec));
  for (int t = 0; t < 2 * p - 1; ++t) gam[t] = exp(lngamma(BigReal(m - p + 1 + t, prec)));
  std::vector<BigReal> s2pow(2 * p - 1, BigReal::zero(prec));  // sigma2^{m-p+1+t}
  s2pow[0] = exp(BigReal(m - p + 1, prec) * log(s2));
  for (int t = 1; t < 2 * p - 1; ++t) s2pow[t] = s2pow[t - 1] * s2;

#pragma omp parallel for schedule(static) if (parallel)
  for (int i = 1; i <= p; ++i) {
    BigReal s1p = exp(BigReal(m - i + 1, prec) * log(s1));
    K.entries.at(i - 1, 0) = s1p * gam[p - i] * D1[p - i];
    for (int j = 2; j <= p; ++j) {
      int t = 2 * p - i - j;  // nu - (m-p+1)
      K.entries.at(i - 1, j - 1) = s2pow[t] * gam[t] * D2[t];
    }
  }

  BigReal lnK = -(BigReal(m - p + 1, prec) * log(s1) +
                  BigReal(static_cast<long>(m - 1) * (p - 1), prec) * log(s2) +
                  BigReal(p - 1, prec) * log(s1 - s2));
  for (int i = 1; i <= p; ++i) lnK -= lngamma(BigReal(m - i + 1, prec));
  for (int l = 2; l <= p - 2; ++l) lnK -= lngamma(BigReal(l + 1, prec));
  K.log_const = LogScaled(std::move(lnK), +1);
  return K;
}

// Complex multivariate beta: a_{i,j} = B(a,b; m+i+j-1, n+1).
DetKernel build_complex_beta_kernel(int s, double m, double n, const Interval& iv, int prec,
                                    bool parallel) {
  if (s < 1 || !(m >= 0) || !(n >= 0))
    throw std::domain_error("complex beta kernel: requires s >= 1 and exponents >= 0");
  DetKernel K{BigMatrix(s, prec), LogScaled()};
  const BigReal a = endpoint(iv.lo, prec), b = endpoint(iv.hi, prec);
  const BigReal mB(m, prec), nB(n, prec);

  std::vector<BigReal> BC = chains::beta_chain(mB + 1.0, 2 * s - 1, nB + 1.0, a, b, prec);

#pragma omp parallel for schedule(static) if (parallel)
  for (int i = 1; i <= s; ++i)
    for (int j = 1; j <= s; ++j) K.entries.at(i - 1, j - 1) = BC[i + j - 2];

  BigReal lnK = BigReal::zero(prec);
  for (int i = 1; i <= s; ++i)
    lnK += lngamma(mB + nB + static_cast<double>(s + i)) - lngamma(BigReal(i, prec)) -
           lngamma(mB + static_cast<double>(i)) - lngamma(nB + static_cast<double>(i));
  K.log_const = LogScaled(std::move(lnK), +1);
  return K;
}

// GUE: a_{i,j} = int_a^b t^{i+j-2} e^{-t^2} dt = Gamma(s/2) T[s], s = i+j-1.
DetKernel build_gue_kernel(int n, const Interval& iv, int prec, bool parallel) {
  if (n < 1) throw std::domain_error("GUE kernel: requires n >= 1");
  DetKernel K{BigMatrix(n, prec), LogScaled()};
  const BigReal a = endpoint(iv.lo, prec), b = endpoint(iv.hi, prec);

  std::vector<BigReal> T = chains::gaussian_halfmoment_table(1, 2 * n - 1, a, b, prec);
  std::vector<BigReal> gam(2 * n - 1, BigReal::zero(prec));
  for (int s = 1; s <= 2 * n - 1; ++s) gam[s - 1] = exp(lngamma(BigReal(s, prec) / 2.0));

#pragma omp parallel for schedule(static) if (parallel)
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      int s = i + j - 1;
      K.entries.at(i - 1, j - 1) = gam[s - 1] * T[s - 1];
    }

  BigReal lnK = BigReal(static_cast<long>(n) * (n - 1), prec) / 2.0 * BigReal::ln2(prec) -
                BigReal(n, prec) / 2.0 * log(BigReal::pi(prec));
  for (int i = 1; i <= n; ++i) lnK -= lngamma(BigReal(i, prec));
  K.log_const = LogScaled(std::move(lnK), +1);
  return K;
}

}  // namespace eigenband
