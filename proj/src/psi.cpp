#include "eigenband/psi.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "eigenband/kernels.hpp"
#include "eigenband/linalg.hpp"

namespace eigenband {

namespace {

constexpr int kPrecisionCapBits = 8192;
constexpr double kAgreeRel = 1e-12;

int default_start_bits(int p) { return std::max(256, 12 * p); }

double big_log10(const BigReal& lv) {
  if (lv.is_inf()) return lv.sign() < 0 ? -HUGE_VAL : HUGE_VAL;
  return (lv / log(BigReal(10.0, std::max(64, lv.precision())))).to_double();
}

bool logs_agree(const BigReal& l1, const BigReal& l2, int base_prec) {
  if (l1.is_inf() && l2.is_inf()) return l1.sign() == l2.sign();
  if (l1.is_inf() || l2.is_inf()) return false;
  BigReal diff = abs(l1 - l2);
  BigReal scale = max(abs(l1), abs(l2));
  // absolute floor: for psi == 1 both logs are pure rounding noise around 0
  BigReal floor_tol = ldexp2(BigReal::one(64), -base_prec / 2);
  return diff <= max(scale * kAgreeRel, floor_tol);
}

PsiResult make_result(BigReal log_psi, int bits, bool converged) {
  PsiResult r;
  r.value = exp(log_psi).to_double();
  if (r.value > 1.0) r.value = 1.0;  // rounding guard; log_value is authoritative
  r.log_value = std::move(log_psi);
  r.precision_bits_used = bits;
  r.converged = converged;
  return r;
}

// Evaluation ladder: compute log psi at q and 2q, accept on agreement,
// otherwise double until the base exceeds the cap.
PsiResult run_adaptive(int dim_p, const PsiOptions& opts,
                       const std::function<BigReal(int)>& eval_log_psi) {
  int q = opts.precision_bits > 0 ? std::max(opts.precision_bits, BigReal::kMinPrecision)
                                  : default_start_bits(dim_p);
  BigReal prev = eval_log_psi(q);
  for (;;) {
    BigReal cur = eval_log_psi(2 * q);
    if (logs_agree(prev, cur, q)) return make_result(std::move(cur), 2 * q, true);
    if (2 * q > kPrecisionCapBits) return make_result(std::move(cur), 2 * q, false);
    prev = std::move(cur);
    q *= 2;
  }
}

struct ClampedInterval {
  Interval iv;
  bool degenerate;
};

ClampedInterval prepare_interval(const EnsembleSpec& spec, const Interval& iv) {
  Interval c = iv.clamped_to(support(spec));
  return {c, c.degenerate()};
}

PsiResult zero_result(int p, const PsiOptions& opts) {
  int q = opts.precision_bits > 0 ? std::max(opts.precision_bits, BigReal::kMinPrecision)
                                  : default_start_bits(p);
  PsiResult r;
  r.value = 0.0;
  r.log_value = BigReal::neg_inf(q);
  r.precision_bits_used = q;
  r.converged = true;
  return r;
}

BigReal log_psi_skew(SkewKernel&& K) {
  LogScaled half_logdet = log_sqrt_det_skew(K.entries);
  if (half_logdet.is_zero() || K.log_const.is_zero())
    return BigReal::neg_inf(K.log_const.log_magnitude.precision());
  return K.log_const.log_magnitude + half_logdet.log_magnitude;
}

// det kernels: a negative determinant beyond elimination noise means the
// kernel assembly is wrong; tiny negatives (relative to the Hadamard scale)
// are rounding residue of a true zero.
BigReal log_psi_det(DetKernel&& K, const char* what) {
  const int prec = K.log_const.log_magnitude.precision();
  BigReal hadamard = log_det_hadamard_bound(K.entries);
  LogScaled det = log_det_lu(K.entries);
  if (det.is_zero()) return BigReal::neg_inf(prec);
  if (det.sign < 0) {
    BigReal noise_floor = hadamard - BigReal(0.25 * prec, prec) * BigReal::ln2(prec);
    if (det.log_magnitude <= noise_floor) return BigReal::neg_inf(prec);
    throw internal_consistency_error(std::string(what) +
                                     ": kernel determinant is negative beyond rounding noise");
  }
  return K.log_const.log_magnitude + det.log_magnitude;
}

}  // namespace

double PsiResult::log10_value() const { return big_log10(log_value); }

PsiResult psi_real_wishart(int p, int m, const Interval& iv, const PsiOptions& opts) {
  EnsembleSpec spec = EnsembleSpec::real_wishart(p, m);
  auto [civ, degen] = prepare_interval(spec, iv);
  if (degen) return zero_result(p, opts);
  return run_adaptive(p, opts, [&](int prec) {
    return log_psi_skew(build_real_wishart_kernel(p, m, civ, prec, opts.parallel));
  });
}

PsiResult psi_goe(int n, const Interval& iv, const PsiOptions& opts) {
  EnsembleSpec spec = EnsembleSpec::goe(n);
  auto [civ, degen] = prepare_interval(spec, iv);
  if (degen) return zero_result(n, opts);
  return run_adaptive(n, opts, [&](int prec) {
    return log_psi_skew(build_goe_kernel(n, civ, prec, opts.parallel));
  });
}

PsiResult psi_real_beta(int s, double m, double n_beta, const Interval& iv,
                        const PsiOptions& opts) {
  EnsembleSpec spec = EnsembleSpec::real_beta(s, m, n_beta);
  auto [civ, degen] = prepare_interval(spec, iv);
  if (degen) return zero_result(s, opts);
  return run_adaptive(s, opts, [&](int prec) {
    return log_psi_skew(build_real_beta_kernel(s, m, n_beta, civ, prec, opts.parallel));
  });
}

PsiResult psi_complex_wishart_white(int p, int m, const Interval& iv, const PsiOptions& opts) {
  EnsembleSpec spec = EnsembleSpec::complex_wishart_white(p, m);
  auto [civ, degen] = prepare_interval(spec, iv);
  if (degen) return zero_result(p, opts);
  return run_adaptive(p, opts, [&](int prec) {
    return log_psi_det(build_complex_white_kernel(p, m, civ, prec, opts.parallel),
                       "complex white Wishart");
  });
}

PsiResult psi_complex_wishart_correlated(int m, const std::vector<double>& sigma,
                                         const Interval& iv, const PsiOptions& opts) {
  EnsembleSpec spec = EnsembleSpec::complex_wishart_correlated(m, sigma);
  const int p = spec.p;
  auto [civ, degen] = prepare_interval(spec, iv);
  if (degen) return zero_result(p, opts);

  // Nearly degenerate covariance spectra cancel ~log2(sigma_1/gap) bits per
  // close pair in the determinant; widen the starting precision to cover it.
  int extra = 0;
  double min_rel_gap = HUGE_VAL;
  for (size_t i = 0; i + 1 < sigma.size(); ++i)
    min_rel_gap = std::min(min_rel_gap, (sigma[i] - sigma[i + 1]) / sigma[0]);
  if (p >= 2 && min_rel_gap < 1e-3) {
    double bits = 0;
    for (size_t i = 0; i < sigma.size(); ++i)
      for (size_t j = i + 1; j < sigma.size(); ++j)
        bits += std::max(0.0, std::log2(sigma[0] / (sigma[i] - sigma[j])));
    extra = static_cast<int>(2 * bits) + 64;
  }
  PsiOptions widened = opts;
  widened.precision_bits =
      (opts.precision_bits > 0 ? opts.precision_bits : default_start_bits(p)) + extra;
  return run_adaptive(p, widened, [&](int prec) {
    return log_psi_det(build_complex_correlated_kernel(m, sigma, civ, prec, opts.parallel),
                       "complex correlated Wishart");
  });
}

PsiResult psi_complex_wishart_spiked(int p, int m, double sigma1, double sigma2,
                                     const Interval& iv, const PsiOptions& opts) {
  EnsembleSpec spec = EnsembleSpec::complex_wishart_spiked(p, m, sigma1, sigma2);
  auto [civ, degen] = prepare_interval(spec, iv);
  if (degen) return zero_result(p, opts);
  return run_adaptive(p, opts, [&](int prec) {
    // The spiked normalizing constant is validated on every evaluation by
    // recomputing psi over the full support; a mismatch is reported, never
    // silently rescaled away.
    Interval full = support(spec);
    BigReal log_norm = log_psi_det(
        build_complex_spiked_kernel(p, m, sigma1, sigma2, full, prec, opts.parallel),
        "spiked complex Wishart");
    if (abs(expm1(log_norm)).cmp_d(1e-9) > 0)
      throw internal_consistency_error(
          "spiked complex Wishart: full-support probability deviates from 1 by more than "
          "1e-9; normalizing constant and kernel disagree (|psi(full)-1| = " +
          abs(expm1(log_norm)).str(3) + ")");
    return log_psi_det(build_complex_spiked_kernel(p, m, sigma1, sigma2, civ, prec, opts.parallel),
                       "spiked complex Wishart");
  });
}

PsiResult psi_complex_beta(int s, double m, double n_beta, const Interval& iv,
                           const PsiOptions& opts) {
  EnsembleSpec spec = EnsembleSpec::complex_beta(s, m, n_beta);
  auto [civ, degen] = prepare_interval(spec, iv);
  if (degen) return zero_result(s, opts);
  return run_adaptive(s, opts, [&](int prec) {
    return log_psi_det(build_complex_beta_kernel(s, m, n_beta, civ, prec, opts.parallel),
                       "complex beta");
  });
}

PsiResult psi_gue(int n, const Interval& iv, const PsiOptions& opts) {
  EnsembleSpec spec = EnsembleSpec::gue(n);
  auto [civ, degen] = prepare_interval(spec, iv);
  if (degen) return zero_result(n, opts);
  return run_adaptive(n, opts, [&](int prec) {
    return log_psi_det(build_gue_kernel(n, civ, prec, opts.parallel), "GUE");
  });
}

PsiResult psi(const EnsembleSpec& spec, const Interval& iv, const PsiOptions& opts) {
  spec.validate();
  switch (spec.kind) {
    case Kind::RealWishart:
      return psi_real_wishart(spec.p, spec.m, iv, opts);
    case Kind::GOE:
      return psi_goe(spec.p, iv, opts);
    case Kind::RealBeta:
      return psi_real_beta(spec.p, spec.beta_m, spec.beta_n, iv, opts);
    case Kind::ComplexWishartWhite:
      return psi_complex_wishart_white(spec.p, spec.m, iv, opts);
    case Kind::ComplexWishartCorrelated:
      return psi_complex_wishart_correlated(spec.m, spec.sigma, iv, opts);
    case Kind::ComplexWishartSpiked:
      return psi_complex_wishart_spiked(spec.p, spec.m, spec.sigma1, spec.sigma2, iv, opts);
    case Kind::ComplexBeta:
      return psi_complex_beta(spec.p, spec.beta_m, spec.beta_n, iv, opts);
    case Kind::GUE:
      return psi_gue(spec.p, iv, opts);
  }
  throw std::logic_error("psi: unknown ensemble kind");
}

PsiResult cdf_largest(const EnsembleSpec& spec, double b, const PsiOptions& opts) {
  Interval sup = support(spec);
  return psi(spec, Interval(sup.lo, b), opts);
}

PsiResult cdf_smallest(const EnsembleSpec& spec, double a, const PsiOptions& opts) {
  Interval sup = support(spec);
  PsiResult tail = psi(spec, Interval(a, sup.hi), opts);
  PsiResult r;
  BigReal cdf = -expm1(tail.log_value);  // 1 - psi, exact near psi = 1
  r.value = cdf.to_double();
  r.log_value = cdf.is_zero() ? BigReal::neg_inf(tail.log_value.precision()) : log(cdf);
  r.precision_bits_used = tail.precision_bits_used;
  r.converged = tail.converged;
  return r;
}

}  // namespace eigenband
