#include "eigenband/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

#include "eigenband/special.hpp"

namespace eigenband {

namespace {

constexpr int kDoublePrec = 128;  // plenty for double-precision results

double reg_p(double k, double x) {
  if (x <= 0) return 0.0;
  return reg_lower_gamma(BigReal(k, kDoublePrec), BigReal(x, kDoublePrec)).to_double();
}

bool approx_supported(const EnsembleSpec& spec) {
  return spec.kind == Kind::RealWishart || spec.kind == Kind::ComplexWishartWhite ||
         spec.kind == Kind::GOE || spec.kind == Kind::GUE;
}

int tw_order(const EnsembleSpec& spec) {
  return (spec.kind == Kind::ComplexWishartWhite || spec.kind == Kind::GUE) ? 2 : 1;
}

constexpr double kSigma0 = M_SQRT1_2;

}  // namespace

TWGammaParams tw_gamma_params(int beta) {
  switch (beta) {
    case 1: return {1, 46.446, 0.186054, 9.84801};
    case 2: return {2, 79.6595, 0.101037, 9.81961};
    case 4: return {4, 146.021, 0.0595445, 11.0016};
  }
  throw std::domain_error("tw_gamma_params: beta must be 1, 2 or 4");
}

double tw_cdf(int beta, double x) {
  TWGammaParams par = tw_gamma_params(beta);
  double shifted = x + par.alpha;
  if (shifted <= 0) return 0.0;  // positive-part clamp
  return reg_p(par.k, shifted / par.theta);
}

EdgeScaling edge_scaling(const EnsembleSpec& spec) {
  spec.validate();
  if (spec.kind == Kind::RealWishart || spec.kind == Kind::ComplexWishartWhite) {
    if (spec.m <= spec.p)
      throw std::domain_error("edge_scaling: smallest-eigenvalue scaling needs m > p");
    double sm = std::sqrt(static_cast<double>(spec.m));
    double sp = std::sqrt(static_cast<double>(spec.p));
    EdgeScaling e;
    e.mu_plus = (sm + sp) * (sm + sp);
    e.sigma_plus = std::sqrt(e.mu_plus) * std::cbrt(1.0 / sp + 1.0 / sm);
    e.mu_minus = (sm - sp) * (sm - sp);
    e.sigma_minus = std::sqrt(e.mu_minus) * std::cbrt(1.0 / sp - 1.0 / sm);
    return e;
  }
  if (spec.is_gaussian()) {
    double n = spec.p;
    EdgeScaling e;
    e.mu_plus = 2.0 * kSigma0 * std::sqrt(n);
    e.mu_minus = -e.mu_plus;
    e.sigma_plus = e.sigma_minus = kSigma0 * std::pow(n, -1.0 / 6.0);
    return e;
  }
  throw std::domain_error("edge_scaling: supported for white Wishart, GOE and GUE only");
}

double psi_approx(const EnsembleSpec& spec, const Interval& iv) {
  spec.validate();
  if (!approx_supported(spec))
    throw std::domain_error(
        "psi_approx: supported for white Wishart, GOE and GUE only (correlated, spiked and "
        "beta kinds have no edge surrogate here)");
  Interval civ = iv.clamped_to(support(spec));
  const int beta = tw_order(spec);
  const bool wishart = spec.is_wishart();

  double upper = 1.0, lower = 1.0;
  if (!civ.hi_infinite()) {
    EdgeScaling e = edge_scaling(spec);
    upper = tw_cdf(beta, (civ.hi - e.mu_plus) / e.sigma_plus);
  }
  const bool lower_vacuous = wishart ? (civ.lo <= 0.0) : civ.lo_infinite();
  if (!lower_vacuous) {
    EdgeScaling e = edge_scaling(spec);
    lower = tw_cdf(beta, -(civ.lo - e.mu_minus) / e.sigma_minus);
  }
  return upper * lower;
}

Interval mp_support(int p, int m) {
  if (p < 1 || m < p) throw std::domain_error("mp_support: requires m >= p >= 1");
  double sm = std::sqrt(static_cast<double>(m));
  double sp = std::sqrt(static_cast<double>(p));
  return Interval((sm - sp) * (sm - sp), (sm + sp) * (sm + sp));
}

Interval semicircle_support(int n) {
  if (n < 1) throw std::domain_error("semicircle_support: requires n >= 1");
  double edge = std::sqrt(2.0 * n);
  return Interval(-edge, edge);
}

double edge_prob_limit(FieldCase field) {
  double f0 = tw_cdf(field == FieldCase::Real ? 1 : 2, 0.0);
  return f0 * f0;
}

double deviation_prob_exceedance(int beta, double t) {
  double f = tw_cdf(beta, t);
  return (1.0 - f) * (1.0 - f);
}

double deviation_prob_containment(int beta, double t) {
  double f = tw_cdf(beta, t);
  return f * f;
}

double goe_negativity_approx(int n, GoeNegativityVariant variant) {
  if (n < 1) throw std::domain_error("goe_negativity_approx: requires n >= 1");
  double nn = static_cast<double>(n);
  double lp = -nn * nn * std::log(3.0) / 4.0;
  if (variant == GoeNegativityVariant::Corrected) lp -= nn * std::log(10.0) / 6.0;
  return lp;
}

std::vector<CsBoundsRow> cs_concentration_bounds(int s, int m, const std::vector<double>& t_grid,
                                                 const PsiOptions& opts) {
  if (s < 1 || m < s) throw std::domain_error("cs_concentration_bounds: requires m >= s >= 1");
  EnsembleSpec spec = EnsembleSpec::real_wishart(s, m);
  EdgeScaling e = edge_scaling(spec);
  const double sm = std::sqrt(static_cast<double>(m));
  const double ss = std::sqrt(static_cast<double>(s));
  const double ln10 = std::log(10.0);

  std::vector<CsBoundsRow> rows;
  rows.reserve(t_grid.size());
  for (double t : t_grid) {
    if (!(t > 0)) throw std::domain_error("cs_concentration_bounds: t grid must be positive");
    CsBoundsRow r{};
    r.t = t;
    double root_up = sm + ss + t * sm;
    double root_lo = sm - ss - t * sm;
    r.threshold_upper = root_up * root_up;
    r.tail_bound = std::exp(-0.5 * m * t * t);

    PsiResult up = psi(spec, Interval(0.0, r.threshold_upper), opts);
    BigReal up_tail = -expm1(up.log_value);
    r.exact_upper = up_tail.to_double();
    r.log10_exact_upper =
        up_tail.is_zero() ? -HUGE_VAL : (log(up_tail) / std::log(10.0)).to_double();
    r.approx_upper = 1.0 - tw_cdf(1, (r.threshold_upper - e.mu_plus) / e.sigma_plus);

    if (root_lo > 0) {
      r.threshold_lower = root_lo * root_lo;
      PsiResult lo =
          psi(spec, Interval(r.threshold_lower, std::numeric_limits<double>::infinity()), opts);
      BigReal lo_tail = -expm1(lo.log_value);
      r.exact_lower = lo_tail.to_double();
      r.log10_exact_lower =
          lo_tail.is_zero() ? -HUGE_VAL : (log(lo_tail) / ln10).to_double();
      r.approx_lower = 1.0 - tw_cdf(1, -(r.threshold_lower - e.mu_minus) / e.sigma_minus);
    } else {
      // the lower deviation event is empty once the threshold root is negative
      r.threshold_lower = 0.0;
      r.exact_lower = 0.0;
      r.log10_exact_lower = -HUGE_VAL;
      r.approx_lower = 0.0;
    }
    rows.push_back(r);
  }
  return rows;
}

}  // namespace eigenband
