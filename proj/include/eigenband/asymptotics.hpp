#ifndef EIGENBAND_ASYMPTOTICS_HPP
#define EIGENBAND_ASYMPTOTICS_HPP

#include <vector>

#include "eigenband/ensemble.hpp"
#include "eigenband/psi.hpp"

namespace eigenband {

// Gamma surrogate for the Tracy-Widom law of order beta:
// TW_beta ~ Gamma(k, theta) - alpha, so F_beta(x) ~ P(k, ((x+alpha)^+)/theta).
struct TWGammaParams {
  int beta;      // 1, 2 or 4
  double k;      // shape
  double theta;  // scale
  double alpha;  // shift
};

// The fixed parameter table; beta must be 1, 2 or 4.
TWGammaParams tw_gamma_params(int beta);

// Surrogate CDF of TW_beta at x (clamped to 0 below -alpha).
double tw_cdf(int beta, double x);

// Centering/scaling constants of the extreme eigenvalues.
//   Wishart: mu+ = (sqrt m + sqrt p)^2, sigma+ = sqrt(mu+)(1/sqrt p + 1/sqrt m)^(1/3)
//            mu- = (sqrt m - sqrt p)^2, sigma- = sqrt(mu-)(1/sqrt p - 1/sqrt m)^(1/3)
//   GOE/GUE: mu+ = 2 sigma0 sqrt n, mu- = -mu+, sigma+- = sigma0 n^(-1/6)
// with sigma0 = 1/sqrt 2, the value for which mu+ meets the semicircle edge
// sqrt(2n) under the variance convention used by these ensembles.
struct EdgeScaling {
  double mu_plus, sigma_plus;
  double mu_minus, sigma_minus;
};

// Requires a white Wishart kind with m > p, or GOE/GUE.
EdgeScaling edge_scaling(const EnsembleSpec& spec);

// Large-matrix approximation psi(a,b) ~ F_beta((b-mu+)/sigma+) *
// F_beta(-(a-mu-)/sigma-) through the gamma surrogate. Sides that sit at the
// support edge (or at infinity) contribute a factor 1. White Wishart, GOE
// and GUE only.
double psi_approx(const EnsembleSpec& spec, const Interval& iv);

// Limiting bulk supports.
Interval mp_support(int p, int m);        // [(sqrt m - sqrt p)^2, (sqrt m + sqrt p)^2]
Interval semicircle_support(int n);       // [-sqrt(2n), sqrt(2n)]

// Limiting probability that all eigenvalues sit inside the bulk support,
// F_beta(0)^2 computed through the gamma surrogate (~0.691 real, ~0.9398
// complex; the exact Tracy-Widom values are 0.6921 and 0.9397).
enum class FieldCase { Real, Complex };
double edge_prob_limit(FieldCase field);
constexpr double kEdgeProbLimitRealExact = 0.6921;
constexpr double kEdgeProbLimitComplexExact = 0.9397;

// Symmetric-deviation probabilities for psi(mu- - t sigma-, mu+ + t sigma+):
// the exceedance form (1-F_beta(t))^2 and the containment form F_beta(t)^2.
// Both are exposed; they answer different questions about the same display.
double deviation_prob_exceedance(int beta, double t);
double deviation_prob_containment(int beta, double t);

// Log-domain approximations to the GOE all-eigenvalues-negative probability:
//   basic      ln psi ~ -n^2 ln(3)/4
//   corrected  ln psi ~ -n^2 ln(3)/4 - n ln(10)/6
enum class GoeNegativityVariant { Basic, Corrected };
double goe_negativity_approx(int n, GoeNegativityVariant variant);

// Concentration-inequality bounds against exact and surrogate tails for
// M ~ W_s(m, I) (real). For each t the thresholds are
//   upper: (sqrt m + sqrt s + t sqrt m)^2, lower: (sqrt m - sqrt s - t sqrt m)^2,
// both tails bounded by e^{-m t^2/2}. When sqrt m - sqrt s - t sqrt m < 0 the
// lower-tail event is empty and its exact/surrogate probabilities are 0.
struct CsBoundsRow {
  double t;
  double threshold_upper, threshold_lower;
  double tail_bound;                  // e^{-m t^2 / 2}
  double exact_upper, exact_lower;    // Pr(lmax > thr_u), Pr(lmin < thr_l)
  double approx_upper, approx_lower;  // gamma-surrogate tails
  double log10_exact_upper, log10_exact_lower;  // exact tails on the log scale
};

std::vector<CsBoundsRow> cs_concentration_bounds(int s, int m, const std::vector<double>& t_grid,
                                                 const PsiOptions& opts = {});

}  // namespace eigenband

#endif  // EIGENBAND_ASYMPTOTICS_HPP
