#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "eigenband/asymptotics.hpp"

using namespace eigenband;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("TW gamma parameter table") {
  TWGammaParams p1 = tw_gamma_params(1);
  CHECK(p1.k == 46.446);
  CHECK(p1.theta == 0.186054);
  CHECK(p1.alpha == 9.84801);
  TWGammaParams p2 = tw_gamma_params(2);
  CHECK(p2.k == 79.6595);
  CHECK(p2.theta == 0.101037);
  CHECK(p2.alpha == 9.81961);
  TWGammaParams p4 = tw_gamma_params(4);
  CHECK(p4.k == 146.021);
  CHECK(p4.theta == 0.0595445);
  CHECK(p4.alpha == 11.0016);
  CHECK_THROWS_AS(tw_gamma_params(3), std::domain_error);
}

TEST_CASE("tw_cdf surrogate values and shape") {
  CHECK(tw_cdf(1, 0.0) == doctest::Approx(0.8312).epsilon(6e-4));
  CHECK(tw_cdf(2, 0.0) == doctest::Approx(0.96945).epsilon(6e-5));
  CHECK(tw_cdf(1, -tw_gamma_params(1).alpha - 1.0) == 0.0);  // clamp region
  // nondecreasing with limits 0 and 1
  double prev = 0.0;
  for (double x = -12.0; x <= 10.0; x += 0.5) {
    double v = tw_cdf(1, x);
    CHECK(v >= prev);
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
    prev = v;
  }
  CHECK(tw_cdf(1, 40.0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("edge scaling constants") {
  EdgeScaling w = edge_scaling(EnsembleSpec::real_wishart(10, 400));
  double sm = std::sqrt(400.0), sp = std::sqrt(10.0);
  CHECK(w.mu_plus == doctest::Approx((sm + sp) * (sm + sp)).epsilon(1e-15));
  CHECK(w.sigma_plus ==
        doctest::Approx(std::sqrt(w.mu_plus) * std::cbrt(1 / sp + 1 / sm)).epsilon(1e-15));
  CHECK(w.mu_minus == doctest::Approx((sm - sp) * (sm - sp)).epsilon(1e-15));
  CHECK_THROWS_AS(edge_scaling(EnsembleSpec::real_wishart(5, 5)), std::domain_error);

  EdgeScaling g = edge_scaling(EnsembleSpec::goe(50));
  CHECK(g.mu_plus == doctest::Approx(10.0).epsilon(1e-15));  // sqrt(2*50)
  CHECK(g.mu_minus == -g.mu_plus);
  CHECK(g.sigma_plus == doctest::Approx(M_SQRT1_2 * std::pow(50.0, -1.0 / 6.0)).epsilon(1e-15));
  CHECK_THROWS_AS(edge_scaling(EnsembleSpec::real_beta(3, 1, 1)), std::domain_error);
}

TEST_CASE("bulk supports") {
  Interval mp = mp_support(10, 15);
  double sm = std::sqrt(15.0), sp = std::sqrt(10.0);
  CHECK(mp.lo == doctest::Approx((sm - sp) * (sm - sp)).epsilon(1e-15));
  CHECK(mp.hi == doctest::Approx((sm + sp) * (sm + sp)).epsilon(1e-15));
  CHECK(mp_support(7, 7).lo == 0.0);
  CHECK(mp_support(7, 7).hi == doctest::Approx(28.0).epsilon(1e-15));
  CHECK(semicircle_support(2).hi == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(semicircle_support(50).hi == doctest::Approx(10.0).epsilon(1e-15));
  CHECK(semicircle_support(1).hi == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("psi_approx") {
  // full support: both clamps saturate
  CHECK(psi_approx(EnsembleSpec::real_wishart(30, 60), Interval(0.0, kInf)) == 1.0);
  CHECK(psi_approx(EnsembleSpec::goe(30), Interval(-kInf, kInf)) == 1.0);
  // on the limiting bulk support the product tends to the universal values
  double real_val = psi_approx(EnsembleSpec::real_wishart(200, 400), mp_support(200, 400));
  CHECK(real_val == doctest::Approx(0.691).epsilon(2e-3));
  double cplx_val =
      psi_approx(EnsembleSpec::complex_wishart_white(200, 400), mp_support(200, 400));
  CHECK(cplx_val == doctest::Approx(0.9398).epsilon(2e-4));
  double goe_val = psi_approx(EnsembleSpec::goe(300), semicircle_support(300));
  CHECK(goe_val == doctest::Approx(0.691).epsilon(2e-3));
  CHECK_THROWS_AS(psi_approx(EnsembleSpec::real_beta(3, 1, 1), Interval(0.0, 1.0)),
                  std::domain_error);
  CHECK_THROWS_AS(
      psi_approx(EnsembleSpec::complex_wishart_spiked(3, 4, 2.0, 1.0), Interval(0.0, kInf)),
      std::domain_error);
}

TEST_CASE("edge probability limits and deviation forms") {
  CHECK(edge_prob_limit(FieldCase::Real) == doctest::Approx(0.691).epsilon(1e-3));
  CHECK(edge_prob_limit(FieldCase::Complex) == doctest::Approx(0.9398).epsilon(1e-3));
  CHECK(kEdgeProbLimitRealExact == 0.6921);
  CHECK(kEdgeProbLimitComplexExact == 0.9397);
  // complement identity between the two exposed forms
  for (double t : {0.0, 0.5, 1.0, 2.0}) {
    double f = tw_cdf(1, t);
    CHECK(deviation_prob_containment(1, t) == doctest::Approx(f * f).epsilon(1e-15));
    CHECK(deviation_prob_exceedance(1, t) ==
          doctest::Approx((1.0 - f) * (1.0 - f)).epsilon(1e-15));
  }
  // F_1(1) ~ 95%
  CHECK(tw_cdf(1, 1.0) == doctest::Approx(0.95).epsilon(0.01));
}

TEST_CASE("GOE negativity approximations") {
  double l10 = std::log(10.0);
  CHECK(goe_negativity_approx(10, GoeNegativityVariant::Basic) / l10 ==
        doctest::Approx(std::log10(1.18e-12)).epsilon(1e-3));
  CHECK(goe_negativity_approx(10, GoeNegativityVariant::Corrected) / l10 ==
        doctest::Approx(std::log10(2.54e-14)).epsilon(1e-3));
  CHECK(std::exp(goe_negativity_approx(2, GoeNegativityVariant::Corrected)) ==
        doctest::Approx(0.155).epsilon(3e-3));
  CHECK(std::exp(goe_negativity_approx(2, GoeNegativityVariant::Basic)) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("concentration bounds dominate the exact tails") {
  auto rows = cs_concentration_bounds(4, 40, {0.1, 0.3, 0.5, 0.9, 1.2});
  for (const auto& r : rows) {
    CHECK(r.exact_upper <= r.tail_bound * (1 + 1e-9));
    CHECK(r.exact_lower <= r.tail_bound * (1 + 1e-9));
    CHECK(r.exact_upper >= 0.0);
    CHECK(r.exact_lower >= 0.0);
  }
  // t -> large: both tails collapse
  CHECK(rows.back().exact_upper < 1e-8);
  // beyond the root the lower event is empty
  CHECK(rows.back().threshold_lower == 0.0);
  CHECK(rows.back().exact_lower == 0.0);
  CHECK_THROWS_AS(cs_concentration_bounds(4, 40, {0.0}), std::domain_error);
  CHECK_THROWS_AS(cs_concentration_bounds(40, 4, {0.1}), std::domain_error);
}
