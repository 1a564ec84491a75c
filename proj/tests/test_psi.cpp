#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "eigenband/linalg.hpp"
#include "eigenband/psi.hpp"
#include "eigenband/special.hpp"

using namespace eigenband;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

double rel_gap(double got, double want) {
  return std::fabs(got - want) / std::max(std::fabs(want), 1e-300);
}
}  // namespace

TEST_CASE("GOE closed forms for the all-negative probability") {
  double r2 = std::sqrt(2.0);
  double exact[6] = {0,
                     0.5,
                     (2.0 - r2) / 4.0,
                     (M_PI - 2.0 * r2) / (4.0 * M_PI),
                     std::sqrt((9.0 - 4.0 * r2) / 2.0) * (-16.0 - 4.0 * r2 + 7.0 * M_PI) /
                         (56.0 * M_PI),
                     (-8.0 - r2 + 3.0 * M_PI) / (24.0 * M_PI)};
  for (int n = 1; n <= 5; ++n) {
    PsiResult r = psi_goe(n, Interval(-kInf, 0.0));
    CHECK(r.converged);
    CHECK(rel_gap(r.value, exact[n]) < 1e-12);
  }
}

TEST_CASE("single-eigenvalue reductions") {
  // W_1(1): lambda ~ chi^2_1, psi(0,b) = P(1/2, b/2)
  PsiResult w = psi_real_wishart(1, 1, Interval(0.0, 2.0));
  CHECK(rel_gap(w.value, reg_lower_gamma(BigReal(0.5, 256), BigReal(1.0, 256)).to_double()) <
        1e-13);
  // GOE n=1: N(0,1)
  PsiResult g = psi_goe(1, Interval(-kInf, 0.0));
  CHECK(rel_gap(g.value, 0.5) < 1e-14);
  // GUE n=1: N(0,1/2), psi = (erf b - erf a)/2
  PsiResult u = psi_gue(1, Interval(-1.0, 2.0));
  CHECK(rel_gap(u.value, (std::erf(2.0) - std::erf(-1.0)) / 2.0) < 1e-13);
  // beta s=1: I_b(m+1, n+1)
  PsiResult b = psi_real_beta(1, 1.0, 1.0, Interval(0.0, 0.3));
  CHECK(rel_gap(b.value,
                reg_inc_beta(BigReal(0.3, 256), BigReal(2.0, 256), BigReal(2.0, 256)).to_double()) <
        1e-13);
  // complex Wishart 1x1: exponential eigenvalue
  PsiResult c = psi_complex_wishart_white(1, 1, Interval(0.5, 2.0));
  CHECK(rel_gap(c.value, std::exp(-0.5) - std::exp(-2.0)) < 1e-13);
  // correlated p=1 with sigma = 2: Gamma(2, scale 2)
  PsiResult cc = psi_complex_wishart_correlated(2, {2.0}, Interval(1.0, 3.0));
  CHECK(rel_gap(cc.value, reg_gamma_interval(BigReal(2.0, 256), BigReal(0.5, 256),
                                             BigReal(1.5, 256))
                              .to_double()) < 1e-13);
}

TEST_CASE("values cross-checked against an independent high-precision implementation") {
  struct Case {
    PsiResult got;
    double want;
  };
  Case cases[] = {
      {psi_real_wishart(2, 2, Interval(0.0, 2.0)), 0.31518222749862195789},
      {psi_real_wishart(5, 5, Interval(0.0, 5.0)), 0.0037094714061297598937},
      {psi_real_wishart(3, 5, Interval(1.0, 12.0)), 0.32075563187109065687},
      {psi_goe(5, Interval(-2.0, 1.3)), 0.013919189959943028302},
      {psi_goe(4, Interval(-3.5, 3.5)), 0.96077693703265259163},
      {psi_real_beta(3, 1.0, 1.0, Interval(0.0, 0.8)), 0.46170898432},
      {psi_real_beta(2, 0.5, 0.5, Interval(0.1, 0.9)), 0.69790271835467352293},
      {psi_complex_wishart_white(3, 4, Interval(0.5, 9.0)), 0.42304231914058941155},
      {psi_complex_wishart_correlated(3, {2.0, 1.0}, Interval(0.2, 10.0)), 0.76768799653447215546},
      {psi_complex_wishart_spiked(2, 2, 2.0, 1.0, Interval(0.0, 4.0)), 0.38074925265980543983},
      {psi_complex_wishart_spiked(3, 4, 3.0, 1.0, Interval(1.0, 14.0)), 0.19569982892716425076},
      {psi_complex_beta(2, 1.0, 1.0, Interval(0.1, 0.9)), 0.74432512},
      {psi_complex_beta(3, 2.0, 1.0, Interval(0.05, 0.95)), 0.82986684547989268828},
      {psi_gue(4, Interval(-3.0, 3.0)), 0.97389085933998441985},
      {psi_gue(3, Interval(-2.0, 2.5)), 0.85906322116064283947},
  };
  for (const auto& c : cases) {
    CHECK(c.got.converged);
    CHECK(rel_gap(c.got.value, c.want) < 1e-12);
  }
}

TEST_CASE("normalization: psi over the full support is 1") {
  auto check_norm = [](const PsiResult& r) {
    CHECK(r.converged);
    CHECK(std::fabs(r.value - 1.0) < 1e-10);
  };
  for (int p : {1, 2, 3, 5, 8}) {
    check_norm(psi_real_wishart(p, p, Interval(0.0, kInf)));
    check_norm(psi_real_wishart(p, p + 3, Interval(0.0, kInf)));
    check_norm(psi_goe(p, Interval(-kInf, kInf)));
    check_norm(psi_gue(p, Interval(-kInf, kInf)));
    check_norm(psi_real_beta(p, 1.0, 2.0, Interval(0.0, 1.0)));
    check_norm(psi_real_beta(p, 0.5, 0.0, Interval(0.0, 1.0)));
    check_norm(psi_complex_wishart_white(p, p + 1, Interval(0.0, kInf)));
    check_norm(psi_complex_beta(p, 2.0, 0.5, Interval(0.0, 1.0)));
    if (p >= 2) {
      std::vector<double> sigma;
      for (int i = 0; i < p; ++i) sigma.push_back(2.0 + p - i);
      check_norm(psi_complex_wishart_correlated(p + 2, sigma, Interval(0.0, kInf)));
      check_norm(psi_complex_wishart_spiked(p, p + 1, 3.0, 1.0, Interval(0.0, kInf)));
    }
  }
}

TEST_CASE("degenerate and clamped intervals") {
  PsiResult z = psi_goe(3, Interval(0.7, 0.7));
  CHECK(z.value == 0.0);
  CHECK(z.log_value.is_inf());
  CHECK(z.converged);
  // interval reaching outside the support clamps onto it
  PsiResult a = psi_real_wishart(2, 3, Interval(-5.0, kInf));
  CHECK(std::fabs(a.value - 1.0) < 1e-12);
  CHECK_THROWS_AS(psi_real_beta(2, 1.0, 1.0, Interval(1.5, 2.0)), std::domain_error);
}

TEST_CASE("monotonicity and nesting") {
  double prev = 0.0;
  for (double b_end : {0.5, 1.5, 3.0, 6.0, 12.0}) {
    double v = psi_real_wishart(3, 4, Interval(0.0, b_end)).value;
    CHECK(v >= prev);
    prev = v;
  }
  prev = 1.0;
  for (double a_end : {-3.0, -1.0, 0.0, 0.7}) {
    double v = psi_goe(4, Interval(a_end, 3.5)).value;
    CHECK(v <= prev);
    prev = v;
  }
  // nesting
  double inner = psi_gue(3, Interval(-1.0, 1.5)).value;
  double outer = psi_gue(3, Interval(-2.0, 2.0)).value;
  CHECK(inner <= outer);
}

TEST_CASE("GOE reflection symmetry psi(a,b) = psi(-b,-a)") {
  for (int n : {2, 3, 5, 8, 10}) {
    for (auto [a, b] : {std::pair{-2.0, 1.0}, {-0.5, 3.0}, {0.3, 2.2}}) {
      PsiResult fwd = psi_goe(n, Interval(a, b));
      PsiResult rev = psi_goe(n, Interval(-b, -a));
      CHECK(rel_gap(fwd.value, rev.value) < 1e-10);
    }
  }
}

TEST_CASE("correlated covariance collapsing onto the white case") {
  double eps = 1e-4;
  PsiResult corr =
      psi_complex_wishart_correlated(2, {1.0 + eps, 1.0 - eps}, Interval(0.0, 2.0));
  PsiResult white = psi_complex_wishart_white(2, 2, Interval(0.0, 2.0));
  CHECK(corr.converged);
  CHECK(rel_gap(corr.value, white.value) < 1e-2);
  // spiked spectrum nearly collapsed onto the correlated form
  PsiResult spiked = psi_complex_wishart_spiked(2, 2, 1.0001, 1.0, Interval(0.0, 2.0));
  PsiResult corr2 = psi_complex_wishart_correlated(2, {1.0001, 1.0}, Interval(0.0, 2.0));
  CHECK(rel_gap(spiked.value, corr2.value) < 1e-2);
}

TEST_CASE("extreme-eigenvalue CDFs") {
  EnsembleSpec goe1 = EnsembleSpec::goe(1);
  CHECK(rel_gap(cdf_largest(goe1, 0.0).value, 0.5) < 1e-13);
  EnsembleSpec w = EnsembleSpec::real_wishart(3, 4);
  CHECK(std::fabs(cdf_largest(w, kInf).value - 1.0) < 1e-12);
  CHECK(cdf_smallest(w, 0.0).value < 1e-25);
  CHECK(std::fabs(cdf_smallest(w, kInf).value - 1.0) < 1e-12);
  // lambda_min CDF + survival = 1 against a direct evaluation
  double a = 0.8;
  double surv = psi(w, Interval(a, kInf)).value;
  CHECK(rel_gap(cdf_smallest(w, a).value, 1.0 - surv) < 1e-10);
  // deep tail of cdf_smallest stays meaningful through expm1
  EnsembleSpec big = EnsembleSpec::real_wishart(10, 400);
  PsiResult deep = cdf_smallest(big, 150.0);
  CHECK(deep.value > 0);
  CHECK(deep.value < 1e-8);
  CHECK(deep.log_value.to_double() < -18.0);
}

TEST_CASE("precision options and convergence flags") {
  PsiOptions fixed;
  fixed.precision_bits = 128;
  PsiResult r = psi_goe(3, Interval(-1.0, 1.0), fixed);
  CHECK(r.converged);
  CHECK(r.precision_bits_used == 256);  // ladder pair (128, 256)
  PsiResult d = psi_goe(3, Interval(-1.0, 1.0));
  CHECK(d.precision_bits_used == 512);  // default pair (256, 512)
  CHECK(rel_gap(r.value, d.value) < 1e-13);
}

TEST_CASE("dispatcher covers the eight kinds") {
  CHECK(psi(EnsembleSpec::real_wishart(2, 2), Interval(0.0, 2.0)).value ==
        psi_real_wishart(2, 2, Interval(0.0, 2.0)).value);
  CHECK(psi(EnsembleSpec::complex_wishart_spiked(2, 2, 2.0, 1.0), Interval(0.0, 4.0)).value ==
        psi_complex_wishart_spiked(2, 2, 2.0, 1.0, Interval(0.0, 4.0)).value);
  CHECK(psi(EnsembleSpec::gue(2), Interval(-kInf, kInf)).value ==
        psi_gue(2, Interval(-kInf, kInf)).value);
}
