#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "eigenband/sampling.hpp"

using namespace eigenband;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("samplers are reproducible and deterministic across thread counts") {
  EnsembleSpec spec = EnsembleSpec::real_wishart(3, 4);
  SampleBatch b1 = sample(spec, 2000, 42);
  SampleBatch b2 = sample(spec, 2000, 42);
  REQUIRE(b1.eigenvalue_sets.size() == 2000);
  CHECK(b1.eigenvalue_sets == b2.eigenvalue_sets);
  SampleBatch b3 = sample(spec, 2000, 43);
  CHECK(b1.eigenvalue_sets != b3.eigenvalue_sets);

  Interval iv(0.5, 9.0);
  McEstimate par = mc_psi(spec, iv, 30000, 7);
  McEstimate ser = mc_psi_serial(spec, iv, 30000, 7);
  CHECK(par.hits == ser.hits);
  CHECK(par.estimate == ser.estimate);
}

TEST_CASE("sampled spectra are sorted and inside the support") {
  for (auto spec : {EnsembleSpec::real_wishart(4, 6), EnsembleSpec::real_beta(3, 1, 1),
                    EnsembleSpec::gue(4), EnsembleSpec::complex_wishart_spiked(3, 4, 2.0, 1.0)}) {
    SampleBatch b = sample(spec, 500, 11);
    Interval sup = support(spec);
    for (const auto& lam : b.eigenvalue_sets) {
      REQUIRE(static_cast<int>(lam.size()) == spec.p);
      CHECK(std::is_sorted(lam.begin(), lam.end()));
      double scale = std::max(std::fabs(lam.front()), std::fabs(lam.back()));
      CHECK(lam.front() >= sup.lo - 1e-10 * std::max(scale, 1.0));
      CHECK(lam.back() <= sup.hi + 1e-10 * std::max(scale, 1.0));
    }
  }
}

TEST_CASE("GOE 1x1 entries have the right mean and variance") {
  SampleBatch b = sample(EnsembleSpec::goe(1), 100000, 5);
  double sum = 0, sq = 0;
  for (const auto& lam : b.eigenvalue_sets) {
    sum += lam[0];
    sq += lam[0] * lam[0];
  }
  double n = static_cast<double>(b.count);
  double mean = sum / n, var = sq / n - mean * mean;
  // single entry ~ N(0,1); 4 standard errors
  CHECK(std::fabs(mean) < 4.0 / std::sqrt(n));
  CHECK(std::fabs(var - 1.0) < 4.0 * std::sqrt(2.0 / n));
}

TEST_CASE("complex Wishart 1x1 eigenvalue is exponential") {
  McEstimate mc = mc_psi(EnsembleSpec::complex_wishart_white(1, 1), Interval(0.0, 1.0), 100000, 9);
  double want = 1.0 - std::exp(-1.0);
  CHECK(std::fabs(mc.estimate - want) < 4.0 * mc.std_err);
}

TEST_CASE("real Wishart p=2 all-in-[0,2] fraction matches the exact value") {
  // psi(0,2) for W_2(2, I) = 0.3151822274986220
  McEstimate mc = mc_psi(EnsembleSpec::real_wishart(2, 2), Interval(0.0, 2.0), 1000000, 123);
  CHECK(std::fabs(mc.estimate - 0.3151822274986220) < 4.0 * mc.std_err);
}

TEST_CASE("GOE spectra reflect: -lambda_max and lambda_min agree in law") {
  // two-sample KS on 1e5 draws; 1% critical value of sqrt((n1+n2)/(n1 n2))
  const int n = 100000;
  SampleBatch b = sample(EnsembleSpec::goe(4), n, 77);
  std::vector<double> neg_max(n), mins(n);
  for (int i = 0; i < n; ++i) {
    neg_max[i] = -b.eigenvalue_sets[i].back();
    mins[i] = b.eigenvalue_sets[i].front();
  }
  std::sort(neg_max.begin(), neg_max.end());
  std::sort(mins.begin(), mins.end());
  double ks = 0;
  size_t i = 0, j = 0;
  while (i < neg_max.size() && j < mins.size()) {
    if (neg_max[i] <= mins[j])
      ++i;
    else
      ++j;
    ks = std::max(ks, std::fabs(static_cast<double>(i) - static_cast<double>(j)) / n);
  }
  double crit = 1.628 * std::sqrt(2.0 / n);  // alpha = 0.01
  CHECK(ks < crit);
}

TEST_CASE("mc_psi trivial and error cases") {
  EnsembleSpec spec = EnsembleSpec::real_wishart(2, 3);
  McEstimate mc = mc_psi(spec, Interval(0.0, kInf), 1000, 3);
  CHECK(mc.estimate == 1.0);
  CHECK(mc.std_err == 0.0);
  CHECK_THROWS_AS(mc_psi(spec, Interval(0.0, 1.0), 10, 3), std::domain_error);
}

TEST_CASE("GOE n=2 negative-spectrum fraction matches the closed form") {
  McEstimate mc = mc_psi(EnsembleSpec::goe(2), Interval(-kInf, 0.0), 1000000, 2024);
  double want = (2.0 - std::sqrt(2.0)) / 4.0;
  CHECK(std::fabs(mc.estimate - want) < 4.0 * mc.std_err);
}

TEST_CASE("beta sampling needs integer matrix dimensions") {
  EnsembleSpec ok = EnsembleSpec::real_beta(2, 0.5, 1.0);  // n_hat = 2m+s+1 = 4
  CHECK(sampling_supported(ok));
  CHECK_NOTHROW(sample(ok, 100, 1));
  EnsembleSpec bad = EnsembleSpec::real_beta(2, 0.25, 1.0);
  CHECK_FALSE(sampling_supported(bad));
  CHECK_THROWS_AS(sample(bad, 100, 1), unsupported_sampling_error);
  EnsembleSpec cbad = EnsembleSpec::complex_beta(2, 0.5, 1.0);
  CHECK_FALSE(sampling_supported(cbad));
  CHECK_THROWS_AS(mc_psi(cbad, Interval(0.0, 1.0), 1000, 1), unsupported_sampling_error);
}
