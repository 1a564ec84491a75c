#ifndef EIGENBAND_PSI_HPP
#define EIGENBAND_PSI_HPP

#include <vector>

#include "eigenband/bigreal.hpp"
#include "eigenband/ensemble.hpp"

namespace eigenband {

// Result of one psi evaluation.
//
// converged means two successive working precisions q and 2q produced
// log values agreeing to 1e-12 relative; the reported numbers come from the
// higher precision of the agreeing pair.
struct PsiResult {
  double value = 0;              // may underflow to 0; log_value never does
  BigReal log_value;             // natural log of psi; -inf when psi == 0
  int precision_bits_used = 0;
  bool converged = false;

  double log10_value() const;
};

struct PsiOptions {
  // Starting mantissa size of the adaptive ladder; 0 selects the default
  // max(256, 12*p), which grows with the dimension because the kernel
  // recursions and the elimination lose a bounded number of bits per index.
  int precision_bits = 0;
  // Distribute kernel rows across OpenMP threads (identical results either way).
  bool parallel = true;
};

// Probability that all eigenvalues lie in iv, for each ensemble. Infinite
// interval endpoints collapse onto the support edges; an interval that
// misses the support entirely is a domain error; a degenerate interval gives
// psi = 0 without building a kernel.
PsiResult psi_real_wishart(int p, int m, const Interval& iv, const PsiOptions& opts = {});
PsiResult psi_goe(int n, const Interval& iv, const PsiOptions& opts = {});
PsiResult psi_real_beta(int s, double m, double n_beta, const Interval& iv,
                        const PsiOptions& opts = {});
PsiResult psi_complex_wishart_white(int p, int m, const Interval& iv,
                                    const PsiOptions& opts = {});
PsiResult psi_complex_wishart_correlated(int m, const std::vector<double>& sigma,
                                         const Interval& iv, const PsiOptions& opts = {});
PsiResult psi_complex_wishart_spiked(int p, int m, double sigma1, double sigma2,
                                     const Interval& iv, const PsiOptions& opts = {});
PsiResult psi_complex_beta(int s, double m, double n_beta, const Interval& iv,
                           const PsiOptions& opts = {});
PsiResult psi_gue(int n, const Interval& iv, const PsiOptions& opts = {});

// Dispatch on the ensemble kind.
PsiResult psi(const EnsembleSpec& spec, const Interval& iv, const PsiOptions& opts = {});

// CDF of the largest eigenvalue at b: psi(support.lo, b).
PsiResult cdf_largest(const EnsembleSpec& spec, double b, const PsiOptions& opts = {});

// CDF of the smallest eigenvalue at a: 1 - psi(a, support.hi), evaluated via
// expm1 of the log so the result keeps full precision when psi is near 1.
PsiResult cdf_smallest(const EnsembleSpec& spec, double a, const PsiOptions& opts = {});

}  // namespace eigenband

#endif  // EIGENBAND_PSI_HPP
