#ifndef EIGENBAND_SAMPLING_HPP
#define EIGENBAND_SAMPLING_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "eigenband/ensemble.hpp"

namespace eigenband {

// Raised when a beta parameterization does not map back to integer matrix
// dimensions, so no matrix model exists to draw from (exact formulas still
// apply to such parameters).
class unsupported_sampling_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Sorted eigenvalue spectra of `count` independently drawn matrices.
struct SampleBatch {
  std::vector<std::vector<double>> eigenvalue_sets;  // each ascending, length p
  std::uint64_t seed = 0;
  long count = 0;
};

struct McEstimate {
  double estimate = 0;  // fraction of draws with all eigenvalues inside
  double std_err = 0;   // binomial sqrt(e(1-e)/count)
  long hits = 0;
  long trials = 0;
};

// Draws `count` matrices and returns their spectra. Deterministic in
// (spec, count, seed): work is split into fixed-size shards with seeds
// derived from (seed, shard index), so the result does not depend on the
// number of worker threads. Samplers run in double precision; plain
// Gaussian variates come from a Box-Muller transform.
SampleBatch sample(const EnsembleSpec& spec, long count, std::uint64_t seed);

// Monte Carlo estimate of psi(iv) = Pr(all eigenvalues in iv); count >= 100.
McEstimate mc_psi(const EnsembleSpec& spec, const Interval& iv, long count, std::uint64_t seed);

// Single-threaded reference path; produces results identical to mc_psi.
McEstimate mc_psi_serial(const EnsembleSpec& spec, const Interval& iv, long count,
                         std::uint64_t seed);

// True when the (s, m, n) beta exponents map back to integer matrix
// dimensions, i.e. when matrix sampling is available for the kind.
bool sampling_supported(const EnsembleSpec& spec);

}  // namespace eigenband

#endif  // EIGENBAND_SAMPLING_HPP
