#include "eigenband/sampling.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <random>

namespace eigenband {

namespace {

constexpr long kShardSize = 8192;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t shard_seed(std::uint64_t seed, long shard) {
  return splitmix64(splitmix64(seed) + static_cast<std::uint64_t>(shard));
}

// Box-Muller on top of a 64-bit engine; the second variate of each pair is
// cached. std::normal_distribution is avoided because its output sequence is
// implementation-defined.
class Gaussian {
 public:
  explicit Gaussian(std::uint64_t seed) : eng_(seed) {}

  double operator()() {
    if (have_) {
      have_ = false;
      return spare_;
    }
    double u1 = (static_cast<double>(eng_() >> 11) + 1.0) * 0x1.0p-53;  // (0,1]
    double u2 = static_cast<double>(eng_() >> 11) * 0x1.0p-53;          // [0,1)
    double r = std::sqrt(-2.0 * std::log(u1));
    double t = 2.0 * M_PI * u2;
    spare_ = r * std::sin(t);
    have_ = true;
    return r * std::cos(t);
  }

  std::complex<double> standard_complex() {
    double re = (*this)();
    double im = (*this)();
    return {re * M_SQRT1_2, im * M_SQRT1_2};
  }

 private:
  std::mt19937_64 eng_;
  double spare_ = 0;
  bool have_ = false;
};

struct BetaDims {
  int p, m_hat, n_hat;
};

// Inverse of beta_params_from_dims: p_hat = s, n_hat = 2m+s+1, m_hat = 2n+s+1.
bool beta_dims(const EnsembleSpec& spec, BetaDims* out) {
  double two_m = 2 * spec.beta_m, two_n = 2 * spec.beta_n;
  if (spec.kind == Kind::RealBeta) {
    if (two_m != std::floor(two_m) || two_n != std::floor(two_n)) return false;
    out->p = spec.p;
    out->n_hat = static_cast<int>(two_m) + spec.p + 1;
    out->m_hat = static_cast<int>(two_n) + spec.p + 1;
    return true;
  }
  // complex: exponents are m = n_hat - p, n = m_hat - p
  if (spec.beta_m != std::floor(spec.beta_m) || spec.beta_n != std::floor(spec.beta_n))
    return false;
  out->p = spec.p;
  out->n_hat = static_cast<int>(spec.beta_m) + spec.p;
  out->m_hat = static_cast<int>(spec.beta_n) + spec.p;
  return true;
}

void fill_real_gaussian(Eigen::MatrixXd& X, Gaussian& g) {
  for (int j = 0; j < X.cols(); ++j)
    for (int i = 0; i < X.rows(); ++i) X(i, j) = g();
}

void fill_complex_gaussian(Eigen::MatrixXcd& X, Gaussian& g) {
  for (int j = 0; j < X.cols(); ++j)
    for (int i = 0; i < X.rows(); ++i) X(i, j) = g.standard_complex();
}

// Draws one spectrum (ascending) into out[0..p).
class Drawer {
 public:
  Drawer(const EnsembleSpec& spec) : spec_(spec) {
    if (spec_.is_beta() && !beta_dims(spec_, &bd_))
      throw unsupported_sampling_error(
          "sampling: beta exponents do not correspond to integer matrix dimensions");
  }

  void draw(Gaussian& g, double* out) const {
    const int p = spec_.p;
    switch (spec_.kind) {
      case Kind::RealWishart: {
        Eigen::MatrixXd X(p, spec_.m);
        fill_real_gaussian(X, g);
        Eigen::MatrixXd M = X * X.transpose();
        eig_real(M, out);
        break;
      }
      case Kind::GOE: {
        Eigen::MatrixXd M(p, p);
        for (int i = 0; i < p; ++i) {
          M(i, i) = g();
          for (int j = i + 1; j < p; ++j) {
            double v = g() * M_SQRT1_2;
            M(i, j) = M(j, i) = v;
          }
        }
        eig_real(M, out);
        break;
      }
      case Kind::GUE: {
        Eigen::MatrixXcd M(p, p);
        for (int i = 0; i < p; ++i) {
          M(i, i) = g() * M_SQRT1_2;
          for (int j = i + 1; j < p; ++j) {
            std::complex<double> v(0.5 * g(), 0.5 * g());
            M(i, j) = v;
            M(j, i) = std::conj(v);
          }
        }
        eig_complex(M, out);
        break;
      }
      case Kind::ComplexWishartWhite:
      case Kind::ComplexWishartCorrelated:
      case Kind::ComplexWishartSpiked: {
        Eigen::MatrixXcd X(p, spec_.m);
        fill_complex_gaussian(X, g);
        if (spec_.kind == Kind::ComplexWishartCorrelated) {
          for (int i = 0; i < p; ++i) X.row(i) *= std::sqrt(spec_.sigma[i]);
        } else if (spec_.kind == Kind::ComplexWishartSpiked) {
          X.row(0) *= std::sqrt(spec_.sigma1);
          for (int i = 1; i < p; ++i) X.row(i) *= std::sqrt(spec_.sigma2);
        }
        Eigen::MatrixXcd M = X * X.adjoint();
        eig_complex(M, out);
        break;
      }
      case Kind::RealBeta: {
        Eigen::MatrixXd X(bd_.p, bd_.m_hat), Y(bd_.p, bd_.n_hat);
        fill_real_gaussian(X, g);
        fill_real_gaussian(Y, g);
        Eigen::MatrixXd B = Y * Y.transpose();
        Eigen::MatrixXd S = X * X.transpose() + B;
        Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(B, S,
                                                                     Eigen::EigenvaluesOnly | Eigen::Ax_lBx);
        for (int i = 0; i < p; ++i) out[i] = es.eigenvalues()[i];
        break;
      }
      case Kind::ComplexBeta: {
        Eigen::MatrixXcd X(bd_.p, bd_.m_hat), Y(bd_.p, bd_.n_hat);
        fill_complex_gaussian(X, g);
        fill_complex_gaussian(Y, g);
        Eigen::MatrixXcd B = Y * Y.adjoint();
        Eigen::MatrixXcd S = X * X.adjoint() + B;
        Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXcd> es(B, S,
                                                                      Eigen::EigenvaluesOnly | Eigen::Ax_lBx);
        for (int i = 0; i < p; ++i) out[i] = es.eigenvalues()[i];
        break;
      }
    }
  }

 private:
  static void eig_real(const Eigen::MatrixXd& M, double* out) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M, Eigen::EigenvaluesOnly);
    for (int i = 0; i < M.rows(); ++i) out[i] = es.eigenvalues()[i];
  }
  static void eig_complex(const Eigen::MatrixXcd& M, double* out) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(M, Eigen::EigenvaluesOnly);
    for (int i = 0; i < M.rows(); ++i) out[i] = es.eigenvalues()[i];
  }

  const EnsembleSpec& spec_;
  BetaDims bd_{};
};

template <typename PerDraw>
void run_shards(const EnsembleSpec& spec, long count, std::uint64_t seed, bool parallel,
                PerDraw&& per_draw) {
  spec.validate();
  Drawer drawer(spec);
  const long shards = (count + kShardSize - 1) / kShardSize;
  const int p = spec.p;
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long s = 0; s < shards; ++s) {
    Gaussian g(shard_seed(seed, s));
    std::vector<double> lam(p);
    const long lo = s * kShardSize;
    const long hi = std::min(count, lo + kShardSize);
    for (long idx = lo; idx < hi; ++idx) {
      drawer.draw(g, lam.data());
      per_draw(s, idx, lam);
    }
  }
}

McEstimate mc_impl(const EnsembleSpec& spec, const Interval& iv, long count, std::uint64_t seed,
                   bool parallel) {
  if (count < 100) throw std::domain_error("mc_psi: need at least 100 trials");
  const long shards = (count + kShardSize - 1) / kShardSize;
  std::vector<long> hits(shards, 0);
  run_shards(spec, count, seed, parallel, [&](long s, long, const std::vector<double>& lam) {
    if (lam.front() >= iv.lo && lam.back() <= iv.hi) ++hits[s];
  });
  long total = 0;
  for (long s = 0; s < shards; ++s) total += hits[s];
  McEstimate r;
  r.hits = total;
  r.trials = count;
  r.estimate = static_cast<double>(total) / static_cast<double>(count);
  r.std_err = std::sqrt(r.estimate * (1.0 - r.estimate) / static_cast<double>(count));
  return r;
}

}  // namespace

SampleBatch sample(const EnsembleSpec& spec, long count, std::uint64_t seed) {
  if (count < 1) throw std::domain_error("sample: count must be >= 1");
  SampleBatch batch;
  batch.seed = seed;
  batch.count = count;
  batch.eigenvalue_sets.assign(count, {});
  run_shards(spec, count, seed, true, [&](long, long idx, const std::vector<double>& lam) {
    batch.eigenvalue_sets[idx] = lam;
  });
  return batch;
}

McEstimate mc_psi(const EnsembleSpec& spec, const Interval& iv, long count, std::uint64_t seed) {
  return mc_impl(spec, iv, count, seed, true);
}

McEstimate mc_psi_serial(const EnsembleSpec& spec, const Interval& iv, long count,
                         std::uint64_t seed) {
  return mc_impl(spec, iv, count, seed, false);
}

bool sampling_supported(const EnsembleSpec& spec) {
  if (!spec.is_beta()) return true;
  BetaDims bd;
  return beta_dims(spec, &bd);
}

}  // namespace eigenband
