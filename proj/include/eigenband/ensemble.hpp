#ifndef EIGENBAND_ENSEMBLE_HPP
#define EIGENBAND_ENSEMBLE_HPP

#include <cmath>
#include <limits>
#include <string>
#include <tuple>
#include <vector>

namespace eigenband {

// Closed interval [lo, hi]; either endpoint may be infinite.
struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();

  Interval() = default;
  Interval(double lo_, double hi_);

  bool lo_infinite() const { return std::isinf(lo) && lo < 0; }
  bool hi_infinite() const { return std::isinf(hi) && hi > 0; }
  bool contains(const Interval& inner) const { return lo <= inner.lo && inner.hi <= hi; }
  bool degenerate() const { return lo == hi; }

  // Intersection with an ensemble support; infinite arguments collapse onto
  // the support edges. Throws if the result is empty.
  Interval clamped_to(const Interval& support) const;
};

enum class Kind {
  RealWishart,
  GOE,
  RealBeta,
  ComplexWishartWhite,
  ComplexWishartCorrelated,
  ComplexWishartSpiked,
  ComplexBeta,
  GUE,
};

const char* kind_name(Kind k);
bool kind_from_name(const std::string& name, Kind* out);

// One of the eight supported matrix ensembles.
//
// Symbol conventions used throughout: p is the matrix dimension (the number
// of variates; equals the beta ensembles' s), m the degrees of freedom of
// Wishart kinds, and for beta kinds (beta_m, beta_n) are the density
// exponents in x^m (1-x)^n, both allowed to be half-integers.
struct EnsembleSpec {
  Kind kind = Kind::GOE;
  int p = 1;
  int m = 0;                     // Wishart degrees of freedom
  double beta_m = 0, beta_n = 0; // beta ensembles' exponents
  std::vector<double> sigma;     // correlated: full spectrum, strictly decreasing
  double sigma1 = 0, sigma2 = 0; // spiked: the spike and the bulk level

  static EnsembleSpec real_wishart(int p, int m);
  static EnsembleSpec goe(int n);
  static EnsembleSpec real_beta(int s, double m, double n);
  static EnsembleSpec complex_wishart_white(int p, int m);
  static EnsembleSpec complex_wishart_correlated(int m, std::vector<double> sigma);
  static EnsembleSpec complex_wishart_spiked(int p, int m, double sigma1, double sigma2);
  static EnsembleSpec complex_beta(int s, double m, double n);
  static EnsembleSpec gue(int n);

  bool is_wishart() const {
    return kind == Kind::RealWishart || kind == Kind::ComplexWishartWhite ||
           kind == Kind::ComplexWishartCorrelated || kind == Kind::ComplexWishartSpiked;
  }
  bool is_beta() const { return kind == Kind::RealBeta || kind == Kind::ComplexBeta; }
  bool is_gaussian() const { return kind == Kind::GOE || kind == Kind::GUE; }

  // Throws std::domain_error on invalid parameter combinations.
  void validate() const;
};

// Eigenvalue support: [0,inf) for Wishart kinds, [0,1] for beta kinds,
// (-inf,inf) for GOE/GUE.
Interval support(const EnsembleSpec& spec);

// Beta-exponent triple (s, m, n) from double-Wishart matrix dimensions:
// eigenvalues of (A+B)^{-1} B with A = X X^T (p_hat x m_hat draws) and
// B = Y Y^T (p_hat x n_hat draws) follow the beta law with
//   s = p_hat,  m = (n_hat - p_hat - 1)/2,  n = (m_hat - p_hat - 1)/2.
std::tuple<int, double, double> beta_params_from_dims(int p_hat, int m_hat, int n_hat);

}  // namespace eigenband

#endif  // EIGENBAND_ENSEMBLE_HPP
