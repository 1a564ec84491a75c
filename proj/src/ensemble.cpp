#include "eigenband/ensemble.hpp"

#include <algorithm>
#include <stdexcept>

namespace eigenband {

Interval::Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
  if (std::isnan(lo) || std::isnan(hi)) throw std::domain_error("Interval: NaN endpoint");
  if (lo > hi) throw std::domain_error("Interval: requires lo <= hi");
}

Interval Interval::clamped_to(const Interval& support) const {
  double l = std::max(lo, support.lo);
  double h = std::min(hi, support.hi);
  if (l > h) throw std::domain_error("Interval: does not intersect the ensemble support");
  return Interval(l, h);
}

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::RealWishart: return "real-wishart";
    case Kind::GOE: return "goe";
    case Kind::RealBeta: return "real-beta";
    case Kind::ComplexWishartWhite: return "complex-wishart";
    case Kind::ComplexWishartCorrelated: return "complex-wishart-corr";
    case Kind::ComplexWishartSpiked: return "complex-wishart-spiked";
    case Kind::ComplexBeta: return "complex-beta";
    case Kind::GUE: return "gue";
  }
  return "?";
}

bool kind_from_name(const std::string& name, Kind* out) {
  static const Kind all[] = {Kind::RealWishart,          Kind::GOE,
                             Kind::RealBeta,             Kind::ComplexWishartWhite,
                             Kind::ComplexWishartCorrelated, Kind::ComplexWishartSpiked,
                             Kind::ComplexBeta,          Kind::GUE};
  for (Kind k : all) {
    if (name == kind_name(k)) {
      *out = k;
      return true;
    }
  }
  return false;
}

EnsembleSpec EnsembleSpec::real_wishart(int p, int m) {
  EnsembleSpec s;
  s.kind = Kind::RealWishart;
  s.p = p;
  s.m = m;
  s.validate();
  return s;
}

EnsembleSpec EnsembleSpec::goe(int n) {
  EnsembleSpec s;
  s.kind = Kind::GOE;
  s.p = n;
  s.validate();
  return s;
}

EnsembleSpec EnsembleSpec::real_beta(int sdim, double m, double n) {
  EnsembleSpec s;
  s.kind = Kind::RealBeta;
  s.p = sdim;
  s.beta_m = m;
  s.beta_n = n;
  s.validate();
  return s;
}

EnsembleSpec EnsembleSpec::complex_wishart_white(int p, int m) {
  EnsembleSpec s;
  s.kind = Kind::ComplexWishartWhite;
  s.p = p;
  s.m = m;
  s.validate();
  return s;
}

EnsembleSpec EnsembleSpec::complex_wishart_correlated(int m, std::vector<double> sigma) {
  EnsembleSpec s;
  s.kind = Kind::ComplexWishartCorrelated;
  s.p = static_cast<int>(sigma.size());
  s.m = m;
  s.sigma = std::move(sigma);
  s.validate();
  return s;
}

EnsembleSpec EnsembleSpec::complex_wishart_spiked(int p, int m, double sigma1, double sigma2) {
  EnsembleSpec s;
  s.kind = Kind::ComplexWishartSpiked;
  s.p = p;
  s.m = m;
  s.sigma1 = sigma1;
  s.sigma2 = sigma2;
  s.validate();
  return s;
}

EnsembleSpec EnsembleSpec::complex_beta(int sdim, double m, double n) {
  EnsembleSpec s;
  s.kind = Kind::ComplexBeta;
  s.p = sdim;
  s.beta_m = m;
  s.beta_n = n;
  s.validate();
  return s;
}

EnsembleSpec EnsembleSpec::gue(int n) {
  EnsembleSpec s;
  s.kind = Kind::GUE;
  s.p = n;
  s.validate();
  return s;
}

void EnsembleSpec::validate() const {
  if (p < 1) throw std::domain_error("ensemble: dimension p must be >= 1");
  switch (kind) {
    case Kind::RealWishart:
    case Kind::ComplexWishartWhite:
      if (m < p) throw std::domain_error("ensemble: Wishart requires m >= p");
      break;
    case Kind::GOE:
    case Kind::GUE:
      break;
    case Kind::RealBeta:
    case Kind::ComplexBeta:
      if (!(beta_m >= 0) || !(beta_n >= 0))
        throw std::domain_error("ensemble: beta exponents must be >= 0");
      break;
    case Kind::ComplexWishartCorrelated: {
      if (m < p) throw std::domain_error("ensemble: Wishart requires m >= p");
      if (static_cast<int>(sigma.size()) != p)
        throw std::domain_error("ensemble: correlated case needs p covariance eigenvalues");
      for (int i = 0; i < p; ++i) {
        if (!(sigma[i] > 0)) throw std::domain_error("ensemble: covariance eigenvalues must be positive");
        if (i > 0 && !(sigma[i - 1] > sigma[i]))
          throw std::domain_error(
              "ensemble: correlated case needs strictly decreasing, distinct covariance "
              "eigenvalues (use the white or spiked kind for repeated values)");
      }
      break;
    }
    case Kind::ComplexWishartSpiked:
      if (p < 2)
        throw std::domain_error(
            "ensemble: spiked case needs p >= 2; a single-eigenvalue covariance is the "
            "white/correlated case");
      if (m < p) throw std::domain_error("ensemble: Wishart requires m >= p");
      if (!(sigma2 > 0) || !(sigma1 > sigma2))
        throw std::domain_error("ensemble: spiked case requires sigma1 > sigma2 > 0");
      break;
  }
}

Interval support(const EnsembleSpec& spec) {
  const double inf = std::numeric_limits<double>::infinity();
  if (spec.is_wishart()) return Interval(0.0, inf);
  if (spec.is_beta()) return Interval(0.0, 1.0);
  return Interval(-inf, inf);
}

std::tuple<int, double, double> beta_params_from_dims(int p_hat, int m_hat, int n_hat) {
  if (p_hat < 1 || m_hat < p_hat || n_hat < p_hat)
    throw std::domain_error("beta_params_from_dims: requires m_hat, n_hat >= p_hat >= 1");
  return {p_hat, (n_hat - p_hat - 1) / 2.0, (m_hat - p_hat - 1) / 2.0};
}

}  // namespace eigenband
