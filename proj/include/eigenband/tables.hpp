#ifndef EIGENBAND_TABLES_HPP
#define EIGENBAND_TABLES_HPP

#include <vector>

#include "eigenband/asymptotics.hpp"
#include "eigenband/psi.hpp"

namespace eigenband {

// Reference-table reproductions. Each driver recomputes the exact column
// cell by cell (cells run concurrently; every cell is still deterministic)
// and attaches the closed-form approximation columns where one exists.

struct GoeNegativeRow {
  int n;
  PsiResult exact;          // psi(-inf, 0]
  double log_basic;         // ln of e^{-n^2 ln3/4}
  double log_corrected;     // ln of e^{-n^2 ln3/4 - n ln10/6}
};
std::vector<GoeNegativeRow> table_goe_negative(const std::vector<int>& ns,
                                               const PsiOptions& opts = {});
std::vector<int> default_goe_negative_dims();  // {2, 5, 10, 50, 100, 500}

struct WishartMidRow {
  int p;
  PsiResult exact;  // psi(0, p) for W_p(p, I)
};
std::vector<WishartMidRow> table_wishart_mid(const std::vector<int>& ps,
                                             const PsiOptions& opts = {});
std::vector<int> default_wishart_mid_dims();  // {2, 5, 10, 50, 100, 500}

struct MpEdgeCell {
  int p;
  int m;
  double ratio;     // p/m
  PsiResult exact;  // psi over the limiting bulk support
  double limit;     // gamma-surrogate limit F_1(0)^2
};
std::vector<MpEdgeCell> table_mp_edges(const std::vector<int>& ps,
                                       const std::vector<double>& ratios,
                                       const PsiOptions& opts = {});
std::vector<int> default_mp_edge_dims();        // {10, 20, 50, 100, 200, 500}
std::vector<double> default_mp_edge_ratios();   // {2/3, 1/2, 1/5, 1/10}

std::vector<TWGammaParams> table_tw_params();   // beta = 1, 2, 4

}  // namespace eigenband

#endif  // EIGENBAND_TABLES_HPP
