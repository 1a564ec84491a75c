#include "eigenband/tables.hpp"

#include <cmath>
#include <exception>
#include <limits>

namespace eigenband {

namespace {

// Run one psi evaluation per cell across threads; each cell itself uses the
// serial kernel path so the two levels of parallelism do not nest.
template <typename Cell, typename Eval>
std::vector<Cell> run_cells(int n_cells, Eval&& eval) {
  std::vector<Cell> cells(n_cells);
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n_cells; ++i) {
    try {
      cells[i] = eval(i);
    } catch (...) {
#pragma omp critical
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  return cells;
}

PsiOptions cell_opts(const PsiOptions& opts) {
  PsiOptions o = opts;
  o.parallel = false;
  return o;
}

}  // namespace

std::vector<int> default_goe_negative_dims() { return {2, 5, 10, 50, 100, 500}; }
std::vector<int> default_wishart_mid_dims() { return {2, 5, 10, 50, 100, 500}; }
std::vector<int> default_mp_edge_dims() { return {10, 20, 50, 100, 200, 500}; }
std::vector<double> default_mp_edge_ratios() { return {2.0 / 3.0, 0.5, 0.2, 0.1}; }

std::vector<GoeNegativeRow> table_goe_negative(const std::vector<int>& ns,
                                               const PsiOptions& opts) {
  const double inf = std::numeric_limits<double>::infinity();
  PsiOptions o = cell_opts(opts);
  return run_cells<GoeNegativeRow>(static_cast<int>(ns.size()), [&](int i) {
    GoeNegativeRow row;
    row.n = ns[i];
    row.exact = psi_goe(row.n, Interval(-inf, 0.0), o);
    row.log_basic = goe_negativity_approx(row.n, GoeNegativityVariant::Basic);
    row.log_corrected = goe_negativity_approx(row.n, GoeNegativityVariant::Corrected);
    return row;
  });
}

std::vector<WishartMidRow> table_wishart_mid(const std::vector<int>& ps, const PsiOptions& opts) {
  PsiOptions o = cell_opts(opts);
  return run_cells<WishartMidRow>(static_cast<int>(ps.size()), [&](int i) {
    WishartMidRow row;
    row.p = ps[i];
    row.exact = psi_real_wishart(row.p, row.p, Interval(0.0, row.p), o);
    return row;
  });
}

std::vector<MpEdgeCell> table_mp_edges(const std::vector<int>& ps,
                                       const std::vector<double>& ratios,
                                       const PsiOptions& opts) {
  PsiOptions o = cell_opts(opts);
  const int nr = static_cast<int>(ratios.size());
  const int n_cells = static_cast<int>(ps.size()) * nr;
  return run_cells<MpEdgeCell>(n_cells, [&](int idx) {
    MpEdgeCell cell;
    cell.p = ps[idx / nr];
    cell.ratio = ratios[idx % nr];
    cell.m = static_cast<int>(std::lround(cell.p / cell.ratio));
    cell.exact = psi_real_wishart(cell.p, cell.m, mp_support(cell.p, cell.m), o);
    cell.limit = edge_prob_limit(FieldCase::Real);
    return cell;
  });
}

std::vector<TWGammaParams> table_tw_params() {
  return {tw_gamma_params(1), tw_gamma_params(2), tw_gamma_params(4)};
}

}  // namespace eigenband
