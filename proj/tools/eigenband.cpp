// Command-line front end: exact band probabilities psi(a,b) of random-matrix
// spectra, extreme-eigenvalue CDFs, large-matrix approximations, reference
// tables and Monte Carlo cross-checks.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>

#include "eigenband/linalg.hpp"
#include "eigenband/report.hpp"
#include "eigenband/sampling.hpp"

namespace eb = eigenband;

namespace {

double parse_endpoint(const std::string& tok) {
  std::string t = tok;
  std::transform(t.begin(), t.end(), t.begin(), ::tolower);
  if (t == "inf" || t == "+inf") return HUGE_VAL;
  if (t == "-inf") return -HUGE_VAL;
  size_t used = 0;
  double v = std::stod(t, &used);
  if (used != t.size()) throw CLI::ValidationError("interval", "cannot parse endpoint '" + tok + "'");
  return v;
}

struct CliState {
  std::string ensemble = "goe";
  int p = 0, m = 0, n = 0;
  double beta_m = -1, beta_n = -1;
  std::string sigma_csv;
  std::vector<std::string> interval_tokens;
  double at = 0;
  bool has_at = false;
  int precision = 0;
  std::string format = "plain";
  std::uint64_t seed = 1;
  long trials = 1000000;
  bool no_meta = false;
  std::string table_id;
  std::vector<int> dims;
  int cs_s = 10, cs_m = 400;
  double t_from = 0.01, t_to = 1.0, t_step = 0.01;
};

std::vector<double> parse_sigma(const std::string& csv) {
  std::vector<double> out;
  std::string cur;
  for (char c : csv + ",") {
    if (c == ',') {
      if (!cur.empty()) out.push_back(std::stod(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

eb::EnsembleSpec make_spec(const CliState& st) {
  eb::Kind kind;
  if (!eb::kind_from_name(st.ensemble, &kind))
    throw CLI::ValidationError("--ensemble", "unknown ensemble '" + st.ensemble + "'");
  eb::EnsembleSpec spec;
  spec.kind = kind;
  int dim = st.p > 0 ? st.p : st.n;
  spec.p = dim;
  spec.m = st.m;
  if (spec.is_beta()) {
    spec.beta_m = st.beta_m >= 0 ? st.beta_m : 0;
    spec.beta_n = st.beta_n >= 0 ? st.beta_n : 0;
  }
  std::vector<double> sig = parse_sigma(st.sigma_csv);
  if (kind == eb::Kind::ComplexWishartCorrelated) {
    spec.sigma = sig;
    if (spec.p == 0) spec.p = static_cast<int>(sig.size());
  }
  if (kind == eb::Kind::ComplexWishartSpiked) {
    if (sig.size() != 2)
      throw CLI::ValidationError("--sigma", "spiked case expects --sigma SPIKE,BULK");
    spec.sigma1 = sig[0];
    spec.sigma2 = sig[1];
  }
  spec.validate();
  return spec;
}

eb::RunConfig make_config(const CliState& st, bool need_interval) {
  eb::RunConfig cfg;
  cfg.spec = make_spec(st);
  if (need_interval) {
    if (st.interval_tokens.size() != 2)
      throw CLI::ValidationError("--interval", "expected --interval LO HI");
    cfg.interval =
        eb::Interval(parse_endpoint(st.interval_tokens[0]), parse_endpoint(st.interval_tokens[1]));
  }
  cfg.at = st.at;
  cfg.precision_bits = st.precision;
  if (!eb::format_from_name(st.format, &cfg.format))
    throw CLI::ValidationError("--format", "expected json, csv or plain");
  cfg.seed = st.seed;
  cfg.trials = st.trials;
  cfg.no_meta = st.no_meta;
  cfg.table_id = st.table_id;
  cfg.table_dims = st.dims;
  cfg.cs_s = st.cs_s;
  cfg.cs_m = st.cs_m;
  cfg.t_from = st.t_from;
  cfg.t_to = st.t_to;
  cfg.t_step = st.t_step;
  return cfg;
}

void add_ensemble_flags(CLI::App* cmd, CliState& st) {
  cmd->add_option("--ensemble", st.ensemble,
                  "real-wishart | goe | real-beta | complex-wishart | complex-wishart-corr | "
                  "complex-wishart-spiked | complex-beta | gue");
  cmd->add_option("-p", st.p, "matrix dimension / number of variates");
  cmd->add_option("-n", st.n, "matrix dimension (GOE/GUE alias of -p)");
  cmd->add_option("-m", st.m, "degrees of freedom (Wishart kinds)");
  cmd->add_option("--beta-m", st.beta_m, "beta ensembles: exponent of x");
  cmd->add_option("--beta-n", st.beta_n, "beta ensembles: exponent of (1-x)");
  cmd->add_option("--sigma", st.sigma_csv,
                  "covariance eigenvalues, comma separated (spiked: SPIKE,BULK)");
}

void add_common_flags(CLI::App* cmd, CliState& st) {
  cmd->add_option("--precision", st.precision, "starting working precision in bits (0 = adaptive)");
  cmd->add_option("--format", st.format, "json | csv | plain");
  cmd->add_flag("--no-meta", st.no_meta, "omit timing metadata (byte-stable output)");
}

int emit(const eb::BuiltReport& built, const eb::RunConfig& cfg, double wall_ms) {
  eb::Json payload = built.payload;
  if (!cfg.no_meta) payload["meta"] = {{"wall_time_ms", wall_ms}};
  std::cout << eb::render(payload, cfg.format);
  if (!built.converged) {
    std::cerr << "warning: result did not converge at the precision cap; best estimate shown\n";
    return eb::kExitNoConvergence;
  }
  return eb::kExitOk;
}

template <typename Fn>
int run_command(const CliState& st, bool need_interval, Fn&& fn) {
  eb::RunConfig cfg = make_config(st, need_interval);
  auto t0 = std::chrono::steady_clock::now();
  eb::BuiltReport built = fn(cfg);
  auto t1 = std::chrono::steady_clock::now();
  return emit(built, cfg, std::chrono::duration<double, std::milli>(t1 - t0).count());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact and asymptotic probabilities that all eigenvalues of Gaussian and "
               "Wishart-type random matrices lie in an interval"};
  app.require_subcommand(1);
  CliState st;

  auto* psi_cmd = app.add_subcommand("psi", "exact psi(a,b) = Pr(all eigenvalues in [a,b])");
  add_ensemble_flags(psi_cmd, st);
  add_common_flags(psi_cmd, st);
  psi_cmd->add_option("--interval", st.interval_tokens, "LO HI (accepts inf / -inf)")
      ->expected(2);

  auto* cdfmax_cmd = app.add_subcommand("cdf-max", "CDF of the largest eigenvalue");
  add_ensemble_flags(cdfmax_cmd, st);
  add_common_flags(cdfmax_cmd, st);
  cdfmax_cmd->add_option("--at", st.at, "evaluation point")->required();

  auto* cdfmin_cmd = app.add_subcommand("cdf-min", "CDF of the smallest eigenvalue");
  add_ensemble_flags(cdfmin_cmd, st);
  add_common_flags(cdfmin_cmd, st);
  cdfmin_cmd->add_option("--at", st.at, "evaluation point")->required();

  auto* approx_cmd = app.add_subcommand("approx", "gamma-surrogate approximation of psi(a,b)");
  add_ensemble_flags(approx_cmd, st);
  add_common_flags(approx_cmd, st);
  approx_cmd->add_option("--interval", st.interval_tokens, "LO HI (accepts inf / -inf)")
      ->expected(2);

  auto* edges_cmd = app.add_subcommand("edges", "edge centering/scaling and bulk support");
  add_ensemble_flags(edges_cmd, st);
  add_common_flags(edges_cmd, st);

  auto* table_cmd = app.add_subcommand("table", "reproduce a reference table");
  table_cmd->add_option("id", st.table_id, "goe-negative | wishart-mid | mp-edges | tw-params")
      ->required();
  table_cmd->add_option("--dims", st.dims, "restrict to these dimensions");
  add_common_flags(table_cmd, st);

  auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo cross-check of psi");
  add_ensemble_flags(mc_cmd, st);
  add_common_flags(mc_cmd, st);
  mc_cmd->add_option("--interval", st.interval_tokens, "LO HI (accepts inf / -inf)")->expected(2);
  mc_cmd->add_option("--trials", st.trials, "number of sampled matrices (>= 100)");
  mc_cmd->add_option("--seed", st.seed, "RNG seed");

  auto* cs_cmd = app.add_subcommand("cs", "concentration bounds vs exact eigenvalue tails");
  cs_cmd->add_option("-s", st.cs_s, "submatrix columns (Wishart dimension)");
  cs_cmd->add_option("-m", st.cs_m, "measurement rows (degrees of freedom)");
  cs_cmd->add_option("--t-from", st.t_from, "deviation grid start (> 0)");
  cs_cmd->add_option("--t-to", st.t_to, "deviation grid end");
  cs_cmd->add_option("--t-step", st.t_step, "deviation grid step");
  add_common_flags(cs_cmd, st);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? eb::kExitOk : eb::kExitUsage;
  }

  try {
    if (psi_cmd->parsed()) return run_command(st, true, [](const eb::RunConfig& c) { return eb::report_psi(c); });
    if (cdfmax_cmd->parsed())
      return run_command(st, false, [](const eb::RunConfig& c) { return eb::report_cdf(c, true); });
    if (cdfmin_cmd->parsed())
      return run_command(st, false, [](const eb::RunConfig& c) { return eb::report_cdf(c, false); });
    if (approx_cmd->parsed())
      return run_command(st, true, [](const eb::RunConfig& c) { return eb::report_approx(c); });
    if (edges_cmd->parsed())
      return run_command(st, false, [](const eb::RunConfig& c) { return eb::report_edges(c); });
    if (mc_cmd->parsed())
      return run_command(st, true, [](const eb::RunConfig& c) { return eb::report_mc(c); });
    if (cs_cmd->parsed()) {
      eb::RunConfig cfg;
      cfg.cs_s = st.cs_s;
      cfg.cs_m = st.cs_m;
      cfg.t_from = st.t_from;
      cfg.t_to = st.t_to;
      cfg.t_step = st.t_step;
      cfg.precision_bits = st.precision;
      cfg.no_meta = st.no_meta;
      if (!eb::format_from_name(st.format, &cfg.format))
        throw std::domain_error("--format: expected json, csv or plain");
      if (cfg.cs_s > cfg.cs_m) throw std::domain_error("cs: requires s <= m");
      auto t0 = std::chrono::steady_clock::now();
      eb::BuiltReport built = eb::report_cs(cfg);
      auto t1 = std::chrono::steady_clock::now();
      return emit(built, cfg, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    if (table_cmd->parsed()) {
      eb::RunConfig cfg;
      cfg.table_id = st.table_id;
      cfg.table_dims = st.dims;
      cfg.precision_bits = st.precision;
      cfg.no_meta = st.no_meta;
      if (!eb::format_from_name(st.format, &cfg.format))
        throw std::domain_error("--format: expected json, csv or plain");
      auto t0 = std::chrono::steady_clock::now();
      eb::BuiltReport built = eb::report_table(cfg);
      auto t1 = std::chrono::steady_clock::now();
      return emit(built, cfg, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
  } catch (const eb::unsupported_sampling_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return eb::kExitUnsupportedSampling;
  } catch (const eb::internal_consistency_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.get_name() << ": " << e.what() << "\n";
    return eb::kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return eb::kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return eb::kExitUsage;
  }
  return eb::kExitUsage;
}
