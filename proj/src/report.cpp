#include "eigenband/report.hpp"

#include <cmath>
#include <sstream>

#include "eigenband/asymptotics.hpp"
#include "eigenband/sampling.hpp"
#include "eigenband/tables.hpp"

namespace eigenband {

namespace {

PsiOptions psi_opts(const RunConfig& cfg) {
  PsiOptions o;
  o.precision_bits = cfg.precision_bits;
  return o;
}

std::string log10_str(const PsiResult& r, int digits = 15) {
  if (r.log_value.is_inf()) return r.log_value.sign() < 0 ? "-inf" : "inf";
  BigReal l10 = r.log_value / log(BigReal(10.0, r.log_value.precision()));
  return l10.str(digits);
}

// probability rendered as value (if representable in double) plus log10
Json prob_from_log(double value, double log10v, const std::string& log10s) {
  Json j;
  j["value"] = value;
  if (std::isinf(log10v))
    j["log10"] = num_or_inf(log10v);
  else
    j["log10"] = log10v;
  j["log10_str"] = log10s;
  return j;
}

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, Json>>& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array()) {
    for (size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out.emplace_back(prefix, j);
  }
}

std::string scalar_str(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

bool format_from_name(const std::string& name, OutputFormat* out) {
  if (name == "json") *out = OutputFormat::Json;
  else if (name == "csv") *out = OutputFormat::Csv;
  else if (name == "plain") *out = OutputFormat::Plain;
  else return false;
  return true;
}

Json num_or_inf(double x) {
  if (std::isinf(x)) return x > 0 ? Json("inf") : Json("-inf");
  return Json(x);
}

Json json_interval(const Interval& iv) {
  Json j;
  j["lo"] = num_or_inf(iv.lo);
  j["hi"] = num_or_inf(iv.hi);
  return j;
}

Json json_ensemble(const EnsembleSpec& spec) {
  Json j;
  j["kind"] = kind_name(spec.kind);
  j["p"] = spec.p;
  if (spec.is_wishart()) j["m"] = spec.m;
  if (spec.is_beta()) {
    j["beta_m"] = spec.beta_m;
    j["beta_n"] = spec.beta_n;
  }
  if (spec.kind == Kind::ComplexWishartCorrelated) j["sigma"] = spec.sigma;
  if (spec.kind == Kind::ComplexWishartSpiked) {
    j["sigma1"] = spec.sigma1;
    j["sigma2"] = spec.sigma2;
  }
  return j;
}

Json json_prob(const PsiResult& r) {
  Json j = prob_from_log(r.value, r.log10_value(), log10_str(r));
  j["precision_bits"] = r.precision_bits_used;
  j["converged"] = r.converged;
  return j;
}

BuiltReport report_psi(const RunConfig& cfg) {
  PsiResult r = psi(cfg.spec, cfg.interval, psi_opts(cfg));
  Json j;
  j["command"] = "psi";
  j["ensemble"] = json_ensemble(cfg.spec);
  j["interval"] = json_interval(cfg.interval);
  j["result"] = json_prob(r);
  return {j, r.converged};
}

BuiltReport report_cdf(const RunConfig& cfg, bool largest) {
  PsiResult r = largest ? cdf_largest(cfg.spec, cfg.at, psi_opts(cfg))
                        : cdf_smallest(cfg.spec, cfg.at, psi_opts(cfg));
  Json j;
  j["command"] = largest ? "cdf-max" : "cdf-min";
  j["ensemble"] = json_ensemble(cfg.spec);
  j["at"] = cfg.at;
  j["result"] = json_prob(r);
  return {j, r.converged};
}

BuiltReport report_approx(const RunConfig& cfg) {
  double v = psi_approx(cfg.spec, cfg.interval);
  Json j;
  j["command"] = "approx";
  j["ensemble"] = json_ensemble(cfg.spec);
  j["interval"] = json_interval(cfg.interval);
  j["result"]["value"] = v;
  j["result"]["log10"] = v > 0 ? Json(std::log10(v)) : Json("-inf");
  return {j, true};
}

BuiltReport report_edges(const RunConfig& cfg) {
  Json j;
  j["command"] = "edges";
  j["ensemble"] = json_ensemble(cfg.spec);
  EdgeScaling e = edge_scaling(cfg.spec);
  j["scaling"] = {{"mu_plus", e.mu_plus},
                  {"sigma_plus", e.sigma_plus},
                  {"mu_minus", e.mu_minus},
                  {"sigma_minus", e.sigma_minus}};
  Interval bulk = cfg.spec.is_wishart() ? mp_support(cfg.spec.p, cfg.spec.m)
                                        : semicircle_support(cfg.spec.p);
  j["bulk_support"] = json_interval(bulk);
  bool complex_case = cfg.spec.kind == Kind::ComplexWishartWhite || cfg.spec.kind == Kind::GUE;
  j["edge_prob_limit"] = {
      {"surrogate", edge_prob_limit(complex_case ? FieldCase::Complex : FieldCase::Real)},
      {"exact", complex_case ? kEdgeProbLimitComplexExact : kEdgeProbLimitRealExact}};
  return {j, true};
}

BuiltReport report_table(const RunConfig& cfg) {
  Json j;
  j["command"] = "table";
  j["id"] = cfg.table_id;
  Json rows = Json::array();
  PsiOptions opts = psi_opts(cfg);
  bool converged = true;
  auto dims_or = [&](std::vector<int> defaults) {
    return cfg.table_dims.empty() ? defaults : cfg.table_dims;
  };
  if (cfg.table_id == "goe-negative") {
    for (const auto& row : table_goe_negative(dims_or(default_goe_negative_dims()), opts)) {
      Json r;
      r["n"] = row.n;
      r["exact"] = row.exact.value;
      r["exact_log10"] = row.exact.log10_value();
      r["approx_basic"] = std::exp(row.log_basic);
      r["approx_basic_log10"] = row.log_basic / std::log(10.0);
      r["approx_corrected"] = std::exp(row.log_corrected);
      r["approx_corrected_log10"] = row.log_corrected / std::log(10.0);
      r["converged"] = row.exact.converged;
      converged = converged && row.exact.converged;
      rows.push_back(r);
    }
  } else if (cfg.table_id == "wishart-mid") {
    for (const auto& row : table_wishart_mid(dims_or(default_wishart_mid_dims()), opts)) {
      Json r;
      r["p"] = row.p;
      r["exact"] = row.exact.value;
      r["exact_log10"] = row.exact.log10_value();
      r["converged"] = row.exact.converged;
      converged = converged && row.exact.converged;
      rows.push_back(r);
    }
  } else if (cfg.table_id == "mp-edges") {
    for (const auto& cell :
         table_mp_edges(dims_or(default_mp_edge_dims()), default_mp_edge_ratios(), opts)) {
      Json r;
      r["p"] = cell.p;
      r["ratio"] = cell.ratio;
      r["m"] = cell.m;
      r["exact"] = cell.exact.value;
      r["limit"] = cell.limit;
      r["converged"] = cell.exact.converged;
      converged = converged && cell.exact.converged;
      rows.push_back(r);
    }
  } else if (cfg.table_id == "tw-params") {
    for (const auto& par : table_tw_params()) {
      Json r;
      r["beta"] = par.beta;
      r["k"] = par.k;
      r["theta"] = par.theta;
      r["alpha"] = par.alpha;
      rows.push_back(r);
    }
  } else {
    throw std::domain_error("table: unknown id '" + cfg.table_id +
                            "' (expected goe-negative | wishart-mid | mp-edges | tw-params)");
  }
  j["rows"] = rows;
  return {j, converged};
}

BuiltReport report_mc(const RunConfig& cfg) {
  McEstimate mc = mc_psi(cfg.spec, cfg.interval, cfg.trials, cfg.seed);
  PsiResult exact = psi(cfg.spec, cfg.interval, psi_opts(cfg));
  double z;
  if (mc.std_err > 0)
    z = (mc.estimate - exact.value) / mc.std_err;
  else
    z = (mc.estimate == exact.value) ? 0.0 : HUGE_VAL;
  Json j;
  j["command"] = "mc";
  j["ensemble"] = json_ensemble(cfg.spec);
  j["interval"] = json_interval(cfg.interval);
  j["seed"] = cfg.seed;
  j["result"] = {{"estimate", mc.estimate}, {"std_err", mc.std_err},
                 {"hits", mc.hits},         {"trials", mc.trials},
                 {"exact", exact.value},    {"exact_log10", exact.log10_value()},
                 {"z_score", num_or_inf(z)}};
  return {j, exact.converged};
}

BuiltReport report_cs(const RunConfig& cfg) {
  std::vector<double> grid;
  for (double t = cfg.t_from; t <= cfg.t_to + 1e-12; t += cfg.t_step) grid.push_back(t);
  auto rows = cs_concentration_bounds(cfg.cs_s, cfg.cs_m, grid, psi_opts(cfg));
  Json j;
  j["command"] = "cs";
  j["s"] = cfg.cs_s;
  j["m"] = cfg.cs_m;
  Json arr = Json::array();
  for (const auto& r : rows) {
    Json row;
    row["t"] = r.t;
    row["threshold_upper"] = r.threshold_upper;
    row["threshold_lower"] = r.threshold_lower;
    row["tail_bound"] = r.tail_bound;
    row["exact_upper"] = r.exact_upper;
    row["exact_lower"] = r.exact_lower;
    row["approx_upper"] = r.approx_upper;
    row["approx_lower"] = r.approx_lower;
    row["log10_exact_upper"] = num_or_inf(r.log10_exact_upper);
    row["log10_exact_lower"] = num_or_inf(r.log10_exact_lower);
    arr.push_back(row);
  }
  j["rows"] = arr;
  return {j, true};
}

std::string render(const Json& payload, OutputFormat format) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::Json:
      os << payload.dump(2) << "\n";
      break;
    case OutputFormat::Csv: {
      if (payload.contains("rows") && payload["rows"].is_array() && !payload["rows"].empty()) {
        const Json& rows = payload["rows"];
        bool first = true;
        for (auto it = rows[0].begin(); it != rows[0].end(); ++it) {
          os << (first ? "" : ",") << csv_escape(it.key());
          first = false;
        }
        os << "\n";
        for (const auto& row : rows) {
          first = true;
          for (auto it = row.begin(); it != row.end(); ++it) {
            os << (first ? "" : ",") << csv_escape(scalar_str(it.value()));
            first = false;
          }
          os << "\n";
        }
      } else {
        std::vector<std::pair<std::string, Json>> items;
        flatten(payload, "", items);
        bool first = true;
        for (const auto& [k, v] : items) {
          (void)v;
          os << (first ? "" : ",") << csv_escape(k);
          first = false;
        }
        os << "\n";
        first = true;
        for (const auto& [k, v] : items) {
          (void)k;
          os << (first ? "" : ",") << csv_escape(scalar_str(v));
          first = false;
        }
        os << "\n";
      }
      break;
    }
    case OutputFormat::Plain: {
      if (payload.contains("rows") && payload["rows"].is_array()) {
        for (auto it = payload.begin(); it != payload.end(); ++it) {
          if (it.key() == "rows") continue;
          std::vector<std::pair<std::string, Json>> items;
          flatten(it.value(), it.key(), items);
          for (const auto& [k, v] : items) os << k << ": " << scalar_str(v) << "\n";
        }
        for (const auto& row : payload["rows"]) {
          bool first = true;
          for (auto it = row.begin(); it != row.end(); ++it) {
            os << (first ? "" : "  ") << it.key() << "=" << scalar_str(it.value());
            first = false;
          }
          os << "\n";
        }
      } else {
        std::vector<std::pair<std::string, Json>> items;
        flatten(payload, "", items);
        for (const auto& [k, v] : items) os << k << ": " << scalar_str(v) << "\n";
      }
      break;
    }
  }
  return os.str();
}

}  // namespace eigenband
