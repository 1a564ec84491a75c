#ifndef EIGENBAND_REPORT_HPP
#define EIGENBAND_REPORT_HPP

#include <cstdint>
#include <string>

#include <json.hpp>

#include "eigenband/ensemble.hpp"
#include "eigenband/psi.hpp"

namespace eigenband {

using Json = nlohmann::ordered_json;

enum class OutputFormat { Json, Csv, Plain };
bool format_from_name(const std::string& name, OutputFormat* out);

// Exit code contract (stable): 0 success, 2 usage, 3 non-convergence,
// 4 unsupported sampling.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNoConvergence = 3;
constexpr int kExitUnsupportedSampling = 4;

struct RunConfig {
  EnsembleSpec spec;
  Interval interval;
  double at = 0;               // cdf threshold
  int precision_bits = 0;      // 0 = adaptive
  OutputFormat format = OutputFormat::Plain;
  std::uint64_t seed = 1;
  long trials = 1000000;
  bool no_meta = false;
  std::string table_id;
  std::vector<int> table_dims;  // optional row subset for `table`
  int cs_s = 10, cs_m = 400;
  double t_from = 0.01, t_to = 1.0, t_step = 0.01;
};

struct BuiltReport {
  Json payload;
  bool converged = true;
};

// Payload builders (pure; no output, no timing).
BuiltReport report_psi(const RunConfig& cfg);
BuiltReport report_cdf(const RunConfig& cfg, bool largest);
BuiltReport report_approx(const RunConfig& cfg);
BuiltReport report_edges(const RunConfig& cfg);
BuiltReport report_table(const RunConfig& cfg);
BuiltReport report_mc(const RunConfig& cfg);
BuiltReport report_cs(const RunConfig& cfg);

// JSON fragments. Infinite endpoints are encoded as the strings "inf"/"-inf"
// (JSON numbers cannot carry infinities); probabilities carry both a decimal
// value (0 when below ~1e-308) and log10 to 15 significant digits.
Json num_or_inf(double x);
Json json_interval(const Interval& iv);
Json json_ensemble(const EnsembleSpec& spec);
Json json_prob(const PsiResult& r);

// Renders a payload. CSV emits the "rows" array if present (header from the
// first row), otherwise one flattened record; plain is line-oriented
// "key: value" with a column layout for rows. JSON round-trips exactly.
std::string render(const Json& payload, OutputFormat format);

}  // namespace eigenband

#endif  // EIGENBAND_REPORT_HPP
