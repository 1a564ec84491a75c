#include <doctest.h>

#include <cmath>

#include "eigenband/report.hpp"

using namespace eigenband;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("JSON payloads round-trip exactly") {
  RunConfig cfg;
  cfg.spec = EnsembleSpec::goe(3);
  cfg.interval = Interval(-kInf, 0.0);
  BuiltReport rep = report_psi(cfg);
  std::string text = render(rep.payload, OutputFormat::Json);
  Json back = Json::parse(text);
  CHECK(back == rep.payload);
  CHECK(back["interval"]["lo"] == "-inf");
  CHECK(back["result"]["value"].get<double>() ==
        rep.payload["result"]["value"].get<double>());
}

TEST_CASE("infinite endpoints are encoded as strings") {
  CHECK(num_or_inf(kInf) == Json("inf"));
  CHECK(num_or_inf(-kInf) == Json("-inf"));
  CHECK(num_or_inf(1.5) == Json(1.5));
}

TEST_CASE("probability fields carry value and 15-digit log10") {
  RunConfig cfg;
  cfg.spec = EnsembleSpec::goe(5);
  cfg.interval = Interval(-kInf, 0.0);
  BuiltReport rep = report_psi(cfg);
  const Json& res = rep.payload["result"];
  double value = res["value"].get<double>();
  CHECK(value == doctest::Approx(1.401146854634e-4).epsilon(1e-10));
  double l10 = res["log10"].get<double>();
  CHECK(std::pow(10.0, l10) == doctest::Approx(value).epsilon(1e-12));
  CHECK(res["log10_str"].get<std::string>().size() >= 15);
  CHECK(res["converged"].get<bool>());
}

TEST_CASE("csv output has a header and data row") {
  RunConfig cfg;
  cfg.spec = EnsembleSpec::real_wishart(2, 2);
  cfg.interval = Interval(0.0, 2.0);
  BuiltReport rep = report_psi(cfg);
  std::string text = render(rep.payload, OutputFormat::Csv);
  size_t newlines = std::count(text.begin(), text.end(), '\n');
  CHECK(newlines == 2);
  CHECK(text.find("result.value") != std::string::npos);
  CHECK(text.find(',') != std::string::npos);
  // decimal separator is '.'
  CHECK(text.find("0.315") != std::string::npos);
}

TEST_CASE("table payload rows") {
  RunConfig cfg;
  cfg.table_id = "tw-params";
  BuiltReport rep = report_table(cfg);
  REQUIRE(rep.payload["rows"].size() == 3);
  CHECK(rep.payload["rows"][0]["k"].get<double>() == 46.446);
  std::string csv = render(rep.payload, OutputFormat::Csv);
  CHECK(csv.rfind("beta,k,theta,alpha", 0) == 0);

  cfg.table_id = "goe-negative";
  cfg.table_dims = {2, 5};
  BuiltReport goe = report_table(cfg);
  REQUIRE(goe.payload["rows"].size() == 2);
  CHECK(goe.payload["rows"][0]["exact"].get<double>() ==
        doctest::Approx(0.1464466094067262).epsilon(1e-12));
  CHECK(goe.payload["rows"][1]["approx_corrected"].get<double>() ==
        doctest::Approx(1.53e-4).epsilon(3e-3));

  RunConfig bad;
  bad.table_id = "nope";
  CHECK_THROWS_AS(report_table(bad), std::domain_error);
}

TEST_CASE("mc report includes the exact value and a z-score") {
  RunConfig cfg;
  cfg.spec = EnsembleSpec::goe(2);
  cfg.interval = Interval(-kInf, 0.0);
  cfg.trials = 200000;
  cfg.seed = 99;
  BuiltReport rep = report_mc(cfg);
  const Json& res = rep.payload["result"];
  CHECK(res["trials"].get<long>() == 200000);
  CHECK(res["exact"].get<double>() == doctest::Approx((2 - std::sqrt(2.0)) / 4).epsilon(1e-12));
  CHECK(std::fabs(res["z_score"].get<double>()) < 4.0);
  // identical seeds give identical reports
  BuiltReport rep2 = report_mc(cfg);
  CHECK(rep.payload == rep2.payload);
}

TEST_CASE("format name parsing") {
  OutputFormat f;
  CHECK(format_from_name("json", &f));
  CHECK(f == OutputFormat::Json);
  CHECK(format_from_name("csv", &f));
  CHECK(format_from_name("plain", &f));
  CHECK_FALSE(format_from_name("yaml", &f));
}
