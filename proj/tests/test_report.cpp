#include "spinorlab/report.hpp"

#include <doctest.h>

#include <sstream>

using namespace spinorlab;

TEST_CASE("verify suite passes at the default parameters") {
  RunParams rp;  // a=1, b=2
  const auto records = run_verify(rp);
  CHECK(records.size() > 15);
  for (const auto& r : records) {
    CAPTURE(r.check);
    CHECK(r.verdict != "fail");
  }
  CHECK_FALSE(any_failed(records));
}

TEST_CASE("off-branch parameters fail exactly the lambda equations") {
  RunParams rp;
  rp.b = 2.5;
  const auto records = run_verify(rp);
  CHECK(any_failed(records));
  for (const auto& r : records) {
    CAPTURE(r.check);
    if (r.check == "lambda-equations")
      CHECK(r.verdict == "fail");
    else
      CHECK(r.verdict != "fail");
  }
}

TEST_CASE("records serialize deterministically with the fingerprint") {
  ReportRecord r{"demo", nlohmann::json{{"a", 1.0}}, 0.5, "fail"};
  const nlohmann::json j = record_json(r);
  CHECK(j.at("check") == "demo");
  CHECK(j.at("verdict") == "fail");
  CHECK(j.contains("fingerprint"));
  CHECK(j.at("fingerprint").contains("metric"));

  std::ostringstream a, b;
  write_records(a, {r}, "json");
  write_records(b, {r}, "json");
  CHECK(a.str() == b.str());

  std::ostringstream csv;
  write_records(csv, {r}, "csv");
  CHECK(csv.str().rfind("check,params,residual,verdict,fingerprint\n", 0) == 0);
}

TEST_CASE("axis ranges") {
  CHECK(AxisRange{0.0, 1.0, 0.5}.values() == std::vector<double>{0.0, 0.5, 1.0});
  CHECK(AxisRange{2.0, 2.0, 1.0}.values() == std::vector<double>{2.0});
  CHECK_THROWS_AS((AxisRange{0.0, 1.0, 0.0}.values()), std::invalid_argument);
}

TEST_CASE("single-point sweep") {
  SweepConfig cfg;
  cfg.b = {2.0, 2.0, 1.0};
  cfg.beta1 = {0.6, 0.6, 1.0};
  cfg.beta2 = {0.8, 0.8, 1.0};
  const auto records = run_sweep(cfg);
  REQUIRE(records.size() == 3);  // compatibility, dispersion, summary
  CHECK(records[0].check == "compatibility");
  CHECK(records[0].verdict == "pass");
  CHECK(records[1].check == "dispersion");
  CHECK(records[2].check == "compatibility-summary");
  CHECK(records[2].verdict == "pass");
}

TEST_CASE("config parsing") {
  const auto rp = run_params_from_json(nlohmann::json::parse(
      R"({"a": 1.0, "b": 2.0, "m": 1.0, "tol": 1e-10, "seed": 7, "count": 5})"));
  CHECK(rp.sampling.seed == 7);
  CHECK(rp.sampling.count == 5);

  CHECK_THROWS_AS(run_params_from_json(nlohmann::json::parse(R"({"m": -1.0})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      sweep_config_from_json(nlohmann::json::parse(R"({"format": "xml"})")),
      std::invalid_argument);

  const auto cfg = sweep_config_from_json(nlohmann::json::parse(
      R"({"b": 2.0, "beta1": {"min": 0.0, "max": 1.0, "step": 0.5}})"));
  CHECK(cfg.b.values() == std::vector<double>{2.0});
  CHECK(cfg.beta1.values() == std::vector<double>{0.0, 0.5, 1.0});
}
