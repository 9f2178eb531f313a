#pragma once

#include "spinorlab/equations.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace spinorlab {

struct MomentumSampling {
  int count = 20;
  std::uint64_t seed = 42;
  double p_over_m_max = 10.0;
};

/// Scalar parameters for a verification run.
struct RunParams {
  double a = 1.0;
  double b = 2.0;
  double alpha1 = 1.5707963267948966;
  double alpha2 = 0.0;
  double beta1 = 0.6;
  double beta2 = 0.8;
  double m = 1.0;
  double tol = 1e-10;
  MomentumSampling sampling;
};

struct AxisRange {
  double min = 0.0;
  double max = 0.0;
  double step = 1.0;
  std::vector<double> values() const;  // min, min+step, ..., <= max (+eps)
};

struct SweepConfig {
  AxisRange a{1.0, 1.0, 1.0};
  AxisRange b{2.0, 2.0, 1.0};
  AxisRange alpha1{0.0, 0.0, 1.0};
  AxisRange alpha2{0.0, 0.0, 1.0};
  AxisRange beta1{0.0, 2.0, 0.1};
  AxisRange beta2{0.0, 2.0, 0.1};
  double m = 1.0;
  double tol = 1e-10;
  MomentumSampling sampling;
  std::string format = "json";  // json | csv
  std::string out;              // empty = stdout
};

struct ReportRecord {
  std::string check;
  nlohmann::json params;
  double residual = 0.0;
  std::string verdict;  // pass | fail | degenerate
};

nlohmann::json fingerprint_json();
nlohmann::json record_json(const ReportRecord& r);
std::string record_csv_row(const ReportRecord& r);
extern const char* const kCsvHeader;

void write_records(std::ostream& os, const std::vector<ReportRecord>& records,
                   const std::string& format);

/// Full verification suite at fixed parameters; one record per check.
std::vector<ReportRecord> run_verify(const RunParams& params);

/// Grid of compatibility and dispersion records plus one summary record
/// per b value stating the fitted boundary of the consistent set.
std::vector<ReportRecord> run_sweep(const SweepConfig& config);

bool any_failed(const std::vector<ReportRecord>& records);

RunParams run_params_from_json(const nlohmann::json& j);
SweepConfig sweep_config_from_json(const nlohmann::json& j);

}  // namespace spinorlab
