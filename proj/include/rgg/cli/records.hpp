#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "rgg/cli/config.hpp"
#include "rgg/estimators/report.hpp"
#include "rgg/invariants/solve_result.hpp"
#include "rgg/propharness/harness.hpp"

namespace rgg::cli {

inline constexpr const char* kToolVersion = "rgg-limits 1.0.0";

/// One line of a JSONL results file. Records are appended, never rewritten.
struct ResultRecord {
  std::string id;         // ExperimentConfig::id()
  std::string timestamp;  // UTC, ISO 8601
  std::string version = kToolVersion;
  ExperimentConfig config;
  nlohmann::json payload;

  friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

ResultRecord make_record(const ExperimentConfig& config, nlohmann::json payload);

nlohmann::json to_json(const ResultRecord& r);
/// Throws ValidationError on a malformed object.
ResultRecord record_from_json(const nlohmann::json& j);

void append_record(const std::string& path, const ResultRecord& r);
/// Malformed lines are skipped; a message for each goes to `warnings`.
std::vector<ResultRecord> read_records(std::istream& in, std::vector<std::string>& warnings);
std::vector<ResultRecord> read_records_file(const std::string& path, std::vector<std::string>& warnings);

nlohmann::json to_json(const est::EstimatorReport& r);
est::EstimatorReport estimator_report_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SolveResult& r);
nlohmann::json to_json(const prop::PropertyReport& r);
nlohmann::json to_json(const prop::SuiteReport& r);

/// Summary CSV, fixed column order.
inline constexpr const char* kEstimateCsvHeader = "mode,functional,d,lambda,s,n,t,reps,mean,stderr,seed,elapsed_ms";
std::string csv_row(const est::EstimatorReport& r);

}  // namespace rgg::cli
