#include "rgg/cli/records.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>

#include "rgg/errors.hpp"

namespace rgg::cli {

using nlohmann::json;

namespace {

std::string utc_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string num(double v) {
  std::ostringstream o;
  o.precision(10);
  o << v;
  return o.str();
}

}  // namespace

ResultRecord make_record(const ExperimentConfig& config, json payload) {
  ResultRecord r;
  r.id = config.id();
  r.timestamp = utc_now();
  r.config = config;
  r.payload = std::move(payload);
  return r;
}

json to_json(const ResultRecord& r) {
  return json{{"id", r.id}, {"timestamp", r.timestamp}, {"version", r.version}, {"config", r.config.values()},
              {"payload", r.payload}};
}

ResultRecord record_from_json(const json& j) {
  try {
    ResultRecord r;
    r.id = j.at("id").get<std::string>();
    r.timestamp = j.at("timestamp").get<std::string>();
    r.version = j.at("version").get<std::string>();
    for (const auto& [k, v] : j.at("config").items()) r.config.set(k, v.get<std::string>());
    r.payload = j.at("payload");
    return r;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed record: ") + e.what());
  }
}

void append_record(const std::string& path, const ResultRecord& r) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw ValidationError("cannot append to " + path);
  out << to_json(r).dump() << '\n';
}

std::vector<ResultRecord> read_records(std::istream& in, std::vector<std::string>& warnings) {
  std::vector<ResultRecord> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(record_from_json(json::parse(line)));
    } catch (const std::exception& e) {
      warnings.push_back("line " + std::to_string(line_no) + " skipped: " + e.what());
    }
  }
  return out;
}

std::vector<ResultRecord> read_records_file(const std::string& path, std::vector<std::string>& warnings) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open records file: " + path);
  return read_records(in, warnings);
}

json to_json(const est::EstimatorReport& r) {
  json j{{"mode", r.mode},   {"functional", r.functional}, {"weight", r.weight}, {"d", r.dim},
         {"lambda", r.lambda}, {"s", r.s},                 {"n", r.n},           {"t", r.t},
         {"r", r.r},         {"reps", r.reps},             {"mean", r.mean},     {"stderr", r.stderr_},
         {"seed", r.seed},   {"elapsed_ms", r.elapsed_ms}, {"heuristic_reps", r.heuristic_reps},
         {"failed_reps", r.failed_reps}};
  if (!r.values.empty()) j["values"] = r.values;
  return j;
}

est::EstimatorReport estimator_report_from_json(const json& j) {
  est::EstimatorReport r;
  r.mode = j.at("mode").get<std::string>();
  r.functional = j.at("functional").get<std::string>();
  r.weight = j.value("weight", "");
  r.dim = j.at("d").get<int>();
  r.lambda = j.value("lambda", 0.0);
  r.s = j.value("s", 0.0);
  r.n = j.value("n", std::size_t{0});
  r.t = j.value("t", 0.0);
  r.r = j.value("r", 0.0);
  r.reps = j.at("reps").get<std::size_t>();
  r.mean = j.at("mean").get<double>();
  r.stderr_ = j.at("stderr").get<double>();
  r.seed = j.value("seed", std::uint64_t{0});
  r.elapsed_ms = j.value("elapsed_ms", 0.0);
  r.heuristic_reps = j.value("heuristic_reps", std::size_t{0});
  r.failed_reps = j.value("failed_reps", std::size_t{0});
  if (j.contains("values")) r.values = j.at("values").get<std::vector<double>>();
  return r;
}

json to_json(const SolveResult& r) {
  json j{{"value", r.value}, {"exact", r.exact}, {"lower", r.lower}, {"upper", r.upper},
         {"witness_kind", r.witness_kind}, {"elapsed_ms", r.elapsed_ms}};
  if (!r.vertices.empty()) j["vertices"] = r.vertices;
  if (!r.parts.empty()) j["parts"] = r.parts;
  if (!r.edges.empty()) j["edges"] = r.edges;
  return j;
}

json to_json(const prop::PropertyReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"seed", f.seed}, {"index", f.index}, {"detail", f.detail}, {"instance", f.instance}});
  }
  return json{{"property", r.property}, {"functional", r.functional}, {"d", r.dim},
              {"trials", r.trials},     {"passed", r.passed},         {"violations", r.violations},
              {"skipped", r.skipped},   {"not_applicable", r.not_applicable}, {"checked", r.checked},
              {"failures", failures},   {"elapsed_ms", r.elapsed_ms}};
}

json to_json(const prop::SuiteReport& r) {
  json reports = json::array();
  for (const auto& p : r.reports) reports.push_back(to_json(p));
  return json{{"ok", r.ok()}, {"violations", r.violations()}, {"reports", reports}};
}

std::string csv_row(const est::EstimatorReport& r) {
  std::string f = r.functional;
  if (!r.weight.empty()) f += "[" + r.weight + "]";
  return r.mode + "," + f + "," + std::to_string(r.dim) + "," + num(r.lambda) + "," + num(r.s) + "," +
         std::to_string(r.n) + "," + num(r.t) + "," + std::to_string(r.reps) + "," + num(r.mean) + "," +
         num(r.stderr_) + "," + std::to_string(r.seed) + "," + num(r.elapsed_ms);
}

}  // namespace rgg::cli
