#include "rgg/cli/report.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "rgg/errors.hpp"

namespace rgg::cli {

namespace {

std::string sanitize(std::string s) {
  for (char& ch : s) {
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_' && ch != '-') ch = '_';
  }
  return s;
}

}  // namespace

std::vector<Table> build_tables(const std::vector<ResultRecord>& records, std::vector<std::string>& warnings) {
  std::map<std::string, Table> groups;
  for (const auto& rec : records) {
    const auto& p = rec.payload;
    if (p.is_object() && p.contains("kind") && p["kind"].is_string()) {
      const auto kind = p["kind"].get<std::string>();
      if (kind == "sample" || kind == "solve" || kind == "proptest") continue;
    }
    if (!p.is_object() || !p.contains("reports") || !p["reports"].is_array()) {
      warnings.push_back("record " + rec.id + ": no estimator reports, skipped");
      continue;
    }
    for (const auto& j : p["reports"]) {
      est::EstimatorReport r;
      try {
        r = estimator_report_from_json(j);
      } catch (const std::exception& e) {
        warnings.push_back("record " + rec.id + ": malformed report skipped (" + e.what() + ")");
        continue;
      }
      std::string key = r.mode + "_" + r.functional;
      if (!r.weight.empty()) key += "_" + r.weight;
      key = sanitize(key + "_d" + std::to_string(r.dim));
      Table& t = groups[key];
      t.key = key;
      double x = r.lambda;
      t.x_name = "lambda";
      if (r.mode == "thermo" || r.mode == "dense") {
        x = static_cast<double>(r.n);
        t.x_name = "n";
      } else if (r.mode == "density") {
        x = r.s;
        t.x_name = "s";
      }
      t.rows.push_back(TableRow{x, r.mean, r.stderr_, r.reps});
    }
  }
  std::vector<Table> out;
  for (auto& [k, t] : groups) {
    std::stable_sort(t.rows.begin(), t.rows.end(), [](const TableRow& a, const TableRow& b) { return a.x < b.x; });
    out.push_back(std::move(t));
  }
  return out;
}

std::string dat_text(const Table& t) {
  std::ostringstream o;
  o.precision(10);
  o << "# " << t.key << "\n# " << t.x_name << " mean stderr reps\n";
  for (const auto& r : t.rows) o << r.x << ' ' << r.mean << ' ' << r.stderr_ << ' ' << r.reps << '\n';
  return o.str();
}

std::string gnuplot_text(const Table& t) {
  std::ostringstream o;
  o << "set terminal pngcairo size 800,500\n"
    << "set output '" << t.key << ".png'\n"
    << "set xlabel '" << t.x_name << "'\n"
    << "set ylabel 'mean'\n";
  if (t.x_name == "n") o << "set logscale x\n";
  o << "plot '" << t.key << ".dat' using 1:2:3 with yerrorlines title '" << t.key << "'\n";
  return o.str();
}

void write_tables(const std::vector<Table>& tables, const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& t : tables) {
    for (const auto& [ext, text] : {std::pair{".dat", dat_text(t)}, std::pair{".gp", gnuplot_text(t)}}) {
      const auto path = std::filesystem::path(dir) / (t.key + ext);
      std::ofstream out(path);
      if (!out) throw ValidationError("cannot write " + path.string());
      out << text;
    }
  }
}

}  // namespace rgg::cli
