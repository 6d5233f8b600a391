#pragma once

#include <string>
#include <vector>

#include "rgg/cli/records.hpp"

namespace rgg::cli {

struct TableRow {
  double x = 0.0;
  double mean = 0.0;
  double stderr_ = 0.0;
  std::size_t reps = 0;
};

/// One convergence table: value against n (thermo, dense), against lambda
/// (box, cluster, sweep) or against s (density).
struct Table {
  std::string key;     // file stem, e.g. thermo_sigma_d2
  std::string x_name;  // n, lambda or s
  std::vector<TableRow> rows;  // sorted by x
};

/// Groups estimator payloads by (mode, functional, weight, d). sample,
/// solve and proptest records are ignored; anything else without readable
/// estimator reports is skipped with a warning.
std::vector<Table> build_tables(const std::vector<ResultRecord>& records, std::vector<std::string>& warnings);

std::string dat_text(const Table& t);
std::string gnuplot_text(const Table& t);
/// Writes <dir>/<key>.dat and <dir>/<key>.gp per table.
void write_tables(const std::vector<Table>& tables, const std::string& dir);

}  // namespace rgg::cli
