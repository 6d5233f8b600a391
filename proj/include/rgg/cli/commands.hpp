#pragma once

#include <iosfwd>
#include <string>

#include "rgg/cli/config.hpp"

namespace rgg::cli {

constexpr int kExitOk = 0;
constexpr int kExitFailures = 1;  // property violations or failed checks
constexpr int kExitUsage = 2;
constexpr int kExitRuntime = 3;

std::string usage();

/// Copies `<command>.key` entries to `key` unless `key` is already set.
ExperimentConfig promote_section(const ExperimentConfig& cfg);

/// Runs sample, solve, estimate, proptest or report. Results go to
/// `<out>/records.jsonl` (one record per run) plus a human summary on `out`.
int run(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace rgg::cli
