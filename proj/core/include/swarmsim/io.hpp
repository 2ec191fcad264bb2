#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "swarmsim/engine.hpp"
#include "swarmsim/sweep.hpp"

namespace swarmsim {

// Serialized form of one RunResult, one CSV row.
struct RunRecord {
  int scenario_id = 0;
  Policy policy = Policy::BL;
  double bc = 0.0;
  double b = 0.0;
  int rep = 0;
  std::uint64_t seed = 0;
  int ticks_elapsed = 0;
  bool finished = false;
  int remaining_drones = 0;
  double utility = 0.0;
};

RunRecord make_run_record(const RunResult& result, const ScenarioParams& cell);

// Locale-independent decimal formatting, 6 significant digits. Integers and
// seeds are serialized exactly.
std::string format_real(double v);
std::string format_int(std::int64_t v);
std::string format_u64(std::uint64_t v);

// Rows end with '\n'; fields are never quoted.
std::string runs_csv_header();
std::string run_record_row(const RunRecord& rec);
std::string runs_csv(const std::vector<RunResult>& results, const SweepPlan& plan);

std::string summary_csv_header();
std::string summary_csv(const std::vector<ScenarioSummary>& summaries);

// One (filename, contents) pair per (policy, B): columns
// bc,avg_remaining,pct_finished,avg_utility with one row per BC level,
// ready for line plotting.
std::vector<std::pair<std::string, std::string>> plotdata_files(
    const std::vector<ScenarioSummary>& summaries, const SweepPlan& plan);

std::string trace_csv(const std::vector<TraceRow>& rows);

// Parses a runs.csv produced by runs_csv back into results (used by the
// aggregate-recompute checks and available for external tooling).
std::vector<RunResult> parse_runs_csv(const std::string& contents);

}  // namespace swarmsim
