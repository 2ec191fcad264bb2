#pragma once

#include <cstdint>
#include <vector>

#include "swarmsim/engine.hpp"
#include "swarmsim/params.hpp"

namespace swarmsim {

// Full factorial sweep: policies x bc_levels x b_levels, `reps` replications
// per cell. Scenario ids enumerate policy-major, then bc, then b.
struct SweepPlan {
  ScenarioParams base;
  std::vector<Policy> policies = {Policy::BL, Policy::CT};
  std::vector<double> bc_levels = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15};
  std::vector<double> b_levels = {30, 40};
  int reps = 100;
  std::uint64_t master_seed = 1;

  int cell_count() const {
    return static_cast<int>(policies.size() * bc_levels.size() * b_levels.size());
  }
  int total_runs() const { return cell_count() * reps; }

  // Parameters of one cell; scenario_id in [0, cell_count).
  ScenarioParams cell_params(int scenario_id) const;
};

// Stable avalanche mix of (master, scenario_id, rep). Pure; wall-clock never
// enters, so any subset of cells can be re-run in isolation and match the
// full sweep.
std::uint64_t derive_seed(std::uint64_t master, int scenario_id, int rep);

// Executes every (cell, rep) and returns results ordered by
// (scenario_id, rep), identical for any worker count. All cells are
// validated before the first run starts.
std::vector<RunResult> run_sweep(const SweepPlan& plan, int parallelism);

// Cross-replication aggregate of one cell: the three outcome metrics and
// their sample standard deviations (0 when reps == 1).
struct ScenarioSummary {
  int scenario_id = 0;
  int n_reps = 0;
  double avg_remaining = 0.0;
  double pct_finished = 0.0;
  double avg_utility = 0.0;
  double sd_remaining = 0.0;
  double sd_finished = 0.0;  // over the per-rep indicator scaled to percent
  double sd_utility = 0.0;
};

// One summary per cell, in scenario id order. Input order is irrelevant;
// an incomplete cell raises std::runtime_error naming it.
std::vector<ScenarioSummary> aggregate(const std::vector<RunResult>& results,
                                       const SweepPlan& plan);

}  // namespace swarmsim
