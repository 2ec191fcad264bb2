#include "swarmsim/sweep.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

namespace swarmsim {

ScenarioParams SweepPlan::cell_params(int scenario_id) const {
  if (scenario_id < 0 || scenario_id >= cell_count())
    throw std::out_of_range("scenario_id out of range");
  const int nb = static_cast<int>(b_levels.size());
  const int nbc = static_cast<int>(bc_levels.size());
  const int b_idx = scenario_id % nb;
  const int bc_idx = (scenario_id / nb) % nbc;
  const int policy_idx = scenario_id / (nb * nbc);

  ScenarioParams p = base;
  p.policy = policies[policy_idx];
  p.bc_mean = bc_levels[bc_idx];
  p.b_pct = b_levels[b_idx];
  return p;
}

std::uint64_t derive_seed(std::uint64_t master, int scenario_id, int rep) {
  std::uint64_t h = splitmix64(master);
  h = splitmix64(h + static_cast<std::uint64_t>(scenario_id));
  h = splitmix64(h + static_cast<std::uint64_t>(rep));
  return h;
}

std::vector<RunResult> run_sweep(const SweepPlan& plan, int parallelism) {
  if (plan.reps < 1) throw std::invalid_argument("reps >= 1 violated");
  const int cells = plan.cell_count();
  if (cells == 0) throw std::invalid_argument("sweep has no cells");

  // Fail on any invalid cell before simulating anything.
  for (int sid = 0; sid < cells; ++sid) validate_params(plan.cell_params(sid));

  const int total = plan.total_runs();
  std::vector<RunResult> results(total);

  auto worker_body = [&](std::atomic<int>& next) {
    for (int i = next.fetch_add(1); i < total; i = next.fetch_add(1)) {
      const int sid = i / plan.reps;
      const int rep = i % plan.reps;
      RunResult r = run(plan.cell_params(sid), derive_seed(plan.master_seed, sid, rep));
      r.scenario_id = sid;
      r.rep = rep;
      results[i] = r;  // slots are disjoint, no lock needed
    }
  };

  std::atomic<int> next{0};
  if (parallelism <= 1) {
    worker_body(next);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(parallelism);
    for (int w = 0; w < parallelism; ++w) workers.emplace_back([&] { worker_body(next); });
    for (auto& t : workers) t.join();
  }
  return results;
}

namespace {

double sample_sd(const std::vector<double>& xs, double mean) {
  if (xs.size() < 2) return 0.0;
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

}  // namespace

std::vector<ScenarioSummary> aggregate(const std::vector<RunResult>& results,
                                       const SweepPlan& plan) {
  const int cells = plan.cell_count();
  std::vector<std::vector<const RunResult*>> by_cell(cells);
  for (const auto& r : results) {
    if (r.scenario_id < 0 || r.scenario_id >= cells)
      throw std::runtime_error("result for unknown scenario " + std::to_string(r.scenario_id));
    by_cell[r.scenario_id].push_back(&r);
  }

  std::vector<ScenarioSummary> out(cells);
  for (int sid = 0; sid < cells; ++sid) {
    const auto& cell = by_cell[sid];
    if (static_cast<int>(cell.size()) != plan.reps)
      throw std::runtime_error("scenario " + std::to_string(sid) + " incomplete: " +
                               std::to_string(cell.size()) + " of " +
                               std::to_string(plan.reps) + " runs");

    std::vector<double> remaining, finished, utility;
    remaining.reserve(cell.size());
    finished.reserve(cell.size());
    utility.reserve(cell.size());
    for (const RunResult* r : cell) {
      remaining.push_back(static_cast<double>(r->remaining_drones));
      finished.push_back(r->finished ? 100.0 : 0.0);
      utility.push_back(r->utility);
    }

    ScenarioSummary s;
    s.scenario_id = sid;
    s.n_reps = plan.reps;
    const double n = static_cast<double>(plan.reps);
    for (double v : remaining) s.avg_remaining += v;
    for (double v : finished) s.pct_finished += v;
    for (double v : utility) s.avg_utility += v;
    s.avg_remaining /= n;
    s.pct_finished /= n;
    s.avg_utility /= n;
    s.sd_remaining = sample_sd(remaining, s.avg_remaining);
    s.sd_finished = sample_sd(finished, s.pct_finished);
    s.sd_utility = sample_sd(utility, s.avg_utility);
    out[sid] = s;
  }
  return out;
}

}  // namespace swarmsim
