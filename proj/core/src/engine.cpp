#include "swarmsim/engine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace swarmsim {

int capacity(double b_pct, int alive_count) {
  // b_pct * alive first: both factors are exactly representable, so the
  // quotient cannot land just below an integer the way b_pct/100 can.
  return static_cast<int>(std::floor(b_pct * static_cast<double>(alive_count) / 100.0));
}

std::pair<std::vector<int>, std::vector<int>> admit(const std::vector<int>& attendants, int cap,
                                                    Rng& rng) {
  if (static_cast<int>(attendants.size()) <= cap) return {attendants, {}};

  // Partial Fisher-Yates: the first `cap` slots end up a uniform subset.
  std::vector<int> pool = attendants;
  for (int i = 0; i < cap; ++i) {
    const std::size_t j = i + rng.uniform_below(pool.size() - i);
    std::swap(pool[i], pool[j]);
  }
  std::vector<int> admitted(pool.begin(), pool.begin() + cap);
  std::vector<int> rejected(pool.begin() + cap, pool.end());
  std::sort(admitted.begin(), admitted.end());
  std::sort(rejected.begin(), rejected.end());
  return {admitted, rejected};
}

double consume(double soc, double bc_mean, double bc_sd, Rng& rng) {
  const double draw = rng.normal(bc_mean, bc_sd);
  return soc - std::max(0.0, draw);
}

double recharge(double soc, double bg) { return std::min(soc + bg, 100.0); }

SimState init_state(const ScenarioParams& params, std::uint64_t seed) {
  const ScenarioParams p = validate_params(params);
  Rng rng(seed);

  // Draw order is part of the replay contract: history first (oldest to
  // newest), then ensembles in ascending drone id.
  std::vector<int> initial(2 * p.memory_m);
  for (auto& v : initial) v = static_cast<int>(rng.uniform_below(p.qty + 1));
  AttendanceHistory history(p.memory_m, initial);

  std::vector<DroneState> drones(p.qty);
  for (int i = 0; i < p.qty; ++i) {
    drones[i].id = i;
    drones[i].soc = 100.0;
    if (p.policy == Policy::CT)
      drones[i].ensemble = init_ensemble(rng, p.predictors_k, p.memory_m);
  }

  return SimState{p, 0, std::move(drones), std::move(history), std::move(rng),
                  make_policy(p.policy), p.qty};
}

TraceRow step(SimState& s) {
  const ScenarioParams& p = s.params;
  if (s.tick >= p.max_ticks || s.alive == 0)
    throw std::logic_error("step called on a stopped simulation");

  const int cap = capacity(p.b_pct, s.alive);

  // Decisions run against an immutable snapshot of the broadcast.
  const std::vector<int> flat = s.history.newest_first();
  const DecisionContext ctx{s.history, flat, cap, p};
  std::vector<int> attendants;
  for (auto& d : s.drones) {
    if (!d.alive) continue;
    if (s.policy->decide(d, ctx) == Decision::AttemptRecharge) {
      ++d.recharge_decisions;
      attendants.push_back(d.id);
    } else {
      ++d.work_decisions;
    }
  }

  auto [admitted, rejected] = admit(attendants, cap, s.rng);
  std::vector<char> is_admitted(p.qty, 0);
  for (int id : admitted) is_admitted[id] = 1;

  // Battery updates in ascending id order so the consumption draws are
  // seed-stable. Admitted drones spend the tick in the swap and do not
  // consume.
  for (auto& d : s.drones) {
    if (!d.alive) continue;
    if (is_admitted[d.id])
      d.soc = recharge(d.soc, p.bg);
    else
      d.soc = consume(d.soc, p.bc_mean, p.bc_sd, s.rng);
  }

  for (auto& d : s.drones) {
    if (d.alive && d.soc < 0.0) {
      d.alive = false;
      d.soc = 0.0;
      --s.alive;
    }
  }

  s.history.push(static_cast<int>(attendants.size()));
  ++s.tick;

  double soc_sum = 0.0;
  for (const auto& d : s.drones)
    if (d.alive) soc_sum += d.soc;
  return TraceRow{s.tick, s.alive, static_cast<int>(attendants.size()),
                  static_cast<int>(admitted.size()), s.alive > 0 ? soc_sum / s.alive : 0.0};
}

RunResult run(const ScenarioParams& params, std::uint64_t seed, std::vector<TraceRow>* trace) {
  SimState s = init_state(params, seed);
  if (trace) trace->reserve(s.params.max_ticks);

  while (s.tick < s.params.max_ticks && s.alive > 0) {
    TraceRow row = step(s);
    if (trace) trace->push_back(row);
  }

  RunResult r;
  r.seed = seed;
  r.ticks_elapsed = s.tick;
  r.finished = (s.tick == s.params.max_ticks);
  r.remaining_drones = s.alive;

  // Utility is the work share of the surviving drones' decisions; with no
  // survivors the denominator is zero and the utility is zero.
  std::int64_t work = 0;
  std::int64_t total = 0;
  for (const auto& d : s.drones) {
    if (!d.alive) continue;
    work += d.work_decisions;
    total += d.work_decisions + d.recharge_decisions;
  }
  r.utility = total > 0 ? static_cast<double>(work) / static_cast<double>(total) : 0.0;
  return r;
}

}  // namespace swarmsim
