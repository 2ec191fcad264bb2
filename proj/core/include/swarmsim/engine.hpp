#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "swarmsim/drone.hpp"
#include "swarmsim/history.hpp"
#include "swarmsim/params.hpp"
#include "swarmsim/policy.hpp"
#include "swarmsim/rng.hpp"

namespace swarmsim {

// Outcome of one replication.
//   finished          <=> the run reached max_ticks
//   not finished       => remaining_drones == 0
//   utility           == work share of the decisions made by the drones that
//                        are alive at termination; 0 when none survive.
struct RunResult {
  int scenario_id = 0;
  int rep = 0;
  std::uint64_t seed = 0;
  int ticks_elapsed = 0;
  bool finished = false;
  int remaining_drones = 0;
  double utility = 0.0;

  bool operator==(const RunResult&) const = default;
};

// Per-tick trace record, written after the tick completed.
struct TraceRow {
  int tick = 0;
  int alive = 0;
  int attendants = 0;
  int admitted = 0;
  double mean_soc = 0.0;  // over alive drones; 0 when none are left

  bool operator==(const TraceRow&) const = default;
};

// Charging positions available this tick: floor(b_pct% of alive_count).
int capacity(double b_pct, int alive_count);

// Splits attendants into (admitted, rejected). Everyone fits under capacity;
// over capacity a uniformly random subset of exactly `cap` ids is admitted.
// Both outputs are sorted ascending. Consumes randomness only when over
// capacity.
std::pair<std::vector<int>, std::vector<int>> admit(const std::vector<int>& attendants, int cap,
                                                    Rng& rng);

// One tick of battery drain: soc - max(0, N(bc_mean, bc_sd)). The draw is
// truncated at zero so consumption never charges the battery. May return a
// negative value; the death check happens downstream.
double consume(double soc, double bc_mean, double bc_sd, Rng& rng);

// Battery hot-swap: min(soc + bg, 100).
double recharge(double soc, double bg);

// Full state of one run. Confined to a single thread.
struct SimState {
  ScenarioParams params;
  int tick = 0;
  std::vector<DroneState> drones;
  AttendanceHistory history;
  Rng rng;
  std::unique_ptr<DecisionPolicy> policy;
  int alive = 0;

  std::uint64_t predictor_evals() const { return policy->predictor_evals(); }
};

// Validates params, seeds the stream, and builds the initial state:
// every drone at soc 100, CT ensembles drawn per drone in id order, and a
// history of 2m uniform integers in [0, qty].
SimState init_state(const ScenarioParams& params, std::uint64_t seed);

// Advances one tick:
//   1. capacity from b_pct and the current alive count
//   2. every alive drone decides against the history snapshot
//   3. attempt-recharge deciders go through admission
//   4. admitted drones hot-swap; all other alive drones consume
//   5. drones with soc < 0 die (soc reported as 0 afterwards)
//   6. the attempt count (not admissions) is broadcast onto the history
//   7. tick advances
// Throws std::logic_error when called on a stopped simulation.
TraceRow step(SimState& state);

// Whole run: step until the horizon or until no drone is alive. When trace
// is given, one TraceRow per executed tick is appended.
RunResult run(const ScenarioParams& params, std::uint64_t seed,
              std::vector<TraceRow>* trace = nullptr);

}  // namespace swarmsim
