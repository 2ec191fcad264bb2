#pragma once

#include <cstdint>
#include <memory>

#include "swarmsim/drone.hpp"
#include "swarmsim/history.hpp"
#include "swarmsim/params.hpp"

namespace swarmsim {

// Baseline rule: attempt a recharge strictly below the lower reload limit,
// work otherwise (at soc == lw the drone works).
Decision bl_decide(double soc, double lw);

// Charger-threshold rule, in priority order:
//   1. soc < lw          -> AttemptRecharge
//   2. soc > up          -> Work
//   3. otherwise         -> AttemptRecharge iff the best predictor's
//                           attendance estimate is strictly below the
//                           broadcast capacity.
// predictor_evals, when given, counts how often rule 3 consulted the
// ensemble (instrumentation for tests).
Decision ct_decide(double soc, double lw, double up, const PredictorEnsemble& e,
                   const AttendanceHistory& h, int capacity, int qty,
                   std::uint64_t* predictor_evals = nullptr);

// Everything a drone may read when deciding: its own state plus the base
// station broadcast (history and current capacity). Drones never see each
// other's state. history_flat is the same broadcast flattened newest-first,
// computed once per tick.
struct DecisionContext {
  const AttendanceHistory& history;
  std::span<const int> history_flat;
  int capacity;
  const ScenarioParams& params;
};

// Per-tick decision rule. New policies plug in here without engine changes.
class DecisionPolicy {
 public:
  virtual ~DecisionPolicy() = default;
  virtual Decision decide(const DroneState& drone, const DecisionContext& ctx) const = 0;
  // How often the attendance predictor was consulted so far.
  virtual std::uint64_t predictor_evals() const { return 0; }
};

class BaselinePolicy final : public DecisionPolicy {
 public:
  Decision decide(const DroneState& drone, const DecisionContext& ctx) const override;
};

class ChargerThresholdPolicy final : public DecisionPolicy {
 public:
  Decision decide(const DroneState& drone, const DecisionContext& ctx) const override;
  std::uint64_t predictor_evals() const override { return evals_; }

 private:
  mutable std::uint64_t evals_ = 0;  // a run is single-threaded
};

std::unique_ptr<DecisionPolicy> make_policy(Policy policy);

}  // namespace swarmsim
