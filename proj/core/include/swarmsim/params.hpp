#pragma once

#include <string>

namespace swarmsim {

// Recharge coordination policy of a run.
enum class Policy { BL, CT };

std::string to_string(Policy p);
// Throws std::invalid_argument for anything but "BL" / "CT".
Policy policy_from_string(const std::string& s);

// Full parameter set of one experimental cell. Defaults are the common
// operating point: 100 drones, 1500-tick horizon, CT thresholds 25/80,
// 5 predictors over a 10-tick window.
struct ScenarioParams {
  int qty = 100;           // drones at tick 0
  double bc_mean = 5.0;    // mean battery consumption per tick (SOC pp)
  double bc_sd = 0.1;      // consumption standard deviation (SOC pp)
  double b_pct = 30.0;     // station capacity as percent of alive drones
  double bg = 100.0;       // SOC gain on an effective recharge (pp)
  double lw = 25.0;        // lower reload limit (SOC pp)
  double up = 80.0;        // upper threshold, CT only (SOC pp)
  int memory_m = 10;       // predictor input window length (ticks)
  int predictors_k = 5;    // predictors per drone
  int max_ticks = 1500;    // simulation horizon
  Policy policy = Policy::CT;

  bool operator==(const ScenarioParams&) const = default;
};

// Returns params unchanged iff every invariant holds; otherwise throws
// std::invalid_argument naming the first violated invariant.
ScenarioParams validate_params(const ScenarioParams& p);

}  // namespace swarmsim
