#pragma once

#include <cstdint>
#include <optional>

#include "swarmsim/predictor.hpp"

namespace swarmsim {

// What an alive drone does with its tick.
enum class Decision { Work, AttemptRecharge };

// One agent. The ensemble is populated only under the CT policy.
// Once alive goes false it never comes back, and the counters freeze.
struct DroneState {
  int id = 0;
  double soc = 100.0;  // state of charge, percent
  bool alive = true;
  std::optional<PredictorEnsemble> ensemble;
  std::int64_t work_decisions = 0;
  std::int64_t recharge_decisions = 0;
};

}  // namespace swarmsim
