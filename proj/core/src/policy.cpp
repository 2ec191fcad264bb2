#include "swarmsim/policy.hpp"

#include <cassert>
#include <stdexcept>

namespace swarmsim {

Decision bl_decide(double soc, double lw) {
  return soc < lw ? Decision::AttemptRecharge : Decision::Work;
}

namespace {

Decision ct_decide_flat(double soc, double lw, double up, const PredictorEnsemble& e,
                        std::span<const int> newest_first, int m, int capacity, int qty,
                        std::uint64_t* predictor_evals) {
  if (soc < lw) return Decision::AttemptRecharge;
  if (soc > up) return Decision::Work;
  if (predictor_evals) ++*predictor_evals;
  const std::size_t best = best_predictor(e, newest_first, m, qty);
  const double predicted = predict(e.predictors[best], newest_first.first(m), qty);
  return predicted < static_cast<double>(capacity) ? Decision::AttemptRecharge : Decision::Work;
}

}  // namespace

Decision ct_decide(double soc, double lw, double up, const PredictorEnsemble& e,
                   const AttendanceHistory& h, int capacity, int qty,
                   std::uint64_t* predictor_evals) {
  const std::vector<int> flat = h.newest_first();
  return ct_decide_flat(soc, lw, up, e, flat, h.memory_m(), capacity, qty, predictor_evals);
}

Decision BaselinePolicy::decide(const DroneState& drone, const DecisionContext& ctx) const {
  return bl_decide(drone.soc, ctx.params.lw);
}

Decision ChargerThresholdPolicy::decide(const DroneState& drone, const DecisionContext& ctx) const {
  assert(drone.ensemble.has_value());
  return ct_decide_flat(drone.soc, ctx.params.lw, ctx.params.up, *drone.ensemble,
                        ctx.history_flat, ctx.params.memory_m, ctx.capacity, ctx.params.qty,
                        &evals_);
}

std::unique_ptr<DecisionPolicy> make_policy(Policy policy) {
  switch (policy) {
    case Policy::BL:
      return std::make_unique<BaselinePolicy>();
    case Policy::CT:
      return std::make_unique<ChargerThresholdPolicy>();
  }
  throw std::logic_error("unreachable policy value");
}

}  // namespace swarmsim
