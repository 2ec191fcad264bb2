#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "swarmsim/history.hpp"
#include "swarmsim/rng.hpp"

namespace swarmsim {

// One linear autoregressive attendance predictor with fixed weights.
// weights[0] is a bias scaled by the swarm size; weights[1..m] multiply the
// 1..m most recent attendance values. Weights never change after init.
struct Predictor {
  std::vector<double> weights;
};

// The k predictors a CT drone carries for the whole run.
struct PredictorEnsemble {
  std::vector<Predictor> predictors;
};

// k predictors with m+1 weights each, drawn independently and uniformly
// from [-1, 1).
PredictorEnsemble init_ensemble(Rng& rng, int k, int m);

// clamp(w0*qty + sum_{i=1..m} w_i*window[i-1], 0, qty).
// window holds the m most recent attendance counts, newest first.
double predict(const Predictor& p, std::span<const int> window, int qty);

// Scores every predictor over the m most recent history points (sum of
// absolute errors of the prediction made from the m values preceding each
// point) and returns the index of the minimum. Ties break toward the lowest
// index.
std::size_t best_predictor(const PredictorEnsemble& e, const AttendanceHistory& h, int qty);

// Same scoring over an already-flattened newest-first buffer of 2m entries.
std::size_t best_predictor(const PredictorEnsemble& e, std::span<const int> newest_first,
                           int m, int qty);

}  // namespace swarmsim
