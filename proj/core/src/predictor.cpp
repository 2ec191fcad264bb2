#include "swarmsim/predictor.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>

namespace swarmsim {

PredictorEnsemble init_ensemble(Rng& rng, int k, int m) {
  PredictorEnsemble e;
  e.predictors.resize(k);
  for (auto& p : e.predictors) {
    p.weights.resize(m + 1);
    for (auto& w : p.weights) w = rng.uniform_pm1();
  }
  return e;
}

double predict(const Predictor& p, std::span<const int> window, int qty) {
  assert(window.size() + 1 == p.weights.size());
  double sum = p.weights[0] * static_cast<double>(qty);
  for (std::size_t i = 1; i < p.weights.size(); ++i) sum += p.weights[i] * window[i - 1];
  return std::clamp(sum, 0.0, static_cast<double>(qty));
}

std::size_t best_predictor(const PredictorEnsemble& e, const AttendanceHistory& h, int qty) {
  const std::vector<int> flat = h.newest_first();
  return best_predictor(e, flat, h.memory_m(), qty);
}

std::size_t best_predictor(const PredictorEnsemble& e, std::span<const int> newest_first,
                           int m, int qty) {
  assert(newest_first.size() == static_cast<std::size_t>(2 * m));
  std::size_t best = 0;
  double best_score = std::numeric_limits<double>::infinity();
  for (std::size_t pi = 0; pi < e.predictors.size(); ++pi) {
    double score = 0.0;
    for (std::size_t j = 0; j < static_cast<std::size_t>(m); ++j) {
      // Predict point j from the m values that precede it.
      const double pred = predict(e.predictors[pi], newest_first.subspan(j + 1, m), qty);
      score += std::abs(pred - static_cast<double>(newest_first[j]));
    }
    if (score < best_score) {
      best_score = score;
      best = pi;
    }
  }
  return best;
}

}  // namespace swarmsim
