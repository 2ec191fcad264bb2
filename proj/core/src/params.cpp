#include "swarmsim/params.hpp"

#include <stdexcept>

namespace swarmsim {

std::string to_string(Policy p) { return p == Policy::BL ? "BL" : "CT"; }

Policy policy_from_string(const std::string& s) {
  if (s == "BL") return Policy::BL;
  if (s == "CT") return Policy::CT;
  throw std::invalid_argument("unknown policy '" + s + "' (expected BL or CT)");
}

ScenarioParams validate_params(const ScenarioParams& p) {
  auto fail = [](const char* what) { throw std::invalid_argument(what); };
  if (p.qty < 1) fail("qty >= 1 violated");
  if (p.max_ticks < 1) fail("max_ticks >= 1 violated");
  if (p.memory_m < 1) fail("memory_m >= 1 violated");
  if (p.predictors_k < 1) fail("predictors_k >= 1 violated");
  if (p.lw < 0.0) fail("lw >= 0 violated");
  if (!(p.lw < p.up)) fail("lw < up violated");
  if (p.up > 100.0) fail("up <= 100 violated");
  if (p.b_pct < 0.0 || p.b_pct > 100.0) fail("b_pct in [0, 100] violated");
  if (p.bc_mean < 0.0) fail("bc_mean >= 0 violated");
  if (p.bc_sd < 0.0) fail("bc_sd >= 0 violated");
  if (!(p.bg > 0.0) || p.bg > 100.0) fail("bg in (0, 100] violated");
  return p;
}

}  // namespace swarmsim
