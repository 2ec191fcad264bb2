// Acceptance suite for the recharge-coordination simulator.
//
// Runs the full default sweep (2 policies x 15 BC levels x 2 B levels,
// 100 reps per cell) under a fixed master seed, then checks the published
// behavior of the two policies plus the determinism and property gates.
// Prints one PASS/FAIL line per criterion; the exit code is the number of
// failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "swarmsim/engine.hpp"
#include "swarmsim/io.hpp"
#include "swarmsim/sweep.hpp"

using namespace swarmsim;

namespace {

constexpr std::uint64_t kMasterSeed = 1;

int g_failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail = "") {
  std::printf("[%s] criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", id, name.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

std::string fmt(double v) { return format_real(v); }

// scenario_id helper mirroring the plan's policy-major enumeration
int sid_of(const SweepPlan& plan, Policy pol, double bc, double b) {
  for (int sid = 0; sid < plan.cell_count(); ++sid) {
    const ScenarioParams p = plan.cell_params(sid);
    if (p.policy == pol && p.bc_mean == bc && p.b_pct == b) return sid;
  }
  std::abort();
}

// ---- criterion 1: reliability plateau -------------------------------------
void criterion1(const SweepPlan& plan, const std::vector<ScenarioSummary>& summaries) {
  bool pass = true;
  int bad = 0;
  std::string detail;
  for (Policy pol : {Policy::BL, Policy::CT}) {
    for (double bc = 1; bc <= 12; ++bc) {
      for (double b : {30.0, 40.0}) {
        const auto& s = summaries[sid_of(plan, pol, bc, b)];
        if (s.pct_finished != 100.0 || s.avg_remaining != 100.0) {
          pass = false;
          ++bad;
          if (detail.size() < 600)
            detail += to_string(pol) + " bc=" + fmt(bc) + " b=" + fmt(b) + " rem=" +
                      fmt(s.avg_remaining) + " fin=" + fmt(s.pct_finished) + "; ";
        }
      }
    }
  }
  if (!pass) detail = std::to_string(bad) + " of 48 cells off: " + detail;
  report(1, "reliability plateau: BC <= 12 keeps every drone alive to the horizon", pass, detail);
}

// ---- criterion 2: BL collapse at BC = 15 -----------------------------------
void criterion2(const SweepPlan& plan, const std::vector<ScenarioSummary>& summaries) {
  bool pass = true;
  std::string detail;
  for (double b : {30.0, 40.0}) {
    const auto& s = summaries[sid_of(plan, Policy::BL, 15.0, b)];
    detail += "b=" + fmt(b) + " rem=" + fmt(s.avg_remaining) + " util=" + fmt(s.avg_utility) + "; ";
    if (!(s.avg_remaining < 5.0 && s.avg_utility < 0.05)) pass = false;
  }
  report(2, "baseline collapse at BC = 15 (remaining < 5, utility < 0.05)", pass, detail);
}

// ---- criterion 3: CT advantage under extreme load --------------------------
void criterion3(const SweepPlan& plan) {
  bool pass = true;
  std::string detail;
  const int reps = plan.reps;
  for (int bi = 0; bi < 2; ++bi) {
    const double b = plan.b_levels[bi];
    ScenarioParams bl = plan.base, ct = plan.base;
    bl.policy = Policy::BL;
    ct.policy = Policy::CT;
    bl.bc_mean = ct.bc_mean = 15.0;
    bl.b_pct = ct.b_pct = b;

    double bl_sum = 0.0, ct_sum = 0.0;
    for (int rep = 0; rep < reps; ++rep) {
      // Paired seeds: the same stream drives both policies.
      const std::uint64_t seed = derive_seed(plan.master_seed, 1000 + bi, rep);
      bl_sum += run(bl, seed).remaining_drones;
      ct_sum += run(ct, seed).remaining_drones;
    }
    const double bl_avg = bl_sum / reps, ct_avg = ct_sum / reps;
    detail += "b=" + fmt(b) + " CT=" + fmt(ct_avg) + " BL=" + fmt(bl_avg) + "; ";
    if (!(ct_avg > bl_avg)) pass = false;
  }
  report(3, "CT keeps strictly more drones than BL at BC = 15 (paired seeds)", pass, detail);
}

// ---- criterion 4: efficiency band ------------------------------------------
void criterion4(const SweepPlan& plan, const std::vector<ScenarioSummary>& summaries) {
  bool pass = true;
  int bad = 0;
  std::string detail;
  double worst = 1.0;
  for (Policy pol : {Policy::BL, Policy::CT}) {
    for (double bc = 1; bc <= 12; ++bc) {
      for (double b : {30.0, 40.0}) {
        const auto& s = summaries[sid_of(plan, pol, bc, b)];
        worst = std::min(worst, s.avg_utility);
        if (!(s.avg_utility > 0.80)) {
          pass = false;
          ++bad;
          if (detail.size() < 600)
            detail += to_string(pol) + " bc=" + fmt(bc) + " b=" + fmt(b) + " util=" +
                      fmt(s.avg_utility) + "; ";
        }
      }
    }
  }
  report(4, "efficiency band: BC <= 12 keeps utility above 0.80", pass,
         detail.empty() ? "worst=" + fmt(worst)
                        : std::to_string(bad) + " of 48 cells off: " + detail);
}

// ---- criterion 5: utility trend ---------------------------------------------
void criterion5(const SweepPlan& plan, const std::vector<ScenarioSummary>& summaries) {
  bool pass = true;
  std::string detail;
  for (Policy pol : {Policy::BL, Policy::CT}) {
    for (double b : {30.0, 40.0}) {
      for (double bc = 1; bc <= 11; ++bc) {
        const double u_lo = summaries[sid_of(plan, pol, bc, b)].avg_utility;
        const double u_hi = summaries[sid_of(plan, pol, bc + 1, b)].avg_utility;
        if (u_hi > u_lo + 0.02) {
          pass = false;
          if (detail.size() < 200)
            detail += to_string(pol) + " b=" + fmt(b) + " bc=" + fmt(bc) + "->" + fmt(bc + 1) +
                      ": " + fmt(u_lo) + "->" + fmt(u_hi) + "; ";
        }
      }
    }
  }
  report(5, "utility is non-increasing in BC over 1..12 (tolerance 0.02)", pass, detail);
}

// ---- criterion 6: capacity effect -------------------------------------------
void criterion6(const SweepPlan& plan, const std::vector<ScenarioSummary>& summaries) {
  bool pass = true;
  std::string detail;
  for (Policy pol : {Policy::BL, Policy::CT}) {
    for (double bc : {13.0, 14.0, 15.0}) {
      const double rem30 = summaries[sid_of(plan, pol, bc, 30.0)].avg_remaining;
      const double rem40 = summaries[sid_of(plan, pol, bc, 40.0)].avg_remaining;
      if (!(rem40 >= rem30 - 2.0)) {
        pass = false;
        detail += to_string(pol) + " bc=" + fmt(bc) + " b30=" + fmt(rem30) + " b40=" +
                  fmt(rem40) + "; ";
      }
    }
  }
  report(6, "a larger station helps under load: remaining at B=40 >= B=30 - 2", pass, detail);
}

// ---- criterion 7: golden trace ----------------------------------------------
void criterion7() {
  ScenarioParams p;
  p.qty = 3;
  p.bc_mean = 30.0;
  p.bc_sd = 0.0;
  p.b_pct = 34.0;
  p.policy = Policy::BL;

  const std::vector<TraceRow> golden = {
      {1, 3, 0, 0, 70.0}, {2, 3, 0, 0, 40.0}, {3, 3, 0, 0, 10.0}, {4, 1, 3, 1, 100.0},
      {5, 1, 0, 0, 70.0}, {6, 1, 0, 0, 40.0}, {7, 1, 0, 0, 10.0}, {8, 0, 1, 0, 0.0},
  };

  std::vector<TraceRow> trace;
  const RunResult r = run(p, 424242, &trace);
  const bool pass = trace == golden && r.ticks_elapsed == 8 && !r.finished &&
                    r.remaining_drones == 0 && r.utility == 0.0;
  report(7, "three-drone hand simulation reproduces its golden trace", pass,
         pass ? "" : "trace diverged");
}

// ---- criterion 8: determinism ------------------------------------------------
void criterion8(const SweepPlan& plan, const std::string& runs_a) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::string runs_b = runs_csv(run_sweep(plan, 8), plan);
  const std::string runs_c = runs_csv(run_sweep(plan, 1), plan);
  const auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
  const bool pass = runs_a == runs_b && runs_a == runs_c;
  report(8, "full sweep is byte-identical when repeated and at parallelism 1 vs 8", pass,
         "replayed twice in " + std::to_string(secs) + "s");
}

// ---- criterion 9: property suites ---------------------------------------------
bool admission_properties() {
  Rng gen(777);
  for (int i = 0; i < 10000; ++i) {
    const int n = static_cast<int>(gen.uniform_below(201));
    const int cap = static_cast<int>(gen.uniform_below(61));
    std::vector<int> attendants(n);
    std::iota(attendants.begin(), attendants.end(), 0);
    Rng rng(gen.next_u64());
    auto [admitted, rejected] = admit(attendants, cap, rng);
    if (static_cast<int>(admitted.size()) > cap) return false;
    if (admitted.size() + rejected.size() != attendants.size()) return false;
    std::vector<int> merged = admitted;
    merged.insert(merged.end(), rejected.begin(), rejected.end());
    std::sort(merged.begin(), merged.end());
    if (merged != attendants) return false;
  }
  return true;
}

bool soc_and_liveness_properties() {
  Rng gen(4242);
  for (int trial = 0; trial < 25; ++trial) {
    ScenarioParams p;
    p.qty = 1 + static_cast<int>(gen.uniform_below(60));
    p.bc_mean = static_cast<double>(gen.uniform_below(20));
    p.bc_sd = 2.0 * gen.uniform01();
    p.b_pct = static_cast<double>(gen.uniform_below(101));
    p.lw = 50.0 * gen.uniform01();
    p.up = std::min(100.0, p.lw + (100.0 - p.lw) * (0.05 + 0.95 * gen.uniform01()));
    p.memory_m = 1 + static_cast<int>(gen.uniform_below(12));
    p.predictors_k = 1 + static_cast<int>(gen.uniform_below(8));
    p.max_ticks = 1 + static_cast<int>(gen.uniform_below(400));
    p.policy = trial % 2 == 0 ? Policy::BL : Policy::CT;

    SimState s = init_state(p, gen.next_u64());
    std::vector<bool> dead(p.qty, false);
    int prev_alive = s.alive;
    while (s.tick < p.max_ticks && s.alive > 0) {
      const int cap = capacity(p.b_pct, s.alive);
      const TraceRow row = step(s);
      if (row.admitted > cap) return false;
      if (row.alive > prev_alive) return false;
      prev_alive = row.alive;
      for (std::size_t i = 0; i < s.history.size(); ++i)
        if (s.history.at(i) < 0 || s.history.at(i) > p.qty) return false;
      for (const auto& d : s.drones) {
        if (d.alive) {
          if (dead[d.id]) return false;  // resurrection
          if (d.soc < 0.0 || d.soc > 100.0) return false;
        } else {
          dead[d.id] = true;
        }
      }
    }
  }
  return true;
}

bool predictor_properties() {
  Rng gen(31415);
  for (int i = 0; i < 10000; ++i) {
    const int m = 1 + static_cast<int>(gen.uniform_below(12));
    const int qty = 1 + static_cast<int>(gen.uniform_below(150));
    Predictor p;
    p.weights.resize(m + 1);
    for (auto& w : p.weights) w = gen.uniform_pm1();
    std::vector<int> window(m);
    for (auto& v : window) v = static_cast<int>(gen.uniform_below(qty + 1));
    const double out = predict(p, window, qty);
    if (out < 0.0 || out > static_cast<double>(qty)) return false;
  }
  // Tie-break determinism: identical predictors tie, the lowest index wins.
  for (int i = 0; i < 200; ++i) {
    const int m = 1 + static_cast<int>(gen.uniform_below(6));
    const int qty = 1 + static_cast<int>(gen.uniform_below(80));
    Rng seeded(gen.next_u64());
    PredictorEnsemble e = init_ensemble(seeded, 1, m);
    e.predictors.push_back(e.predictors[0]);
    e.predictors.push_back(e.predictors[0]);
    std::vector<int> oldest_first(2 * m);
    for (auto& v : oldest_first) v = static_cast<int>(gen.uniform_below(qty + 1));
    if (best_predictor(e, AttendanceHistory(m, oldest_first), qty) != 0) return false;
  }
  return true;
}

bool sampler_properties() {
  Rng rng(271828);
  const int n = 100000;
  double sum = 0.0, sum_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double draw = 50.0 - consume(50.0, 5.0, 0.1, rng);
    sum += draw;
    sum_sq += draw * draw;
  }
  const double mean = sum / n;
  const double sd = std::sqrt((sum_sq - n * mean * mean) / (n - 1));
  const bool mean_ok = std::abs(mean - 5.0) < 3.0 * 0.1 / std::sqrt(static_cast<double>(n));
  const bool sd_ok = std::abs(sd - 0.1) < 3.0 * 0.1 / std::sqrt(2.0 * n);
  return mean_ok && sd_ok;
}

void criterion9() {
  const bool a = admission_properties();
  const bool b = soc_and_liveness_properties();
  const bool c = predictor_properties();
  const bool d = sampler_properties();
  std::string detail = std::string("admission=") + (a ? "ok" : "FAIL") +
                       " soc/liveness=" + (b ? "ok" : "FAIL") +
                       " predictor=" + (c ? "ok" : "FAIL") + " sampler=" + (d ? "ok" : "FAIL");
  report(9, "property suites hold", a && b && c && d, detail);
}

}  // namespace

int main() {
  SweepPlan plan;
  plan.master_seed = kMasterSeed;

  std::printf("running the default %d-cell sweep, %d runs, master seed %llu...\n",
              plan.cell_count(), plan.total_runs(),
              static_cast<unsigned long long>(plan.master_seed));
  std::fflush(stdout);

  const auto t0 = std::chrono::steady_clock::now();
  const auto results = run_sweep(plan, 8);
  const auto sweep_secs =
      std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() - t0)
          .count();
  std::printf("sweep finished in %llds\n", static_cast<long long>(sweep_secs));
  std::fflush(stdout);

  const auto summaries = aggregate(results, plan);
  const std::string runs_a = runs_csv(results, plan);

  // Compact behavior record: one line per (policy, B) and metric, BC 1..15.
  for (Policy pol : {Policy::BL, Policy::CT}) {
    for (double b : {30.0, 40.0}) {
      std::string rem = "  remaining ", util = "  utility   ";
      for (double bc = 1; bc <= 15; ++bc) {
        const auto& s = summaries[sid_of(plan, pol, bc, b)];
        rem += fmt(s.avg_remaining) + " ";
        util += fmt(s.avg_utility) + " ";
      }
      std::printf("%s b=%s\n%s\n%s\n", to_string(pol).c_str(), fmt(b).c_str(), rem.c_str(),
                  util.c_str());
    }
  }
  std::fflush(stdout);

  criterion1(plan, summaries);
  criterion2(plan, summaries);
  criterion3(plan);
  criterion4(plan, summaries);
  criterion5(plan, summaries);
  criterion6(plan, summaries);
  criterion7();
  criterion8(plan, runs_a);
  criterion9();

  if (g_failures == 0)
    std::printf("all acceptance criteria passed\n");
  else
    std::printf("%d acceptance criteria FAILED\n", g_failures);
  return g_failures;
}
