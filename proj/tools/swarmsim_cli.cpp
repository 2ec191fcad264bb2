// Command-line front end: single runs and full factorial sweeps.
//
//   swarmsim run --policy BL --bc 5 --b 30 --seed 42 [--trace out.csv]
//   swarmsim sweep --out results/ [--config sweep.cfg] [--jobs 4] [--master-seed 7]
//
// Exit codes: 0 success, 1 runtime failure, 2 usage error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "swarmsim/config.hpp"
#include "swarmsim/engine.hpp"
#include "swarmsim/io.hpp"
#include "swarmsim/sweep.hpp"

namespace fs = std::filesystem;

namespace {

void write_file(const fs::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out << contents;
  if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

struct RunFlags {
  std::string policy;
  double bc = 0.0;
  double b = 0.0;
  std::uint64_t seed = 0;
  std::string trace_path;
  swarmsim::ScenarioParams overrides;
};

int cmd_run(const RunFlags& f) {
  swarmsim::ScenarioParams params = f.overrides;
  params.policy = swarmsim::policy_from_string(f.policy);
  params.bc_mean = f.bc;
  params.b_pct = f.b;
  swarmsim::validate_params(params);

  std::vector<swarmsim::TraceRow> trace;
  swarmsim::RunResult result =
      swarmsim::run(params, f.seed, f.trace_path.empty() ? nullptr : &trace);

  if (!f.trace_path.empty()) write_file(f.trace_path, swarmsim::trace_csv(trace));

  swarmsim::RunRecord rec = swarmsim::make_run_record(result, params);
  std::cout << swarmsim::runs_csv_header() << swarmsim::run_record_row(rec);
  return 0;
}

struct SweepFlags {
  std::string config_path;
  std::string out_dir;
  int jobs = 0;
  std::uint64_t master_seed = 0;
  bool master_seed_set = false;
};

int cmd_sweep(const SweepFlags& f) {
  swarmsim::SweepPlan plan;
  if (!f.config_path.empty()) plan = swarmsim::parse_config_file(f.config_path);
  if (f.master_seed_set) plan.master_seed = f.master_seed;

  const int jobs = f.jobs > 0 ? f.jobs : std::max(1u, std::thread::hardware_concurrency());

  // Probe the output directory before burning any simulation time.
  const fs::path out_dir(f.out_dir);
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  fs::create_directories(out_dir / "plotdata", ec);
  {
    std::ofstream probe(out_dir / "runs.csv", std::ios::binary);
    if (!probe) throw std::runtime_error("output directory '" + f.out_dir + "' is not writable");
  }

  const auto results = swarmsim::run_sweep(plan, jobs);
  const auto summaries = swarmsim::aggregate(results, plan);

  write_file(out_dir / "runs.csv", swarmsim::runs_csv(results, plan));
  write_file(out_dir / "summary.csv", swarmsim::summary_csv(summaries));
  for (const auto& [name, body] : swarmsim::plotdata_files(summaries, plan))
    write_file(out_dir / "plotdata" / name, body);

  std::cerr << "wrote " << results.size() << " runs across " << plan.cell_count()
            << " scenarios to " << f.out_dir << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Drone swarm battery-recharge coordination simulator"};
  app.require_subcommand(1);

  RunFlags rf;
  CLI::App* run_cmd = app.add_subcommand("run", "Execute one run and print its CSV record");
  run_cmd->add_option("--policy", rf.policy, "Recharge policy: BL or CT")->required();
  run_cmd->add_option("--bc", rf.bc, "Mean battery consumption per tick (SOC pp)")->required();
  run_cmd->add_option("--b", rf.b, "Station capacity, percent of alive drones")->required();
  run_cmd->add_option("--seed", rf.seed, "Run seed")->required();
  run_cmd->add_option("--trace", rf.trace_path, "Write a per-tick trace CSV to this path");
  run_cmd->add_option("--qty", rf.overrides.qty, "Drones at tick 0");
  run_cmd->add_option("--sd", rf.overrides.bc_sd, "Consumption standard deviation");
  run_cmd->add_option("--lw", rf.overrides.lw, "Lower reload limit");
  run_cmd->add_option("--up", rf.overrides.up, "Upper threshold (CT)");
  run_cmd->add_option("--m", rf.overrides.memory_m, "Predictor window length");
  run_cmd->add_option("--k", rf.overrides.predictors_k, "Predictors per drone");
  run_cmd->add_option("--ticks", rf.overrides.max_ticks, "Simulation horizon");
  run_cmd->add_option("--bg", rf.overrides.bg, "SOC gain per recharge");

  SweepFlags sf;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Run the factorial sweep and write CSV outputs");
  sweep_cmd->add_option("--config", sf.config_path, "Sweep configuration file");
  sweep_cmd->add_option("--out", sf.out_dir, "Output directory")->required();
  sweep_cmd->add_option("--jobs", sf.jobs, "Worker threads (default: hardware concurrency)");
  sweep_cmd
      ->add_option("--master-seed", sf.master_seed, "Master seed (overrides the config)")
      ->each([&](const std::string&) { sf.master_seed_set = true; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help() << "\n";
    return 2;
  }

  try {
    if (run_cmd->parsed()) return cmd_run(rf);
    return cmd_sweep(sf);
  } catch (const std::invalid_argument& e) {
    // Bad flag values (validation failures) are usage errors.
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
