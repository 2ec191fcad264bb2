#include "swarmsim/io.hpp"

#include <charconv>
#include <stdexcept>
#include <system_error>

namespace swarmsim {

namespace {

template <typename T>
std::string to_chars_str(T v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) throw std::runtime_error("number formatting failed");
  return std::string(buf, ptr);
}

}  // namespace

std::string format_real(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 6);
  if (ec != std::errc()) throw std::runtime_error("real formatting failed");
  return std::string(buf, ptr);
}

std::string format_int(std::int64_t v) { return to_chars_str(v); }
std::string format_u64(std::uint64_t v) { return to_chars_str(v); }

RunRecord make_run_record(const RunResult& result, const ScenarioParams& cell) {
  RunRecord rec;
  rec.scenario_id = result.scenario_id;
  rec.policy = cell.policy;
  rec.bc = cell.bc_mean;
  rec.b = cell.b_pct;
  rec.rep = result.rep;
  rec.seed = result.seed;
  rec.ticks_elapsed = result.ticks_elapsed;
  rec.finished = result.finished;
  rec.remaining_drones = result.remaining_drones;
  rec.utility = result.utility;
  return rec;
}

std::string runs_csv_header() {
  return "scenario_id,policy,bc,b,rep,seed,ticks_elapsed,finished,remaining_drones,utility\n";
}

std::string run_record_row(const RunRecord& r) {
  std::string row;
  row.reserve(96);
  row += format_int(r.scenario_id);
  row += ',';
  row += to_string(r.policy);
  row += ',';
  row += format_real(r.bc);
  row += ',';
  row += format_real(r.b);
  row += ',';
  row += format_int(r.rep);
  row += ',';
  row += format_u64(r.seed);
  row += ',';
  row += format_int(r.ticks_elapsed);
  row += ',';
  row += r.finished ? "true" : "false";
  row += ',';
  row += format_int(r.remaining_drones);
  row += ',';
  row += format_real(r.utility);
  row += '\n';
  return row;
}

std::string runs_csv(const std::vector<RunResult>& results, const SweepPlan& plan) {
  std::string out = runs_csv_header();
  out.reserve(out.size() + results.size() * 64);
  for (const auto& r : results)
    out += run_record_row(make_run_record(r, plan.cell_params(r.scenario_id)));
  return out;
}

std::string summary_csv_header() {
  return "scenario_id,n_reps,avg_remaining,pct_finished,avg_utility,"
         "sd_remaining,sd_finished,sd_utility\n";
}

std::string summary_csv(const std::vector<ScenarioSummary>& summaries) {
  std::string out = summary_csv_header();
  for (const auto& s : summaries) {
    out += format_int(s.scenario_id);
    out += ',';
    out += format_int(s.n_reps);
    out += ',';
    out += format_real(s.avg_remaining);
    out += ',';
    out += format_real(s.pct_finished);
    out += ',';
    out += format_real(s.avg_utility);
    out += ',';
    out += format_real(s.sd_remaining);
    out += ',';
    out += format_real(s.sd_finished);
    out += ',';
    out += format_real(s.sd_utility);
    out += '\n';
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> plotdata_files(
    const std::vector<ScenarioSummary>& summaries, const SweepPlan& plan) {
  std::vector<std::pair<std::string, std::string>> files;
  for (std::size_t pi = 0; pi < plan.policies.size(); ++pi) {
    for (std::size_t bi = 0; bi < plan.b_levels.size(); ++bi) {
      std::string name =
          to_string(plan.policies[pi]) + "_b" + format_real(plan.b_levels[bi]) + ".csv";
      std::string body = "bc,avg_remaining,pct_finished,avg_utility\n";
      for (std::size_t ci = 0; ci < plan.bc_levels.size(); ++ci) {
        const int sid = static_cast<int>((pi * plan.bc_levels.size() + ci) * plan.b_levels.size() + bi);
        const ScenarioSummary& s = summaries.at(sid);
        body += format_real(plan.bc_levels[ci]);
        body += ',';
        body += format_real(s.avg_remaining);
        body += ',';
        body += format_real(s.pct_finished);
        body += ',';
        body += format_real(s.avg_utility);
        body += '\n';
      }
      files.emplace_back(std::move(name), std::move(body));
    }
  }
  return files;
}

std::string trace_csv(const std::vector<TraceRow>& rows) {
  std::string out = "tick,alive,attendants,admitted,mean_soc\n";
  for (const auto& r : rows) {
    out += format_int(r.tick);
    out += ',';
    out += format_int(r.alive);
    out += ',';
    out += format_int(r.attendants);
    out += ',';
    out += format_int(r.admitted);
    out += ',';
    out += format_real(r.mean_soc);
    out += '\n';
  }
  return out;
}

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

double parse_double(const std::string& s) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::runtime_error("bad real value '" + s + "'");
  return v;
}

std::int64_t parse_i64(const std::string& s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::runtime_error("bad integer value '" + s + "'");
  return v;
}

std::uint64_t parse_u64(const std::string& s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::runtime_error("bad seed value '" + s + "'");
  return v;
}

}  // namespace

std::vector<RunResult> parse_runs_csv(const std::string& contents) {
  std::vector<RunResult> out;
  std::size_t start = 0;
  bool header = true;
  while (start < contents.size()) {
    std::size_t end = contents.find('\n', start);
    if (end == std::string::npos) end = contents.size();
    const std::string line = contents.substr(start, end - start);
    start = end + 1;
    if (line.empty()) continue;
    if (header) {
      if (line + "\n" != runs_csv_header())
        throw std::runtime_error("unexpected runs.csv header: " + line);
      header = false;
      continue;
    }
    const auto fields = split(line, ',');
    if (fields.size() != 10) throw std::runtime_error("bad runs.csv row: " + line);
    RunResult r;
    r.scenario_id = static_cast<int>(parse_i64(fields[0]));
    // fields[1..3] (policy, bc, b) are cell attributes, not part of RunResult
    r.rep = static_cast<int>(parse_i64(fields[4]));
    r.seed = parse_u64(fields[5]);
    r.ticks_elapsed = static_cast<int>(parse_i64(fields[6]));
    if (fields[7] != "true" && fields[7] != "false")
      throw std::runtime_error("bad finished flag '" + fields[7] + "'");
    r.finished = fields[7] == "true";
    r.remaining_drones = static_cast<int>(parse_i64(fields[8]));
    r.utility = parse_double(fields[9]);
    out.push_back(r);
  }
  return out;
}

}  // namespace swarmsim
