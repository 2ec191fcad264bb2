#include "swarmsim/config.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace swarmsim {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw std::runtime_error("line " + std::to_string(line) + ": " + msg);
}

double parse_real(const std::string& s, int line) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) fail(line, "unparsable value '" + s + "'");
  return v;
}

std::int64_t parse_int(const std::string& s, int line) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) fail(line, "unparsable value '" + s + "'");
  return v;
}

std::uint64_t parse_u64(const std::string& s, int line) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) fail(line, "unparsable value '" + s + "'");
  return v;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(trim(item));
  return out;
}

// Maps a validation message's leading field name to the config key that
// sets it, so errors point at the offending line.
std::string field_to_key(const std::string& message) {
  const std::string field = message.substr(0, message.find(' '));
  if (field == "qty") return "qty";
  if (field == "max_ticks") return "ticks";
  if (field == "memory_m") return "m";
  if (field == "predictors_k") return "k";
  if (field == "lw") return "lw";
  if (field == "up") return "up";
  if (field == "b_pct") return "b_levels";
  if (field == "bc_mean") return "bc_levels";
  if (field == "bc_sd") return "sd";
  if (field == "bg") return "bg";
  if (field == "reps") return "reps";
  return "";
}

}  // namespace

SweepPlan parse_config(std::istream& in) {
  SweepPlan plan;
  std::map<std::string, int> key_lines;

  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(line_no, "expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) fail(line_no, "empty key");
    if (value.empty()) fail(line_no, "empty value for key '" + key + "'");
    if (key_lines.count(key)) fail(line_no, "duplicate key '" + key + "'");
    key_lines[key] = line_no;

    if (key == "qty") {
      plan.base.qty = static_cast<int>(parse_int(value, line_no));
    } else if (key == "sd") {
      plan.base.bc_sd = parse_real(value, line_no);
    } else if (key == "lw") {
      plan.base.lw = parse_real(value, line_no);
    } else if (key == "up") {
      plan.base.up = parse_real(value, line_no);
    } else if (key == "m") {
      plan.base.memory_m = static_cast<int>(parse_int(value, line_no));
    } else if (key == "k") {
      plan.base.predictors_k = static_cast<int>(parse_int(value, line_no));
    } else if (key == "ticks") {
      plan.base.max_ticks = static_cast<int>(parse_int(value, line_no));
    } else if (key == "bg") {
      plan.base.bg = parse_real(value, line_no);
    } else if (key == "bc_levels") {
      plan.bc_levels.clear();
      for (const auto& item : split_list(value)) plan.bc_levels.push_back(parse_real(item, line_no));
      if (plan.bc_levels.empty()) fail(line_no, "bc_levels list is empty");
    } else if (key == "b_levels") {
      plan.b_levels.clear();
      for (const auto& item : split_list(value)) plan.b_levels.push_back(parse_real(item, line_no));
      if (plan.b_levels.empty()) fail(line_no, "b_levels list is empty");
    } else if (key == "policies") {
      plan.policies.clear();
      for (const auto& item : split_list(value)) {
        try {
          plan.policies.push_back(policy_from_string(item));
        } catch (const std::invalid_argument& e) {
          fail(line_no, e.what());
        }
      }
      if (plan.policies.empty()) fail(line_no, "policies list is empty");
    } else if (key == "reps") {
      plan.reps = static_cast<int>(parse_int(value, line_no));
    } else if (key == "master_seed") {
      plan.master_seed = parse_u64(value, line_no);
    } else {
      fail(line_no, "unknown key '" + key + "'");
    }
  }

  // Validate every cell now so a broken plan never reaches the runner.
  auto report = [&](const std::string& message) {
    const std::string key = field_to_key(message);
    const auto it = key_lines.find(key);
    if (it != key_lines.end()) fail(it->second, message);
    throw std::runtime_error(message);
  };
  if (plan.reps < 1) report("reps >= 1 violated");
  for (int sid = 0; sid < plan.cell_count(); ++sid) {
    try {
      validate_params(plan.cell_params(sid));
    } catch (const std::invalid_argument& e) {
      report(e.what());
    }
  }
  return plan;
}

SweepPlan parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
  return parse_config(in);
}

}  // namespace swarmsim
