#pragma once

#include <istream>
#include <string>

#include "swarmsim/sweep.hpp"

namespace swarmsim {

// Reads a flat `key = value` configuration (UTF-8, one key per line, `#`
// starts a comment, list values comma-separated) into a SweepPlan. Keys not
// present keep their defaults.
//
// Recognized keys:
//   qty, sd, lw, up, m, k, ticks, bg          scalar model parameters
//   bc_levels, b_levels                        factor lists
//   policies                                   list of BL/CT
//   reps, master_seed                          replication controls
//
// Unknown keys, unparsable values, and invariant violations raise
// std::runtime_error carrying the offending line number.
SweepPlan parse_config(std::istream& in);
SweepPlan parse_config_file(const std::string& path);

}  // namespace swarmsim
