#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "qdilog/dynkin.hpp"

namespace qdilog {

struct RunConfig {
  std::string command;
  std::string quiver_path;
  std::string partition_spec;  ///< inline JSON or a path; empty for the default
  std::string gamma_spec;
  std::string bound_spec;
  int q_order = 20;
  std::string format = "text";
  bool all_partitions = false;
  bool spanning_blocks = false;
  bool brute_force = false;
  std::size_t cap = kDefaultKostantCap;

  int v_max() const { return 2 * q_order; }
};

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitInput = 2 };

/// Runs one command. `args` excludes the program name. The last line written
/// to `out` is always a one-line summary (a JSON row with --format jsonl).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qdilog
