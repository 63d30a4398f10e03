#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "zeta_arr/oracle.hpp"

namespace zeta_arr {

enum ExitCode : int {
  kExitOk = 0,
  kExitParse = 2,
  kExitPrecondition = 3,
  kExitBudget = 4,
  kExitMismatch = 5,
};

struct JobConfig {
  std::string command;
  std::string input_path;
  std::int64_t degree = 12;
  std::vector<std::int64_t> u;  // empty: all ones
  std::string variant = "global";
  std::vector<std::uint64_t> primes;
  std::uint64_t budget = kDefaultJetBudget;
  std::string cache_dir;
  std::string format = "json";
  std::string output_path;
  int threads = 1;
  bool normalize = false;  // zeta: also print the single-fraction form
};

// Entry point of the zeta-arr tool; returns the process exit code.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

// Executes one parsed job; output text goes to `out` (or the output file).
int run_job(const JobConfig& config, std::ostream& out, std::ostream& err);

}  // namespace zeta_arr
