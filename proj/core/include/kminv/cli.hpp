#pragma once

#include "kminv/cartan.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>

namespace kminv {

enum class Command { classify, symmetrize, invariants, subalgebra, poincare, cohomology, verify };

struct JobConfig {
  Command command = Command::classify;
  std::string input_path;
  int max_degree = 6;      // invariant-degree cutoff
  int max_length = 12;     // word-length cutoff
  bool json_output = true; // otherwise plain text
  std::uint64_t seed = 1;  // randomized spot checks in `verify`
};

// Reads a matrix file: JSON object or whitespace/CSV integer grid.
CartanMatrix load_matrix(const std::string& path);

// Dispatches one job and writes the report to `out`. Returns the process
// exit status: 0 on success, 2 when `verify` finds a failing assertion.
// Module errors propagate as Error; callers map them to exit codes.
int run(const JobConfig& config, std::ostream& out);

}  // namespace kminv
