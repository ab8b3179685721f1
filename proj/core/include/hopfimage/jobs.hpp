#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hopfimage/error.hpp"
#include "hopfimage/io.hpp"

namespace hopfimage {

inline constexpr const char* kEngineVersion = "0.3.0";

/// One command-line job. Inputs are builtin names, file paths or inline JSON.
struct JobSpec {
  std::string command;
  std::vector<std::string> inputs;
  std::size_t scan_len = 4;
  std::size_t word_bound = 4;
  std::size_t trunc = 6;
  std::uint64_t seed = 1;
  std::size_t samples = 20;
  /// Longest reduced word in random free product elements.
  std::size_t support = 3;
  /// free-permanence: "free" (H * K), "z2" (k Z2 * H) or "square" (H * H).
  std::string mode = "free";
  /// separate: JSON array of vectors; empty means random ones.
  std::string vectors;
  /// separate: size of the random independent set (0 picks min(dim, 2)).
  std::size_t count = 0;
  bool skip_verify = false;
  std::size_t cap_entries = default_cap_entries();
  bool timing = false;
};

struct JobResult {
  int exit_code = 0;
  Json report;
  double elapsed_ms = 0;
};

/// Exit codes: 0 completed, 1 negative verdict, 2 input error, 3 bound exceeded.
int exit_code_for(ErrorCode code);
const std::vector<std::string>& job_commands();

/// Never throws for engine errors; they become the report's "error" entry.
JobResult run(const JobSpec& job);

}  // namespace hopfimage
