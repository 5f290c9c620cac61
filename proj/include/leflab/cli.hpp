#ifndef LEFLAB_CLI_HPP
#define LEFLAB_CLI_HPP

#include "leflab/io.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace leflab::cli {

inline constexpr const char* kVersion = "lefschetz-lab 0.1.0";

struct Options {
  std::string command;
  std::string input_path;
  std::optional<std::string> out_path;
  std::uint64_t seed = 0;
  std::optional<long> budget;              // split search step budget
  std::optional<std::pair<long, long>> range;  // line-bundle exponent range
  std::optional<std::string> cache_dir;    // falls back to LEFLAB_CACHE
};

struct Outcome {
  io::json report;
  int exit_code = 0;  // 0 ok, 1 failed verdict/check, 2 invalid input
};

/// Executes one scenario: reads the input file, runs the command, assembles
/// the report (command, input hashes, results, checks, seed, version,
/// timing), optionally writes it to out_path.
Outcome run(const Options& options);

/// Commands: signature, ns-lie, mukai-density, k3-mirror, abelian-mirror,
/// stabilizer-lie.
bool known_command(const std::string& name);

}  // namespace leflab::cli

#endif
