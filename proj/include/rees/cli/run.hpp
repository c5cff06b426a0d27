#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "rees/cli/instance.hpp"

namespace rees {

/// One invocation of the jonq tool.
struct Command {
  /// sequence | rees | implicitize | betti | report | verify | oracle
  std::string verb;
  std::string instance_path;
  /// Overrides the instance field ("Q" or "Fp=<p>").
  std::optional<std::string> field;
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> budget_pairs;
  bool json = false;
  bool corrupt = false;
  bool timing = false;
  /// oracle only: gb | saturate | eliminate | dim | colon
  std::string oracle_op;
  /// oracle only: minors | L | J | K | m | J<i>
  std::string oracle_set;
  std::string oracle_by = "m";
};

/// 0 success, 1 invalid input, 2 verification failure, 3 resource limit.
struct RunResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Never throws for library errors; they become a one-line
/// "error: <Kind>: <message>" on err with the matching exit code.
RunResult run(const Command& command);

}  // namespace rees
