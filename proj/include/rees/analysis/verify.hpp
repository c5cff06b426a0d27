#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rees/jonq.hpp"

namespace rees {

enum class CheckStatus { Pass, Fail, ResourceLimit, Observed, Skipped };

std::string to_string(CheckStatus status);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Skipped;
  /// Failing generator, observed value, or limit message. Empty on a plain pass.
  std::string witness;
  double seconds = 0;
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  /// Random columns tried by the well-definedness check.
  int trials = 10;
  Budget budget;
  /// Drop the last term of h2 (h1 for one-step sequences) before checking.
  bool corrupt = false;
  /// Linkage identities are checked for i = 1..linkage_max.
  int linkage_max = 2;
  /// Report per-check wall time. Off by default so output is reproducible.
  bool timing = false;
};

struct VerifyReport {
  std::string mode;
  int n = 0;
  int d = 0;
  std::string field;
  std::string f;
  std::string g;
  std::uint64_t seed = 0;
  bool timing = false;
  std::vector<CheckResult> checks;

  bool any_failed() const;
  bool any_resource_limit() const;
  const CheckResult* find(const std::string& name) const;
  std::string to_text() const;
  std::string to_json() const;
};

/// Checks, in order: kernel, bidegree_ladder, exchange, well_defined,
/// saturation, elimination, dimension, linkage. A ResourceLimit inside one
/// check is recorded and the remaining checks still run.
template <class K>
VerifyReport verify_suite(const DeJonquieresMap<K>& map, const VerifyOptions& options = {});

}  // namespace rees
