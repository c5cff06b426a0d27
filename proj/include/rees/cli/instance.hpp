#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "rees/jonq.hpp"

namespace rees {

/// Raw contents of an instance file:
///
///   mode = standard | generalized
///   n = <int>
///   field = Q | Fp <prime>        (optional, default Q)
///   f = <poly>
///   g = <poly>
///
/// Blank lines and lines starting with '#' are ignored.
struct InstanceFile {
  Mode mode = Mode::Standard;
  int n = 0;
  FieldSpec field;
  std::string f;
  std::string g;
};

/// Format errors name the offending line.
InstanceFile parse_instance_text(std::string_view text);

/// Io if the file cannot be read.
InstanceFile read_instance_file(const std::filesystem::path& path);

/// "Q", "Fp=<p>" (command line) or "Fp <p>" (instance files).
FieldSpec parse_field(std::string_view text);

using AnyMap = std::variant<DeJonquieresMap<RationalField>, DeJonquieresMap<PrimeField>>;

/// Parses f and g in the instance ring and validates the map.
AnyMap load_instance(const InstanceFile& file, const Budget& budget = {});

}  // namespace rees
