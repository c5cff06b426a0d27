#pragma once

#include <string>

#include "rees/ring.hpp"

namespace rees {

/// Dimension and depth of the Rees algebra, taken from the closed formulas
/// for de Jonquieres maps. Nothing here is computed homologically.
struct CMReport {
  Mode mode = Mode::Standard;
  int n = 0;
  int d = 0;
  int dim_rees = 0;
  int depth_rees = 0;
  bool is_cm = false;
  bool is_almost_cm = false;

  /// "dim=4 depth=4 CM=yes (d=3 ≤ n=3)" followed by an almost-CM line.
  std::string to_text() const;
};

CMReport cm_report(Mode mode, int n, int d);

}  // namespace rees
