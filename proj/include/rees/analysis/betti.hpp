#pragma once

#include <string>
#include <vector>

namespace rees {

/// B^multiplicity(-a, -b).
struct BettiSummand {
  long long multiplicity = 0;
  int a = 0;
  int b = 0;
};

struct BettiModule {
  int index = 0;
  std::vector<BettiSummand> summands;

  long long rank() const;
};

/// Minimal bigraded resolution F_0 <- F_1 <- ... <- F_n of the symmetric
/// algebra B/L, read from the Eagon-Northcott shape.
struct BettiTable {
  int n = 0;
  int d = 0;
  std::vector<BettiModule> modules;

  long long alternating_rank_sum() const;
  std::string to_text() const;
};

/// InvalidArgument unless n >= 2 and d >= 2.
BettiTable betti_table(int n, int d);

}  // namespace rees
