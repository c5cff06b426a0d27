#include "rees/analysis/betti.hpp"

#include <sstream>

#include "rees/errors.hpp"

namespace rees {

namespace {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

long long BettiModule::rank() const {
  long long r = 0;
  for (const auto& s : summands) r += s.multiplicity;
  return r;
}

long long BettiTable::alternating_rank_sum() const {
  long long sum = 0;
  for (const auto& m : modules) sum += (m.index % 2 == 0 ? 1 : -1) * m.rank();
  return sum;
}

std::string BettiTable::to_text() const {
  std::ostringstream out;
  for (const auto& m : modules) {
    out << "F" << m.index << " =";
    bool first = true;
    for (const auto& s : m.summands) {
      out << (first ? " " : " + ") << "B";
      if (s.multiplicity != 1) out << "^" << s.multiplicity;
      if (s.a != 0 || s.b != 0) out << "(" << -s.a << "," << -s.b << ")";
      first = false;
    }
    out << "  rank " << m.rank() << "\n";
  }
  return out.str();
}

BettiTable betti_table(int n, int d) {
  if (n < 2 || d < 2) throw Error(ErrorKind::InvalidArgument, "betti_table needs n >= 2 and d >= 2");
  BettiTable t{n, d, {}};
  t.modules.push_back({0, {{1, 0, 0}}});
  t.modules.push_back({1, {{1, d - 1, 1}, {binomial(n, 2), 1, 1}}});
  // Mapping cone of h on the Eagon-Northcott complex E of the 2 x n matrix.
  // E_i splits over the bidegrees (a, i+1-a), 1 <= a <= i, each C(n, i+1) times.
  for (int i = 2; i <= n; ++i) {
    BettiModule m{i, {}};
    for (int a = i - 1; a >= 1; --a) m.summands.push_back({binomial(n, i), d - 1 + a, i + 1 - a});
    for (int a = i; a >= 1; --a) m.summands.push_back({binomial(n, i + 1), a, i + 1 - a});
    t.modules.push_back(std::move(m));
  }
  for (auto& m : t.modules) {
    std::erase_if(m.summands, [](const BettiSummand& s) { return s.multiplicity == 0; });
  }
  return t;
}

}  // namespace rees
