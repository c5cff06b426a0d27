#include "rees/term_order.hpp"

namespace rees {
namespace {

// grevlex restricted to variables [begin, end)
int grevlex_range(const Monomial& a, const Monomial& b, int begin, int end) {
  int da = a.degree_in_range(begin, end);
  int db = b.degree_in_range(begin, end);
  if (da != db) return da < db ? -1 : 1;
  for (int i = end - 1; i >= begin; --i) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::Grevlex: {
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      for (int i = kMaxVars - 1; i >= 0; --i) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
      }
      return 0;
    }
    case Kind::Lex:
      for (int i = 0; i < kMaxVars; ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      }
      return 0;
    case Kind::Block: {
      int c = grevlex_range(a, b, 0, block_);
      if (c != 0) return c;
      return grevlex_range(a, b, block_, kMaxVars);
    }
  }
  return 0;
}

std::string TermOrder::name() const {
  switch (kind_) {
    case Kind::Grevlex: return "grevlex";
    case Kind::Lex: return "lex";
    case Kind::Block: return "block(" + std::to_string(block_) + ")";
  }
  return "?";
}

}  // namespace rees
