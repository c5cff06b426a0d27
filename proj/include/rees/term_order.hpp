#pragma once

#include <compare>
#include <string>

#include "rees/monomial.hpp"

namespace rees {

/// Monomial order. `Block(k)` compares the first k variables by grevlex
/// and breaks ties by grevlex on the remaining variables, which makes it an
/// elimination order for the first block.
class TermOrder {
 public:
  enum class Kind { Grevlex, Lex, Block };

  static TermOrder grevlex() { return TermOrder(Kind::Grevlex, 0); }
  static TermOrder lex() { return TermOrder(Kind::Lex, 0); }
  static TermOrder block(int first_block_size) { return TermOrder(Kind::Block, first_block_size); }

  Kind kind() const { return kind_; }
  int block_size() const { return block_; }

  /// Negative, zero or positive as a is smaller, equal or greater than b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string name() const;

  auto operator<=>(const TermOrder&) const = default;

 private:
  TermOrder(Kind kind, int block) : kind_(kind), block_(block) {}

  Kind kind_;
  int block_;
};

}  // namespace rees
