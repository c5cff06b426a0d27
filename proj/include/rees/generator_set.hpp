#pragma once

#include <string>
#include <vector>

#include "rees/polynomial.hpp"

namespace rees {

enum class GeneratorLabel { Minors, SymmetricL, PartialJ, ReesJ, K, Custom };

/// A named list of ideal generators. No minimalization is attempted.
template <class K>
struct GeneratorSet {
  GeneratorLabel label = GeneratorLabel::Custom;
  /// i for PartialJ (the ideal J_i).
  int index = 0;
  /// Display name for Custom sets.
  std::string custom_name;
  RingPtr<K> ring;
  std::vector<Polynomial<K>> gens;

  std::string name() const {
    switch (label) {
      case GeneratorLabel::Minors: return "minors";
      case GeneratorLabel::SymmetricL: return "L";
      case GeneratorLabel::PartialJ: return "J" + std::to_string(index);
      case GeneratorLabel::ReesJ: return "J";
      case GeneratorLabel::K: return "K";
      case GeneratorLabel::Custom: return custom_name.empty() ? "ideal" : custom_name;
    }
    return "ideal";
  }

  static GeneratorSet custom(std::string name, RingPtr<K> ring, std::vector<Polynomial<K>> gens) {
    return {GeneratorLabel::Custom, 0, std::move(name), std::move(ring), std::move(gens)};
  }
};

}  // namespace rees
