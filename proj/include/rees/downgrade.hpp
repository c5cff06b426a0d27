#pragma once

#include <optional>
#include <random>
#include <vector>

#include "rees/generator_set.hpp"
#include "rees/jonq.hpp"

namespace rees {

/// h_1, ..., h_L with bideg h_i = (d-i, i).
template <class K>
struct DowngradedSequence {
  std::vector<Polynomial<K>> polys;

  int length() const { return static_cast<int>(polys.size()); }
  /// 1-based.
  const Polynomial<K>& h(int i) const { return polys.at(static_cast<std::size_t>(i - 1)); }
};

/// y1*(dh)_1 + ... + yn*(dh)_n with the canonical column: in every term the
/// x_j of smallest index becomes y_j. NotDowngradable if a term avoids x1..xn.
template <class K>
Polynomial<K> downgrade_step(const Polynomial<K>& h);

/// As above with a random dividing index per term.
template <class K>
Polynomial<K> downgrade_step(const Polynomial<K>& h, std::mt19937_64& rng);

/// InternalInvariantViolation if some h_i vanishes.
template <class K>
DowngradedSequence<K> downgraded_sequence(const DeJonquieresMap<K>& map);

/// A sequence built from random columns, for dg and for every step.
template <class K>
DowngradedSequence<K> downgraded_sequence(const DeJonquieresMap<K>& map, std::mt19937_64& rng);

/// x_i*y_j - x_j*y_i for 1 <= i < j <= n.
template <class K>
GeneratorSet<K> minors_generators(const RingPtr<K>& ring);

/// L = minors + (h_1).
template <class K>
GeneratorSet<K> symmetric_ideal(const DeJonquieresMap<K>& map);

/// J_i = minors + (h_1, ..., h_i).
template <class K>
GeneratorSet<K> j_ideal(const DowngradedSequence<K>& seq, int i);

/// J = minors + the whole sequence.
template <class K>
GeneratorSet<K> rees_ideal(const DeJonquieresMap<K>& map);

template <class K>
GeneratorSet<K> rees_ideal(const DowngradedSequence<K>& seq);

/// h_d for standard maps; nullopt for generalized maps, which are dominant.
template <class K>
std::optional<Polynomial<K>> implicit_equation(const DeJonquieresMap<K>& map);

/// K = minors + (x_n, y_n).
template <class K>
GeneratorSet<K> k_ideal(const RingPtr<K>& ring);

/// m = (x1, ..., xn); x_{n+1} is not included in generalized rings.
template <class K>
GeneratorSet<K> maximal_ideal(const RingPtr<K>& ring);

}  // namespace rees
