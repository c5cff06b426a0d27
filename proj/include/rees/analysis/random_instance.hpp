#pragma once

#include <random>

#include "rees/jonq.hpp"

namespace rees {

/// Random sparse homogeneous f (degree d-1) and g (degree d) in the
/// x-variables of `ring`, each with 3 to 6 terms when that many monomials
/// exist. Candidates are drawn until validate_map accepts one. Generalized
/// rings get x_{n+1}-monoids with at least one of f, g involving x_{n+1}.
template <class K>
DeJonquieresMap<K> random_instance(const RingPtr<K>& ring, int d, std::mt19937_64& rng, const Budget& budget = {});

}  // namespace rees
