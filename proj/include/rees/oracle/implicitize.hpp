#pragma once

#include "rees/jonq.hpp"
#include "rees/oracle/groebner.hpp"

namespace rees {

/// Implicit equation by elimination alone: the graph ideal
/// (y_i - f*x_i, y_{n+1} - g) contracted to k[y]. Standard maps only.
/// Returns the monic generator; NotPrincipal if the contraction is not
/// generated by one polynomial.
template <class K>
Polynomial<K> implicitize_elimination(const DeJonquieresMap<K>& map, const Budget& budget = {});

}  // namespace rees
