#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rees/analysis/betti.hpp"
#include "rees/monomial.hpp"
#include "rees/oracle/groebner.hpp"

namespace rees {

/// K(z) with H(z) = K(z) / (1-z)^nvars, graded by total degree.
struct HilbertNumerator {
  /// coeffs[k] multiplies z^k; no trailing zeros.
  std::vector<std::int64_t> coeffs;

  std::int64_t at_one() const;
  /// Multiplicity of z = 1 as a root; -1 for the zero numerator.
  int vanishing_order_at_one() const;
  std::string to_text() const;
  bool operator==(const HilbertNumerator&) const = default;
};

/// sum over i of (-1)^i sum of z^(a+b) over the shifts of F_i.
HilbertNumerator hilbert_from_betti(const BettiTable& table);

/// Numerator of B/(monomials) by pivot recursion on a variable.
HilbertNumerator hilbert_of_monomial_ideal(std::vector<Monomial> gens);

/// Numerator of B/I from the leading monomials of a Groebner basis of I.
template <class K>
HilbertNumerator hilbert_from_initial(const GroebnerBasis<K>& gb) {
  return hilbert_of_monomial_ideal(gb.leading_monomials());
}

}  // namespace rees
