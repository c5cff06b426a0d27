#pragma once

#include <cstdint>
#include <vector>

#include "rees/generator_set.hpp"
#include "rees/polynomial.hpp"
#include "rees/term_order.hpp"

namespace rees {

/// Work limits for one Buchberger run. Exceeding either raises ResourceLimit.
struct Budget {
  std::uint64_t max_pairs = 1'000'000;
  std::uint64_t max_monomial_ops = 10'000'000;
};

struct GroebnerStats {
  std::uint64_t pairs_reduced = 0;
  std::uint64_t pairs_skipped = 0;
  std::uint64_t monomial_ops = 0;
};

/// Reduced Groebner basis: monic leading coefficients, no leading monomial
/// divides another, tails fully reduced. Sorted by descending leading
/// monomial, which makes it unique per (ideal, order).
template <class K>
class GroebnerBasis {
 public:
  using TermList = std::vector<Term<K>>;

  GroebnerBasis(RingPtr<K> ring, TermOrder order, std::vector<TermList> basis, GroebnerStats stats);

  const TermOrder& order() const { return order_; }
  const RingPtr<K>& ring_ptr() const { return ring_; }
  std::size_t size() const { return basis_.size(); }
  bool is_zero_ideal() const { return basis_.empty(); }
  bool is_unit() const;
  const GroebnerStats& stats() const { return stats_; }

  /// Basis elements in canonical (grevlex) form.
  std::vector<Polynomial<K>> polynomials() const;
  /// Leading monomials with respect to order().
  std::vector<Monomial> leading_monomials() const;
  /// Terms sorted by order(), leading term first.
  const std::vector<TermList>& sorted_terms() const { return basis_; }

 private:
  RingPtr<K> ring_;
  TermOrder order_;
  std::vector<TermList> basis_;
  GroebnerStats stats_;
};

/// Buchberger's algorithm with Gebauer-Moeller pair elimination and the
/// normal selection strategy. Zero generators are ignored; an all-zero list
/// yields the empty basis of the zero ideal.
template <class K>
GroebnerBasis<K> buchberger(const std::vector<Polynomial<K>>& gens, const TermOrder& order,
                            const Budget& budget = {});

/// As above; an empty generator list gives the zero ideal's empty basis.
template <class K>
GroebnerBasis<K> buchberger(const GeneratorSet<K>& gens, const TermOrder& order, const Budget& budget = {}) {
  if (gens.gens.empty()) return GroebnerBasis<K>(gens.ring, order, {}, {});
  return buchberger(gens.gens, order, budget);
}

/// Fully reduced remainder of p modulo gb. Zero exactly when p lies in the ideal.
template <class K>
Polynomial<K> normal_form(const Polynomial<K>& p, const GroebnerBasis<K>& gb);

}  // namespace rees
