#include "rees/oracle/groebner.hpp"

#include "engine.hpp"

namespace rees {

template <class K>
GroebnerBasis<K>::GroebnerBasis(RingPtr<K> ring, TermOrder order, std::vector<TermList> basis, GroebnerStats stats)
    : ring_(std::move(ring)), order_(order), basis_(std::move(basis)), stats_(stats) {}

template <class K>
bool GroebnerBasis<K>::is_unit() const {
  return basis_.size() == 1 && basis_.front().front().mono.is_one();
}

template <class K>
std::vector<Polynomial<K>> GroebnerBasis<K>::polynomials() const {
  std::vector<Polynomial<K>> out;
  out.reserve(basis_.size());
  for (const auto& b : basis_) out.emplace_back(ring_, b);
  return out;
}

template <class K>
std::vector<Monomial> GroebnerBasis<K>::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(basis_.size());
  for (const auto& b : basis_) out.push_back(b.front().mono);
  return out;
}

template <class K>
GroebnerBasis<K> buchberger(const std::vector<Polynomial<K>>& gens, const TermOrder& order, const Budget& budget) {
  if (gens.empty()) throw Error(ErrorKind::InvalidArgument, "buchberger needs at least one generator");
  const RingPtr<K>& ring = gens.front().ring_ptr();
  detail::Engine<K> engine(ring->field(), order, budget);
  std::vector<std::vector<Term<K>>> input;
  input.reserve(gens.size());
  for (const auto& g : gens) {
    g.check_same_ring(gens.front());
    input.push_back(engine.from_polynomial(g));
  }
  auto basis = engine.groebner(std::move(input));
  return GroebnerBasis<K>(ring, order, std::move(basis), engine.stats());
}

template <class K>
Polynomial<K> normal_form(const Polynomial<K>& p, const GroebnerBasis<K>& gb) {
  if (p.ring_ptr() != gb.ring_ptr() && !(p.ring().spec() == gb.ring_ptr()->spec())) {
    throw Error(ErrorKind::MixedRings, "normal form against a basis of another ring");
  }
  detail::Engine<K> engine(p.field(), gb.order(), Budget{~0ull, ~0ull});
  typename detail::Engine<K>::Reducers reducers;
  for (const auto& b : gb.sorted_terms()) reducers.add(&b);
  return Polynomial<K>(p.ring_ptr(), engine.reduce(engine.from_polynomial(p), reducers));
}

template class GroebnerBasis<RationalField>;
template class GroebnerBasis<PrimeField>;
template GroebnerBasis<RationalField> buchberger(const std::vector<Polynomial<RationalField>>&, const TermOrder&,
                                                 const Budget&);
template GroebnerBasis<PrimeField> buchberger(const std::vector<Polynomial<PrimeField>>&, const TermOrder&,
                                              const Budget&);
template Polynomial<RationalField> normal_form(const Polynomial<RationalField>&, const GroebnerBasis<RationalField>&);
template Polynomial<PrimeField> normal_form(const Polynomial<PrimeField>&, const GroebnerBasis<PrimeField>&);

}  // namespace rees
