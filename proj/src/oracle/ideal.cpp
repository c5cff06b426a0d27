#include "rees/oracle/ideal.hpp"

#include <bit>
#include <optional>

#include "engine.hpp"

namespace rees {

template <class K>
IdealHandle<K>::IdealHandle(GeneratorSet<K> gens) : gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {
  if (!gens_.ring) throw Error(ErrorKind::InvalidArgument, "ideal without a ring");
  for (const auto& g : gens_.gens) {
    if (g.ring_ptr() != gens_.ring && !(g.ring().spec() == gens_.ring->spec())) {
      throw Error(ErrorKind::MixedRings, "generator from another ring");
    }
  }
}

template <class K>
IdealHandle<K>::IdealHandle(std::string name, RingPtr<K> ring, std::vector<Polynomial<K>> gens)
    : IdealHandle(GeneratorSet<K>::custom(std::move(name), std::move(ring), std::move(gens))) {}

template <class K>
IdealHandle<K> IdealHandle<K>::unit(RingPtr<K> ring) {
  auto one = Polynomial<K>::constant(ring, ring->field().one());
  return IdealHandle("unit", ring, {one});
}

template <class K>
IdealHandle<K> IdealHandle<K>::zero(RingPtr<K> ring) {
  return IdealHandle("zero", std::move(ring), {});
}

template <class K>
const GroebnerBasis<K>& IdealHandle<K>::basis(const TermOrder& order, const Budget& budget) const {
  std::lock_guard lock(cache_->mu);
  auto it = cache_->bases.find(order);
  if (it != cache_->bases.end()) return *it->second;
  auto gb = std::make_unique<GroebnerBasis<K>>(buchberger(gens_, order, budget));
  return *cache_->bases.emplace(order, std::move(gb)).first->second;
}

template <class K>
void IdealHandle<K>::adopt_basis(GroebnerBasis<K> gb) const {
  std::lock_guard lock(cache_->mu);
  TermOrder order = gb.order();
  cache_->bases.try_emplace(order, std::make_unique<GroebnerBasis<K>>(std::move(gb)));
}

template <class K>
bool IdealHandle<K>::contains(const Polynomial<K>& p, const Budget& budget) const {
  if (p.is_zero()) return true;
  return normal_form(p, grevlex_basis(budget)).is_zero();
}

template <class K>
bool IdealHandle<K>::is_zero() const {
  for (const auto& g : gens_.gens) {
    if (!g.is_zero()) return false;
  }
  return true;
}

template <class K>
bool is_subset(const IdealHandle<K>& a, const IdealHandle<K>& b, const Budget& budget) {
  for (const auto& g : a.gens()) {
    if (!b.contains(g, budget)) return false;
  }
  return true;
}

template <class K>
bool ideal_equality(const IdealHandle<K>& a, const IdealHandle<K>& b, const Budget& budget) {
  return is_subset(a, b, budget) && is_subset(b, a, budget);
}

template <class K>
IdealHandle<K> intersect(const IdealHandle<K>& a, const IdealHandle<K>& b, const Budget& budget) {
  const RingPtr<K>& ring = a.ring_ptr();
  if (a.is_zero() || b.is_zero()) return IdealHandle<K>::zero(ring);
  if (a.is_unit(budget)) return b;
  if (b.is_unit(budget)) return a;

  // w sits in slot 0; ring variables move up by one.
  const TermOrder order = TermOrder::block(1);
  detail::Engine<K> engine(ring->field(), order, budget);
  const K& k = ring->field();
  const Monomial w = Monomial::variable(0);
  std::vector<std::vector<Term<K>>> gens;
  for (const auto& g : a.gens()) {
    if (g.is_zero()) continue;
    std::vector<Term<K>> t;
    for (const auto& term : g.terms()) t.push_back({term.coeff, term.mono.shifted(1) * w});
    engine.sort_terms(t);
    gens.push_back(std::move(t));
  }
  for (const auto& g : b.gens()) {
    if (g.is_zero()) continue;
    std::vector<Term<K>> t;
    for (const auto& term : g.terms()) {
      Monomial m = term.mono.shifted(1);
      t.push_back({term.coeff, m});
      t.push_back({k.neg(term.coeff), m * w});
    }
    engine.sort_terms(t);
    gens.push_back(std::move(t));
  }
  auto basis = engine.groebner(std::move(gens));

  std::vector<std::vector<Term<K>>> kept;
  std::vector<Polynomial<K>> polys;
  for (auto& b_elem : basis) {
    if (b_elem.front().mono[0] != 0) continue;
    for (auto& term : b_elem) term.mono = term.mono.shifted(-1);
    polys.emplace_back(ring, b_elem);
    kept.push_back(std::move(b_elem));
  }
  IdealHandle<K> result("intersection", ring, std::move(polys));
  result.adopt_basis(GroebnerBasis<K>(ring, TermOrder::grevlex(), std::move(kept), engine.stats()));
  return result;
}

template <class K>
IdealHandle<K> colon_element(const IdealHandle<K>& a, const Polynomial<K>& g, const Budget& budget) {
  const RingPtr<K>& ring = a.ring_ptr();
  if (a.contains(g, budget)) return IdealHandle<K>::unit(ring);
  if (a.is_zero()) return IdealHandle<K>::zero(ring);
  IdealHandle<K> principal("principal", ring, {g});
  IdealHandle<K> meet = intersect(a, principal, budget);
  std::vector<Polynomial<K>> quotients;
  for (const auto& p : meet.gens()) quotients.push_back(divide_exact(p, g));
  return IdealHandle<K>("colon", ring, std::move(quotients));
}

template <class K>
IdealHandle<K> colon_ideal(const IdealHandle<K>& a, const IdealHandle<K>& b, const Budget& budget) {
  const RingPtr<K>& ring = a.ring_ptr();
  if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "colon by the zero ideal");
  std::optional<IdealHandle<K>> result;
  for (const auto& g : b.gens()) {
    if (g.is_zero() || a.contains(g, budget)) continue;
    IdealHandle<K> part = colon_element(a, g, budget);
    result = result ? intersect(*result, part, budget) : part;
  }
  if (!result) return IdealHandle<K>::unit(ring);
  return IdealHandle<K>("colon", ring, result->gens());
}

template <class K>
SaturationResult<K> saturate(const IdealHandle<K>& a, const IdealHandle<K>& b, const Budget& budget, int max_steps) {
  IdealHandle<K> current = a;
  for (int steps = 0; steps <= max_steps; ++steps) {
    IdealHandle<K> next = colon_ideal(current, b, budget);
    // current ⊆ next always holds, so one containment decides equality.
    if (is_subset(next, current, budget)) return {current, steps};
    current = next;
  }
  throw Error(ErrorKind::ResourceLimit, "saturation did not stabilize within " + std::to_string(max_steps) + " steps");
}

template <class K>
IdealHandle<K> eliminate_x(const IdealHandle<K>& a, const Budget& budget) {
  const RingPtr<K>& ring = a.ring_ptr();
  const RingSpec& spec = ring->spec();
  const GroebnerBasis<K>& gb = a.basis(TermOrder::block(spec.x_count()), budget);
  std::vector<std::vector<Term<K>>> kept;
  std::vector<Polynomial<K>> polys;
  for (const auto& elem : gb.sorted_terms()) {
    // Under the block order a free leading x-part means the element is x-free.
    if (elem.front().mono.degree_in_range(0, spec.x_count()) != 0) continue;
    polys.emplace_back(ring, elem);
    kept.push_back(elem);
  }
  IdealHandle<K> result("elimination", ring, std::move(polys));
  result.adopt_basis(GroebnerBasis<K>(ring, TermOrder::grevlex(), std::move(kept), gb.stats()));
  return result;
}

int max_independent_set(const std::vector<Monomial>& leads, int nvars) {
  std::vector<std::uint32_t> masks;
  masks.reserve(leads.size());
  for (const auto& m : leads) masks.push_back(m.support_mask());
  int best = 0;
  const std::uint32_t limit = 1u << nvars;
  for (std::uint32_t s = 0; s < limit; ++s) {
    int size = std::popcount(s);
    if (size <= best) continue;
    bool independent = true;
    for (std::uint32_t m : masks) {
      if ((m & ~s) == 0) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

template <class K>
int krull_dimension(const IdealHandle<K>& a, const Budget& budget) {
  const GroebnerBasis<K>& gb = a.grevlex_basis(budget);
  if (gb.is_unit()) throw Error(ErrorKind::ImproperIdeal, "the unit ideal has no Krull dimension");
  return max_independent_set(gb.leading_monomials(), a.ring_ptr()->nvars());
}

#define REES_INSTANTIATE(K)                                                                              \
  template class IdealHandle<K>;                                                                         \
  template bool is_subset(const IdealHandle<K>&, const IdealHandle<K>&, const Budget&);                  \
  template bool ideal_equality(const IdealHandle<K>&, const IdealHandle<K>&, const Budget&);             \
  template IdealHandle<K> intersect(const IdealHandle<K>&, const IdealHandle<K>&, const Budget&);        \
  template IdealHandle<K> colon_element(const IdealHandle<K>&, const Polynomial<K>&, const Budget&);     \
  template IdealHandle<K> colon_ideal(const IdealHandle<K>&, const IdealHandle<K>&, const Budget&);      \
  template SaturationResult<K> saturate(const IdealHandle<K>&, const IdealHandle<K>&, const Budget&, int); \
  template IdealHandle<K> eliminate_x(const IdealHandle<K>&, const Budget&);                             \
  template int krull_dimension(const IdealHandle<K>&, const Budget&);

REES_INSTANTIATE(RationalField)
REES_INSTANTIATE(PrimeField)

}  // namespace rees
