#include "rees/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

#include "rees/errors.hpp"

namespace rees {
namespace {

template <class K>
void canonicalize(const K& field, std::vector<Term<K>>& terms) {
  const TermOrder& order = canonical_order();
  std::sort(terms.begin(), terms.end(),
            [&](const Term<K>& a, const Term<K>& b) { return order.greater(a.mono, b.mono); });
  std::vector<Term<K>> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = field.add(out.back().coeff, t.coeff);
    } else {
      if (!out.empty() && field.is_zero(out.back().coeff)) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && field.is_zero(out.back().coeff)) out.pop_back();
  terms = std::move(out);
}

}  // namespace

template <CoefficientField K>
Polynomial<K>::Polynomial(RingPtr<K> ring) : ring_(std::move(ring)) {}

template <CoefficientField K>
Polynomial<K>::Polynomial(RingPtr<K> ring, std::vector<Term<K>> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
  const int nvars = ring_->nvars();
  for (const auto& t : terms_) {
    for (int v = nvars; v < kMaxVars; ++v) {
      if (t.mono[v] != 0) throw Error(ErrorKind::InvalidArgument, "monomial uses a variable outside the ring");
    }
  }
  canonicalize(ring_->field(), terms_);
}

template <CoefficientField K>
Polynomial<K> Polynomial<K>::constant(RingPtr<K> ring, const Elem& c) {
  return monomial(std::move(ring), c, Monomial{});
}

template <CoefficientField K>
Polynomial<K> Polynomial<K>::monomial(RingPtr<K> ring, const Elem& c, const Monomial& m) {
  std::vector<Term<K>> terms;
  terms.push_back({c, m});
  return Polynomial(std::move(ring), std::move(terms));
}

template <CoefficientField K>
Polynomial<K> Polynomial<K>::variable(RingPtr<K> ring, int var) {
  if (var < 0 || var >= ring->nvars()) throw Error(ErrorKind::UnknownVariable, "variable index out of range");
  Elem one = ring->field().one();
  return monomial(std::move(ring), one, Monomial::variable(var));
}

template <CoefficientField K>
int Polynomial<K>::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

template <CoefficientField K>
bool Polynomial<K>::is_homogeneous() const {
  for (const auto& t : terms_) {
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  }
  return true;
}

template <CoefficientField K>
bool Polynomial<K>::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

template <CoefficientField K>
int Polynomial<K>::degree_in(int var) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max<int>(d, t.mono[var]);
  return d;
}

template <CoefficientField K>
Polynomial<K> Polynomial<K>::operator-() const {
  Polynomial r(ring_);
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff = field().neg(t.coeff);
  return r;
}

template <CoefficientField K>
Polynomial<K> Polynomial<K>::scaled(const Elem& c) const {
  Polynomial r(ring_);
  if (field().is_zero(c)) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff = field().mul(t.coeff, c);
  return r;
}

template <CoefficientField K>
Polynomial<K> Polynomial<K>::times(const Elem& c, const Monomial& m) const {
  Polynomial r(ring_);
  if (field().is_zero(c)) return r;
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves any monomial order.
  for (const auto& t : terms_) r.terms_.push_back({field().mul(t.coeff, c), t.mono * m});
  return r;
}

template <CoefficientField K>
Polynomial<K> Polynomial<K>::monic() const {
  if (is_zero()) return *this;
  return scaled(field().inv(terms_.front().coeff));
}

template <CoefficientField K>
void Polynomial<K>::check_same_ring(const Polynomial& other) const {
  if (ring_ != other.ring_ && !(ring_->spec() == other.ring_->spec())) {
    throw Error(ErrorKind::MixedRings, "operands live in different rings");
  }
}

template <CoefficientField K>
Polynomial<K> Polynomial<K>::combine(const Polynomial& b, bool subtract) const {
  check_same_ring(b);
  const K& k = field();
  const TermOrder& order = canonical_order();
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < b.terms_.size()) {
    int c;
    if (i == terms_.size()) {
      c = -1;
    } else if (j == b.terms_.size()) {
      c = 1;
    } else {
      c = order.compare(terms_[i].mono, b.terms_[j].mono);
    }
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      const auto& t = b.terms_[j++];
      r.terms_.push_back({subtract ? k.neg(t.coeff) : t.coeff, t.mono});
    } else {
      Elem s = subtract ? k.sub(terms_[i].coeff, b.terms_[j].coeff) : k.add(terms_[i].coeff, b.terms_[j].coeff);
      if (!k.is_zero(s)) r.terms_.push_back({std::move(s), terms_[i].mono});
      ++i;
      ++j;
    }
  }
  return r;
}

template <CoefficientField K>
Polynomial<K> Polynomial<K>::multiply(const Polynomial& b) const {
  check_same_ring(b);
  const K& k = field();
  std::unordered_map<Monomial, Elem> acc;
  acc.reserve(terms_.size() * b.terms_.size());
  for (const auto& s : terms_) {
    for (const auto& t : b.terms_) {
      Monomial m = s.mono * t.mono;
      auto [it, inserted] = acc.try_emplace(m, k.mul(s.coeff, t.coeff));
      if (!inserted) it->second = k.add(it->second, k.mul(s.coeff, t.coeff));
    }
  }
  std::vector<Term<K>> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!k.is_zero(c)) terms.push_back({std::move(c), m});
  }
  return Polynomial(ring_, std::move(terms));
}

template <class K>
Polynomial<K> pow(const Polynomial<K>& p, int e) {
  if (e < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent");
  Polynomial<K> result = Polynomial<K>::constant(p.ring_ptr(), p.field().one());
  Polynomial<K> base = p;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

template <class K>
bool proportional(const Polynomial<K>& a, const Polynomial<K>& b) {
  a.check_same_ring(b);
  if (a.is_zero() || b.is_zero() || a.size() != b.size()) return false;
  return a.monic() == b.monic();
}

template <class K>
Polynomial<K> divide_exact(const Polynomial<K>& p, const Polynomial<K>& g) {
  p.check_same_ring(g);
  if (g.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero polynomial");
  const K& k = p.field();
  const auto& lead = g.leading_term();
  typename K::Elem inv_lc = k.inv(lead.coeff);
  std::vector<Term<K>> quotient;
  Polynomial<K> rest = p;
  while (!rest.is_zero()) {
    const auto& t = rest.leading_term();
    if (!lead.mono.divides(t.mono)) {
      throw Error(ErrorKind::InternalInvariantViolation, "exact division has a nonzero remainder");
    }
    typename K::Elem c = k.mul(t.coeff, inv_lc);
    Monomial m = t.mono / lead.mono;
    quotient.push_back({c, m});
    rest -= g.times(c, m);
  }
  return Polynomial<K>(p.ring_ptr(), std::move(quotient));
}

template class Polynomial<RationalField>;
template class Polynomial<PrimeField>;
template Polynomial<RationalField> pow(const Polynomial<RationalField>&, int);
template Polynomial<PrimeField> pow(const Polynomial<PrimeField>&, int);
template bool proportional(const Polynomial<RationalField>&, const Polynomial<RationalField>&);
template bool proportional(const Polynomial<PrimeField>&, const Polynomial<PrimeField>&);
template Polynomial<RationalField> divide_exact(const Polynomial<RationalField>&, const Polynomial<RationalField>&);
template Polynomial<PrimeField> divide_exact(const Polynomial<PrimeField>&, const Polynomial<PrimeField>&);

}  // namespace rees
