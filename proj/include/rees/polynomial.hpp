#pragma once

#include <cstddef>
#include <vector>

#include "rees/field.hpp"
#include "rees/monomial.hpp"
#include "rees/ring.hpp"
#include "rees/term_order.hpp"

namespace rees {

template <class K>
struct Term {
  typename K::Elem coeff;
  Monomial mono;

  bool operator==(const Term&) const = default;
};

/// Exact multivariate polynomial. Terms are kept strictly descending in
/// grevlex with nonzero coefficients, so equal polynomials have identical
/// term lists. Values are immutable once built.
template <CoefficientField K>
class Polynomial {
 public:
  using Elem = typename K::Elem;

  /// The zero polynomial.
  explicit Polynomial(RingPtr<K> ring);
  /// Sorts, merges duplicate monomials and drops zero coefficients.
  Polynomial(RingPtr<K> ring, std::vector<Term<K>> terms);

  static Polynomial constant(RingPtr<K> ring, const Elem& c);
  static Polynomial monomial(RingPtr<K> ring, const Elem& c, const Monomial& m);
  static Polynomial variable(RingPtr<K> ring, int var);

  const Ring<K>& ring() const { return *ring_; }
  const RingPtr<K>& ring_ptr() const { return ring_; }
  const K& field() const { return ring_->field(); }
  const std::vector<Term<K>>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Precondition: nonzero.
  const Term<K>& leading_term() const { return terms_.front(); }

  /// Largest total degree of a term, -1 for zero.
  int total_degree() const;
  bool is_homogeneous() const;
  bool is_constant() const;
  /// Largest exponent of `var` over all terms.
  int degree_in(int var) const;
  bool involves(int var) const { return degree_in(var) > 0; }

  Polynomial operator-() const;
  Polynomial scaled(const Elem& c) const;
  Polynomial times(const Elem& c, const Monomial& m) const;
  /// Leading coefficient one; zero stays zero.
  Polynomial monic() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return a.combine(b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a.combine(b, true); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) { return a.multiply(b); }
  Polynomial& operator+=(const Polynomial& b) { return *this = combine(b, false); }
  Polynomial& operator-=(const Polynomial& b) { return *this = combine(b, true); }
  Polynomial& operator*=(const Polynomial& b) { return *this = multiply(b); }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    a.check_same_ring(b);
    return a.terms_ == b.terms_;
  }

  /// Throws MixedRings unless both live in the same ring.
  void check_same_ring(const Polynomial& other) const;

 private:
  Polynomial combine(const Polynomial& b, bool subtract) const;
  Polynomial multiply(const Polynomial& b) const;

  RingPtr<K> ring_;
  std::vector<Term<K>> terms_;
};

template <class K>
Polynomial<K> pow(const Polynomial<K>& p, int e);

/// True when a = c*b for some nonzero scalar c (both nonzero).
template <class K>
bool proportional(const Polynomial<K>& a, const Polynomial<K>& b);

/// Exact quotient p/g; throws InternalInvariantViolation if g does not divide p.
template <class K>
Polynomial<K> divide_exact(const Polynomial<K>& p, const Polynomial<K>& g);

/// The order every Polynomial keeps its terms in.
inline const TermOrder& canonical_order() {
  static const TermOrder order = TermOrder::grevlex();
  return order;
}

}  // namespace rees
