#pragma once

#include <compare>
#include <string>
#include <variant>
#include <vector>

#include "rees/polynomial.hpp"

namespace rees {

/// bideg x_i = (1,0), bideg y_j = (0,1).
struct Bidegree {
  int xdeg = 0;
  int ydeg = 0;

  Bidegree operator+(const Bidegree& o) const { return {xdeg + o.xdeg, ydeg + o.ydeg}; }
  auto operator<=>(const Bidegree&) const = default;
  std::string to_string() const;
};

struct ZeroPolynomial {
  bool operator==(const ZeroPolynomial&) const = default;
};
struct NotBihomogeneous {
  bool operator==(const NotBihomogeneous&) const = default;
};

using BidegreeResult = std::variant<Bidegree, ZeroPolynomial, NotBihomogeneous>;

Bidegree bidegree_of(const Monomial& m, const RingSpec& spec);

template <class K>
BidegreeResult bidegree_of(const Polynomial<K>& p);

/// Ring map fixing every x-variable and sending y_j to images[j-1].
/// The images must lie in the x-subring, except for the identity map.
template <class K>
class Substitution {
 public:
  Substitution(RingPtr<K> ring, std::vector<Polynomial<K>> images);

  static Substitution identity(RingPtr<K> ring);

  const std::vector<Polynomial<K>>& images() const { return images_; }
  const RingPtr<K>& ring_ptr() const { return ring_; }

 private:
  struct Unchecked {};
  Substitution(Unchecked, RingPtr<K> ring, std::vector<Polynomial<K>> images);

  RingPtr<K> ring_;
  std::vector<Polynomial<K>> images_;
};

/// Image of p under y_j -> s.images()[j-1], x_i -> x_i. The Rees parameter t
/// never appears: every generator tested is bihomogeneous, and a
/// bihomogeneous polynomial of y-degree b vanishes under y_j -> F_j t
/// exactly when it vanishes under y_j -> F_j (the result is t^b times it).
template <class K>
Polynomial<K> substitute(const Polynomial<K>& p, const Substitution<K>& s);

}  // namespace rees
