#pragma once

#include <random>
#include <vector>

#include "rees/oracle/groebner.hpp"
#include "rees/polynomial.hpp"

namespace rees {

/// A validated de Jonquieres map with identity support: the ideal
/// I = (f*x1, ..., f*xn, g). Only validate_map builds one.
template <class K>
class DeJonquieresMap {
 public:
  const RingPtr<K>& ring_ptr() const { return ring_; }
  const RingSpec& spec() const { return ring_->spec(); }
  Mode mode() const { return spec().mode; }
  int n() const { return spec().n; }
  const Polynomial<K>& f() const { return f_; }
  const Polynomial<K>& g() const { return g_; }
  int d() const { return d_; }
  /// Length of the downgraded sequence: d, or d-1 for generalized maps.
  int sequence_length() const { return mode() == Mode::Standard ? d_ : d_ - 1; }
  /// The generators f*x1, ..., f*xn, g of I.
  std::vector<Polynomial<K>> ideal_generators() const;

 private:
  DeJonquieresMap(Polynomial<K> f, Polynomial<K> g, int d)
      : ring_(f.ring_ptr()), f_(std::move(f)), g_(std::move(g)), d_(d) {}

  template <class F>
  friend DeJonquieresMap<F> validate_map(const Polynomial<F>& f, const Polynomial<F>& g, const Budget& budget);

  RingPtr<K> ring_;
  Polynomial<K> f_;
  Polynomial<K> g_;
  int d_;
};

/// Errors: NotInBaseRing, NotHomogeneous, DegreeMismatch, NotMonoid,
/// MonoidMissingLastVariable, NotCoprime. Coprimality is decided by
/// comparing the colon ideal (f):(g) with (f).
template <class K>
DeJonquieresMap<K> validate_map(const Polynomial<K>& f, const Polynomial<K>& g, const Budget& budget = {});

template <class K>
struct MonoidDecomposition {
  Polynomial<K> p0;
  Polynomial<K> p1;
};

/// p = p0 + p1*x_{n+1} in a generalized ring. NotMonoid names the first term
/// with x_{n+1}-exponent at least two.
template <class K>
MonoidDecomposition<K> monoid_split(const Polynomial<K>& p);

/// entries[j] is the j-th entry (0-based); sum of x_{j+1}*entries[j] is p.
template <class K>
struct SyzygyColumn {
  std::vector<Polynomial<K>> entries;
};

/// Canonical column: each term goes to the smallest j <= n with x_j | term.
/// NotInIdeal when some term avoids x1..xn.
template <class K>
SyzygyColumn<K> partial_column(const Polynomial<K>& p);

/// Same, but the dividing index is drawn uniformly per term.
template <class K>
SyzygyColumn<K> partial_column(const Polynomial<K>& p, std::mt19937_64& rng);

/// The (n+1) x (C(n,2)+1) presentation of I: Koszul columns on x1..xn for
/// i < j (entry i is -x_j, entry j is x_i), then the column (dg; -f).
template <class K>
struct PresentationMatrix {
  int rows = 0;
  int cols = 0;
  /// Row-major.
  std::vector<Polynomial<K>> entries;

  const Polynomial<K>& at(int r, int c) const { return entries[static_cast<std::size_t>(r * cols + c)]; }
};

/// Builds the matrix and checks that the generator row annihilates it;
/// a nonzero product raises InternalInvariantViolation.
template <class K>
PresentationMatrix<K> presentation_matrix(const DeJonquieresMap<K>& map);

/// h = y1*(dg)_1 + ... + yn*(dg)_n - f*y_{n+1} for the given column of g.
template <class K>
Polynomial<K> syzygy_from_column(const DeJonquieresMap<K>& map, const SyzygyColumn<K>& dg);

/// syzygy_from_column with the canonical column of g.
template <class K>
Polynomial<K> initial_syzygy_h(const DeJonquieresMap<K>& map);

}  // namespace rees
