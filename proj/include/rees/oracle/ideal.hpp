#pragma once

#include <map>
#include <memory>
#include <mutex>

#include "rees/generator_set.hpp"
#include "rees/oracle/groebner.hpp"

namespace rees {

/// Generators plus lazily computed Groebner bases, one per term order.
/// Copies share the cache. The cache is filled under a lock and read-only
/// afterwards, so concurrent readers are safe.
template <class K>
class IdealHandle {
 public:
  explicit IdealHandle(GeneratorSet<K> gens);
  IdealHandle(std::string name, RingPtr<K> ring, std::vector<Polynomial<K>> gens);

  static IdealHandle unit(RingPtr<K> ring);
  static IdealHandle zero(RingPtr<K> ring);

  const GeneratorSet<K>& generators() const { return gens_; }
  const std::vector<Polynomial<K>>& gens() const { return gens_.gens; }
  const RingPtr<K>& ring_ptr() const { return gens_.ring; }
  std::string name() const { return gens_.name(); }

  const GroebnerBasis<K>& basis(const TermOrder& order, const Budget& budget = {}) const;
  const GroebnerBasis<K>& grevlex_basis(const Budget& budget = {}) const { return basis(TermOrder::grevlex(), budget); }

  bool contains(const Polynomial<K>& p, const Budget& budget = {}) const;
  bool is_unit(const Budget& budget = {}) const { return grevlex_basis(budget).is_unit(); }
  bool is_zero() const;

  /// Installs a basis already known to be the reduced basis for its order.
  void adopt_basis(GroebnerBasis<K> gb) const;

 private:
  struct Cache {
    std::mutex mu;
    std::map<TermOrder, std::unique_ptr<GroebnerBasis<K>>> bases;
  };

  GeneratorSet<K> gens_;
  std::shared_ptr<Cache> cache_;
};

/// Every generator of a lies in b.
template <class K>
bool is_subset(const IdealHandle<K>& a, const IdealHandle<K>& b, const Budget& budget = {});

/// Each generator of a reduces to zero modulo b and conversely.
template <class K>
bool ideal_equality(const IdealHandle<K>& a, const IdealHandle<K>& b, const Budget& budget = {});

/// a ∩ b = (w·a + (1-w)·b) ∩ k[x,y], eliminating an auxiliary w.
template <class K>
IdealHandle<K> intersect(const IdealHandle<K>& a, const IdealHandle<K>& b, const Budget& budget = {});

/// (a : g) = (a ∩ (g)) / g.
template <class K>
IdealHandle<K> colon_element(const IdealHandle<K>& a, const Polynomial<K>& g, const Budget& budget = {});

/// (a : b) = ∩ over generators g of b of (a : g).
template <class K>
IdealHandle<K> colon_ideal(const IdealHandle<K>& a, const IdealHandle<K>& b, const Budget& budget = {});

template <class K>
struct SaturationResult {
  IdealHandle<K> ideal;
  /// Smallest k with a : b^k = a : b^(k+1).
  int steps = 0;
};

/// Iterates colon_ideal until two consecutive ideals agree.
template <class K>
SaturationResult<K> saturate(const IdealHandle<K>& a, const IdealHandle<K>& b, const Budget& budget = {},
                             int max_steps = 64);

/// a ∩ k[y], read off a basis for the order with the x-block first.
template <class K>
IdealHandle<K> eliminate_x(const IdealHandle<K>& a, const Budget& budget = {});

/// Krull dimension of B/a: the largest set of variables containing the
/// support of no leading monomial of the reduced grevlex basis. Throws
/// ImproperIdeal for the unit ideal.
template <class K>
int krull_dimension(const IdealHandle<K>& a, const Budget& budget = {});

/// Largest variable subset avoiding every monomial's support.
int max_independent_set(const std::vector<Monomial>& leads, int nvars);

}  // namespace rees
