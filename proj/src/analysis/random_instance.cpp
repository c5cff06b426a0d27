#include "rees/analysis/random_instance.hpp"

#include <algorithm>

#include "rees/errors.hpp"

namespace rees {

namespace {

/// All exponent vectors of total degree `deg` on the x-block, honoring the
/// monoid cap on x_{n+1} for generalized rings.
void enumerate(const RingSpec& spec, int var, int remaining, Monomial current, std::vector<Monomial>& out) {
  const int last = spec.x_count() - 1;
  if (var == last) {
    if (spec.mode == Mode::Generalized && remaining > 1) return;
    current.set(var, remaining);
    out.push_back(current);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    current.set(var, e);
    enumerate(spec, var + 1, remaining - e, current, out);
  }
}

template <class K>
Polynomial<K> random_form(const RingPtr<K>& ring, const std::vector<Monomial>& pool, std::mt19937_64& rng) {
  const std::size_t cap = std::min<std::size_t>(6, pool.size());
  const std::size_t low = std::min<std::size_t>(3, cap);
  std::uniform_int_distribution<std::size_t> count(low, cap);
  std::vector<Monomial> chosen;
  std::sample(pool.begin(), pool.end(), std::back_inserter(chosen), count(rng), rng);
  std::vector<Term<K>> terms;
  for (const auto& m : chosen) terms.push_back({ring->field().random_nonzero(rng), m});
  return Polynomial<K>(ring, std::move(terms));
}

}  // namespace

template <class K>
DeJonquieresMap<K> random_instance(const RingPtr<K>& ring, int d, std::mt19937_64& rng, const Budget& budget) {
  const RingSpec& spec = ring->spec();
  if (d < 2) throw Error(ErrorKind::DegreeMismatch, "random instances need d >= 2");
  std::vector<Monomial> pool_f, pool_g;
  enumerate(spec, 0, d - 1, Monomial{}, pool_f);
  enumerate(spec, 0, d, Monomial{}, pool_g);
  constexpr int kAttempts = 1000;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    Polynomial<K> f = random_form(ring, pool_f, rng);
    Polynomial<K> g = random_form(ring, pool_g, rng);
    try {
      return validate_map(f, g, budget);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::ResourceLimit) throw;
    }
  }
  throw Error(ErrorKind::ResourceLimit, "no valid random instance after " + std::to_string(kAttempts) + " draws");
}

template DeJonquieresMap<RationalField> random_instance(const RingPtr<RationalField>&, int, std::mt19937_64&,
                                                        const Budget&);
template DeJonquieresMap<PrimeField> random_instance(const RingPtr<PrimeField>&, int, std::mt19937_64&,
                                                     const Budget&);

}  // namespace rees
