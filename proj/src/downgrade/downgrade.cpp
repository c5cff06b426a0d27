#include "rees/downgrade.hpp"

#include "rees/errors.hpp"

namespace rees {

namespace {

template <class K>
Polynomial<K> row_product(const Polynomial<K>& h, const SyzygyColumn<K>& col) {
  const RingPtr<K>& ring = h.ring_ptr();
  const RingSpec& spec = ring->spec();
  Polynomial<K> out(ring);
  for (int j = 1; j <= spec.n; ++j) {
    out += Polynomial<K>::variable(ring, spec.y(j)) * col.entries[static_cast<std::size_t>(j - 1)];
  }
  return out;
}

template <class K>
SyzygyColumn<K> step_column(const Polynomial<K>& h, std::mt19937_64* rng) {
  try {
    return rng ? partial_column(h, *rng) : partial_column(h);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotInIdeal) throw Error(ErrorKind::NotDowngradable, e.what());
    throw;
  }
}

template <class K>
DowngradedSequence<K> build_sequence(const DeJonquieresMap<K>& map, std::mt19937_64* rng) {
  DowngradedSequence<K> seq;
  SyzygyColumn<K> dg = rng ? partial_column(map.g(), *rng) : partial_column(map.g());
  seq.polys.push_back(syzygy_from_column(map, dg));
  for (int i = 2; i <= map.sequence_length(); ++i) {
    seq.polys.push_back(row_product(seq.polys.back(), step_column(seq.polys.back(), rng)));
  }
  for (int i = 1; i <= seq.length(); ++i) {
    if (seq.h(i).is_zero()) {
      throw Error(ErrorKind::InternalInvariantViolation, "h" + std::to_string(i) + " vanished");
    }
  }
  return seq;
}

}  // namespace

template <class K>
Polynomial<K> downgrade_step(const Polynomial<K>& h) {
  return row_product(h, step_column<K>(h, nullptr));
}

template <class K>
Polynomial<K> downgrade_step(const Polynomial<K>& h, std::mt19937_64& rng) {
  return row_product(h, step_column<K>(h, &rng));
}

template <class K>
DowngradedSequence<K> downgraded_sequence(const DeJonquieresMap<K>& map) {
  return build_sequence<K>(map, nullptr);
}

template <class K>
DowngradedSequence<K> downgraded_sequence(const DeJonquieresMap<K>& map, std::mt19937_64& rng) {
  return build_sequence<K>(map, &rng);
}

template <class K>
GeneratorSet<K> minors_generators(const RingPtr<K>& ring) {
  const RingSpec& spec = ring->spec();
  GeneratorSet<K> set;
  set.label = GeneratorLabel::Minors;
  set.ring = ring;
  auto var = [&](int v) { return Polynomial<K>::variable(ring, v); };
  for (int i = 1; i <= spec.n; ++i) {
    for (int j = i + 1; j <= spec.n; ++j) {
      set.gens.push_back(var(spec.x(i)) * var(spec.y(j)) - var(spec.x(j)) * var(spec.y(i)));
    }
  }
  return set;
}

template <class K>
GeneratorSet<K> symmetric_ideal(const DeJonquieresMap<K>& map) {
  GeneratorSet<K> set = minors_generators(map.ring_ptr());
  set.label = GeneratorLabel::SymmetricL;
  set.gens.push_back(initial_syzygy_h(map));
  return set;
}

template <class K>
GeneratorSet<K> j_ideal(const DowngradedSequence<K>& seq, int i) {
  if (i < 1 || i > seq.length()) {
    throw Error(ErrorKind::InvalidArgument,
                "J" + std::to_string(i) + " needs 1 <= i <= " + std::to_string(seq.length()));
  }
  GeneratorSet<K> set = minors_generators(seq.polys.front().ring_ptr());
  set.label = GeneratorLabel::PartialJ;
  set.index = i;
  for (int k = 1; k <= i; ++k) set.gens.push_back(seq.h(k));
  return set;
}

template <class K>
GeneratorSet<K> rees_ideal(const DowngradedSequence<K>& seq) {
  GeneratorSet<K> set = j_ideal(seq, seq.length());
  set.label = GeneratorLabel::ReesJ;
  set.index = 0;
  return set;
}

template <class K>
GeneratorSet<K> rees_ideal(const DeJonquieresMap<K>& map) {
  return rees_ideal(downgraded_sequence(map));
}

template <class K>
std::optional<Polynomial<K>> implicit_equation(const DeJonquieresMap<K>& map) {
  if (map.mode() == Mode::Generalized) return std::nullopt;
  return downgraded_sequence(map).polys.back();
}

template <class K>
GeneratorSet<K> k_ideal(const RingPtr<K>& ring) {
  const RingSpec& spec = ring->spec();
  GeneratorSet<K> set = minors_generators(ring);
  set.label = GeneratorLabel::K;
  set.gens.push_back(Polynomial<K>::variable(ring, spec.x(spec.n)));
  set.gens.push_back(Polynomial<K>::variable(ring, spec.y(spec.n)));
  return set;
}

template <class K>
GeneratorSet<K> maximal_ideal(const RingPtr<K>& ring) {
  const RingSpec& spec = ring->spec();
  std::vector<Polynomial<K>> gens;
  for (int i = 1; i <= spec.n; ++i) gens.push_back(Polynomial<K>::variable(ring, spec.x(i)));
  return GeneratorSet<K>::custom("m", ring, std::move(gens));
}

#define REES_INSTANTIATE(K)                                                                     \
  template Polynomial<K> downgrade_step(const Polynomial<K>&);                                  \
  template Polynomial<K> downgrade_step(const Polynomial<K>&, std::mt19937_64&);                \
  template DowngradedSequence<K> downgraded_sequence(const DeJonquieresMap<K>&);                \
  template DowngradedSequence<K> downgraded_sequence(const DeJonquieresMap<K>&, std::mt19937_64&); \
  template GeneratorSet<K> minors_generators(const RingPtr<K>&);                                \
  template GeneratorSet<K> symmetric_ideal(const DeJonquieresMap<K>&);                          \
  template GeneratorSet<K> j_ideal(const DowngradedSequence<K>&, int);                          \
  template GeneratorSet<K> rees_ideal(const DowngradedSequence<K>&);                            \
  template GeneratorSet<K> rees_ideal(const DeJonquieresMap<K>&);                               \
  template std::optional<Polynomial<K>> implicit_equation(const DeJonquieresMap<K>&);           \
  template GeneratorSet<K> k_ideal(const RingPtr<K>&);                                          \
  template GeneratorSet<K> maximal_ideal(const RingPtr<K>&);

REES_INSTANTIATE(RationalField)
REES_INSTANTIATE(PrimeField)

}  // namespace rees
