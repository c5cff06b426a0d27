#include "rees/oracle/implicitize.hpp"

#include "rees/errors.hpp"
#include "rees/oracle/ideal.hpp"

namespace rees {

template <class K>
Polynomial<K> implicitize_elimination(const DeJonquieresMap<K>& map, const Budget& budget) {
  if (map.mode() != Mode::Standard) {
    throw Error(ErrorKind::InvalidArgument, "elimination implicitization needs a standard map");
  }
  const RingPtr<K>& ring = map.ring_ptr();
  const RingSpec& spec = map.spec();
  const auto images = map.ideal_generators();
  std::vector<Polynomial<K>> graph;
  for (int j = 1; j <= spec.n + 1; ++j) {
    graph.push_back(Polynomial<K>::variable(ring, spec.y(j)) - images[static_cast<std::size_t>(j - 1)]);
  }
  IdealHandle<K> contracted = eliminate_x(IdealHandle<K>("graph", ring, std::move(graph)), budget);
  if (contracted.gens().size() != 1) {
    throw Error(ErrorKind::NotPrincipal,
                "elimination produced " + std::to_string(contracted.gens().size()) + " generators");
  }
  return contracted.gens().front().monic();
}

template Polynomial<RationalField> implicitize_elimination(const DeJonquieresMap<RationalField>&, const Budget&);
template Polynomial<PrimeField> implicitize_elimination(const DeJonquieresMap<PrimeField>&, const Budget&);

}  // namespace rees
