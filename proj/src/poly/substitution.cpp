
#include "rees/bigrading.hpp"
#include "rees/errors.hpp"

namespace rees {

std::string Bidegree::to_string() const {
  return "(" + std::to_string(xdeg) + "," + std::to_string(ydeg) + ")";
}

Bidegree bidegree_of(const Monomial& m, const RingSpec& spec) {
  return {m.degree_in_range(0, spec.x_count()), m.degree_in_range(spec.x_count(), spec.nvars())};
}

template <class K>
BidegreeResult bidegree_of(const Polynomial<K>& p) {
  if (p.is_zero()) return ZeroPolynomial{};
  const RingSpec& spec = p.ring().spec();
  Bidegree first = bidegree_of(p.leading_term().mono, spec);
  for (const auto& t : p.terms()) {
    if (bidegree_of(t.mono, spec) != first) return NotBihomogeneous{};
  }
  return first;
}

template <class K>
Substitution<K>::Substitution(RingPtr<K> ring, std::vector<Polynomial<K>> images)
    : ring_(std::move(ring)), images_(std::move(images)) {
  const RingSpec& spec = ring_->spec();
  if (static_cast<int>(images_.size()) != spec.y_count()) {
    throw Error(ErrorKind::InvalidArgument, "substitution needs one image per y-variable");
  }
  for (const auto& img : images_) {
    if (img.ring_ptr() != ring_ && !(img.ring().spec() == spec)) {
      throw Error(ErrorKind::MixedRings, "substitution image from another ring");
    }
    for (const auto& t : img.terms()) {
      if (t.mono.degree_in_range(spec.x_count(), spec.nvars()) != 0) {
        throw Error(ErrorKind::InvalidArgument, "substitution image outside the x-subring");
      }
    }
  }
}

template <class K>
Substitution<K>::Substitution(Unchecked, RingPtr<K> ring, std::vector<Polynomial<K>> images)
    : ring_(std::move(ring)), images_(std::move(images)) {}

template <class K>
Substitution<K> Substitution<K>::identity(RingPtr<K> ring) {
  std::vector<Polynomial<K>> images;
  for (int j = 1; j <= ring->spec().y_count(); ++j) {
    images.push_back(Polynomial<K>::variable(ring, ring->spec().y(j)));
  }
  return Substitution(Unchecked{}, std::move(ring), std::move(images));
}

template <class K>
Polynomial<K> substitute(const Polynomial<K>& p, const Substitution<K>& s) {
  const RingSpec& spec = p.ring().spec();
  const auto& ring = p.ring_ptr();
  // powers[j][e] = images[j]^e, filled lazily
  std::vector<std::vector<Polynomial<K>>> powers(spec.y_count());
  auto power = [&](int j, int e) -> const Polynomial<K>& {
    auto& row = powers[j];
    if (row.empty()) row.push_back(Polynomial<K>::constant(ring, p.field().one()));
    while (static_cast<int>(row.size()) <= e) row.push_back(row.back() * s.images()[j]);
    return row[e];
  };
  Polynomial<K> result(ring);
  for (const auto& t : p.terms()) {
    Monomial xpart;
    for (int v = 0; v < spec.x_count(); ++v) xpart.set(v, t.mono[v]);
    Polynomial<K> image = Polynomial<K>::monomial(ring, t.coeff, xpart);
    for (int j = 0; j < spec.y_count(); ++j) {
      int e = t.mono[spec.x_count() + j];
      if (e > 0) image = image * power(j, e);
    }
    result += image;
  }
  return result;
}

template class Substitution<RationalField>;
template class Substitution<PrimeField>;
template BidegreeResult bidegree_of(const Polynomial<RationalField>&);
template BidegreeResult bidegree_of(const Polynomial<PrimeField>&);
template Polynomial<RationalField> substitute(const Polynomial<RationalField>&, const Substitution<RationalField>&);
template Polynomial<PrimeField> substitute(const Polynomial<PrimeField>&, const Substitution<PrimeField>&);

}  // namespace rees
