#include "rees/jonq.hpp"

#include "rees/errors.hpp"
#include "rees/oracle/ideal.hpp"
#include "rees/poly_io.hpp"

namespace rees {

namespace {

template <class K>
void require_base_ring(const Polynomial<K>& p, const char* name) {
  const RingSpec& spec = p.ring().spec();
  for (const auto& t : p.terms()) {
    if (t.mono.degree_in_range(spec.x_count(), spec.nvars()) != 0) {
      throw Error(ErrorKind::NotInBaseRing, std::string(name) + " involves a y-variable: " + format_poly(p));
    }
  }
}

template <class K>
void require_monoid(const Polynomial<K>& p, const char* name) {
  const RingSpec& spec = p.ring().spec();
  const int last = spec.x(spec.n + 1);
  for (const auto& t : p.terms()) {
    if (t.mono[last] >= 2) {
      throw Error(ErrorKind::NotMonoid, std::string(name) + " has term " + format_monomial(t.mono, spec) + " of degree " +
                                            std::to_string(t.mono[last]) + " in " + spec.var_name(last));
    }
  }
}

}  // namespace

template <class K>
std::vector<Polynomial<K>> DeJonquieresMap<K>::ideal_generators() const {
  std::vector<Polynomial<K>> out;
  for (int i = 1; i <= n(); ++i) out.push_back(f_ * Polynomial<K>::variable(ring_, spec().x(i)));
  out.push_back(g_);
  return out;
}

template <class F>
DeJonquieresMap<F> validate_map(const Polynomial<F>& f, const Polynomial<F>& g, const Budget& budget) {
  f.check_same_ring(g);
  const RingSpec& spec = f.ring().spec();
  require_base_ring(f, "f");
  require_base_ring(g, "g");
  if (f.is_zero() || g.is_zero()) throw Error(ErrorKind::DegreeMismatch, "f and g must be nonzero");
  if (!f.is_homogeneous()) throw Error(ErrorKind::NotHomogeneous, "f is not homogeneous: " + format_poly(f));
  if (!g.is_homogeneous()) throw Error(ErrorKind::NotHomogeneous, "g is not homogeneous: " + format_poly(g));
  const int df = f.total_degree();
  const int d = g.total_degree();
  if (d != df + 1) {
    throw Error(ErrorKind::DegreeMismatch,
                "deg g = " + std::to_string(d) + " must be deg f + 1 = " + std::to_string(df + 1));
  }
  if (df < 1) throw Error(ErrorKind::DegreeMismatch, "deg f must be at least 1");
  if (spec.mode == Mode::Generalized) {
    require_monoid(f, "f");
    require_monoid(g, "g");
    const int last = spec.x(spec.n + 1);
    if (!f.involves(last) && !g.involves(last)) {
      throw Error(ErrorKind::MonoidMissingLastVariable, "neither f nor g involves " + spec.var_name(last));
    }
  }
  IdealHandle<F> principal_f("(f)", f.ring_ptr(), {f});
  IdealHandle<F> colon = colon_element(principal_f, g, budget);
  if (!ideal_equality(colon, principal_f, budget)) {
    throw Error(ErrorKind::NotCoprime, "f and g share a common factor");
  }
  return DeJonquieresMap<F>(f, g, d);
}

template <class K>
MonoidDecomposition<K> monoid_split(const Polynomial<K>& p) {
  const RingSpec& spec = p.ring().spec();
  if (spec.mode != Mode::Generalized) throw Error(ErrorKind::InvalidRing, "monoid_split needs a generalized ring");
  require_monoid(p, "polynomial");
  const int last = spec.x(spec.n + 1);
  std::vector<Term<K>> t0, t1;
  for (const auto& t : p.terms()) {
    if (t.mono[last] == 0) {
      t0.push_back(t);
    } else {
      Monomial m = t.mono;
      m.set(last, 0);
      t1.push_back({t.coeff, m});
    }
  }
  return {Polynomial<K>(p.ring_ptr(), std::move(t0)), Polynomial<K>(p.ring_ptr(), std::move(t1))};
}

namespace {

template <class K, class Choose>
SyzygyColumn<K> build_column(const Polynomial<K>& p, Choose choose) {
  const RingSpec& spec = p.ring().spec();
  std::vector<std::vector<Term<K>>> parts(static_cast<std::size_t>(spec.n));
  std::vector<int> dividing;
  for (const auto& t : p.terms()) {
    dividing.clear();
    for (int j = 1; j <= spec.n; ++j) {
      if (t.mono[spec.x(j)] > 0) dividing.push_back(j);
    }
    if (dividing.empty()) {
      throw Error(ErrorKind::NotInIdeal,
                  "term " + format_monomial(t.mono, spec) + " is not divisible by any of x1..x" + std::to_string(spec.n));
    }
    int j = choose(dividing);
    parts[static_cast<std::size_t>(j - 1)].push_back({t.coeff, t.mono / Monomial::variable(spec.x(j))});
  }
  SyzygyColumn<K> col;
  for (auto& part : parts) col.entries.emplace_back(p.ring_ptr(), std::move(part));
  return col;
}

}  // namespace

template <class K>
SyzygyColumn<K> partial_column(const Polynomial<K>& p) {
  return build_column(p, [](const std::vector<int>& js) { return js.front(); });
}

template <class K>
SyzygyColumn<K> partial_column(const Polynomial<K>& p, std::mt19937_64& rng) {
  return build_column(p, [&](const std::vector<int>& js) {
    std::uniform_int_distribution<std::size_t> pick(0, js.size() - 1);
    return js[pick(rng)];
  });
}

template <class K>
PresentationMatrix<K> presentation_matrix(const DeJonquieresMap<K>& map) {
  const RingPtr<K>& ring = map.ring_ptr();
  const RingSpec& spec = map.spec();
  const int n = spec.n;
  PresentationMatrix<K> phi;
  phi.rows = n + 1;
  phi.cols = n * (n - 1) / 2 + 1;
  phi.entries.assign(static_cast<std::size_t>(phi.rows * phi.cols), Polynomial<K>(ring));
  auto cell = [&](int r, int c) -> Polynomial<K>& { return phi.entries[static_cast<std::size_t>(r * phi.cols + c)]; };
  int c = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j, ++c) {
      cell(i - 1, c) = -Polynomial<K>::variable(ring, spec.x(j));
      cell(j - 1, c) = Polynomial<K>::variable(ring, spec.x(i));
    }
  }
  SyzygyColumn<K> dg = partial_column(map.g());
  for (int r = 0; r < n; ++r) cell(r, c) = dg.entries[static_cast<std::size_t>(r)];
  cell(n, c) = -map.f();

  const auto gens = map.ideal_generators();
  for (int col = 0; col < phi.cols; ++col) {
    Polynomial<K> sum(ring);
    for (int r = 0; r < phi.rows; ++r) sum += gens[static_cast<std::size_t>(r)] * phi.at(r, col);
    if (!sum.is_zero()) {
      throw Error(ErrorKind::InternalInvariantViolation,
                  "presentation column " + std::to_string(col + 1) + " is not a syzygy");
    }
  }
  return phi;
}

template <class K>
Polynomial<K> syzygy_from_column(const DeJonquieresMap<K>& map, const SyzygyColumn<K>& dg) {
  const RingPtr<K>& ring = map.ring_ptr();
  const RingSpec& spec = map.spec();
  Polynomial<K> h(ring);
  for (int j = 1; j <= spec.n; ++j) {
    h += Polynomial<K>::variable(ring, spec.y(j)) * dg.entries[static_cast<std::size_t>(j - 1)];
  }
  h -= map.f() * Polynomial<K>::variable(ring, spec.y(spec.n + 1));
  return h;
}

template <class K>
Polynomial<K> initial_syzygy_h(const DeJonquieresMap<K>& map) {
  return syzygy_from_column(map, partial_column(map.g()));
}

#define REES_INSTANTIATE(K)                                                                                   \
  template class DeJonquieresMap<K>;                                                                          \
  template DeJonquieresMap<K> validate_map(const Polynomial<K>&, const Polynomial<K>&, const Budget&);        \
  template MonoidDecomposition<K> monoid_split(const Polynomial<K>&);                                         \
  template SyzygyColumn<K> partial_column(const Polynomial<K>&);                                              \
  template SyzygyColumn<K> partial_column(const Polynomial<K>&, std::mt19937_64&);                            \
  template PresentationMatrix<K> presentation_matrix(const DeJonquieresMap<K>&);                              \
  template Polynomial<K> syzygy_from_column(const DeJonquieresMap<K>&, const SyzygyColumn<K>&);               \
  template Polynomial<K> initial_syzygy_h(const DeJonquieresMap<K>&);

REES_INSTANTIATE(RationalField)
REES_INSTANTIATE(PrimeField)

}  // namespace rees
