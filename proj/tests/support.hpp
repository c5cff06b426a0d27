#pragma once

// Helpers shared by the unit tests: ring shortcuts, random generators and
// small reference implementations that do not go through the library's
// arithmetic or Groebner code.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "rees/poly_io.hpp"
#include "rees/polynomial.hpp"

namespace testing {

using rees::FieldSpec;
using rees::Mode;
using rees::Monomial;
using rees::Polynomial;
using rees::PrimeField;
using rees::RationalField;
using rees::RingPtr;
using rees::RingSpec;

inline constexpr std::uint32_t kP = 32003;

inline RingPtr<RationalField> q_ring(int n, Mode mode = Mode::Standard) {
  return rees::make_ring<RationalField>({mode, n, FieldSpec::rationals()});
}

inline RingPtr<PrimeField> fp_ring(int n, Mode mode = Mode::Standard, std::uint32_t p = kP) {
  return rees::make_ring<PrimeField>({mode, n, FieldSpec::prime(p)});
}

template <class K>
Polynomial<K> P(const RingPtr<K>& ring, const std::string& text) {
  return rees::parse_poly<K>(text, ring);
}

template <class K>
std::string S(const Polynomial<K>& p) {
  return rees::format_poly(p);
}

inline Monomial random_monomial(std::mt19937_64& rng, int nvars, int max_degree) {
  std::uniform_int_distribution<int> var(0, nvars - 1);
  std::uniform_int_distribution<int> deg(0, max_degree);
  Monomial m;
  for (int k = deg(rng); k > 0; --k) m = m * Monomial::variable(var(rng));
  return m;
}

/// Random polynomial with small integer coefficients (so it is meaningful
/// over both Q and F_p).
template <class K>
Polynomial<K> random_poly(const RingPtr<K>& ring, std::mt19937_64& rng, int max_terms = 5, int max_degree = 3) {
  std::uniform_int_distribution<int> count(0, max_terms);
  std::uniform_int_distribution<long> coeff(-9, 9);
  std::vector<rees::Term<K>> terms;
  for (int k = count(rng); k > 0; --k) {
    terms.push_back({ring->field().from_int(coeff(rng)), random_monomial(rng, ring->nvars(), max_degree)});
  }
  return Polynomial<K>(ring, std::move(terms));
}

/// Random bihomogeneous polynomial of bidegree (a, b).
template <class K>
Polynomial<K> random_bihomogeneous(const RingPtr<K>& ring, std::mt19937_64& rng, int a, int b, int terms = 3) {
  const RingSpec& spec = ring->spec();
  std::uniform_int_distribution<int> xv(0, spec.x_count() - 1);
  std::uniform_int_distribution<int> yv(spec.x_count(), spec.nvars() - 1);
  std::vector<rees::Term<K>> out;
  for (int k = 0; k < terms; ++k) {
    Monomial m;
    for (int i = 0; i < a; ++i) m = m * Monomial::variable(xv(rng));
    for (int i = 0; i < b; ++i) m = m * Monomial::variable(yv(rng));
    out.push_back({ring->field().random_nonzero(rng), m});
  }
  return Polynomial<K>(ring, std::move(out));
}

/// Evaluates p at a point by summing c * prod v_i^e_i term by term.
inline std::uint32_t evaluate(const Polynomial<PrimeField>& p, const std::vector<std::uint32_t>& point) {
  const PrimeField& k = p.field();
  std::uint32_t sum = 0;
  for (const auto& t : p.terms()) {
    std::uint32_t prod = t.coeff;
    for (int v = 0; v < static_cast<int>(point.size()); ++v) {
      for (int e = 0; e < t.mono[v]; ++e) prod = k.mul(prod, point[v]);
    }
    sum = k.add(sum, prod);
  }
  return sum;
}

inline std::vector<std::uint32_t> random_point(std::mt19937_64& rng, int nvars, std::uint32_t p = kP) {
  std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
  std::vector<std::uint32_t> pt(static_cast<std::size_t>(nvars));
  for (auto& v : pt) v = d(rng);
  return pt;
}

/// Leading term of q under `order`, found by a linear scan.
template <class K>
rees::Term<K> lead_term(const Polynomial<K>& q, const rees::TermOrder& order) {
  const rees::Term<K>* best = &q.terms().front();
  for (const auto& t : q.terms()) {
    if (order.greater(t.mono, best->mono)) best = &t;
  }
  return *best;
}

/// Textbook multivariate division of p by `divisors` under `order`, using
/// only Polynomial arithmetic. Returns the remainder.
template <class K>
Polynomial<K> naive_remainder(Polynomial<K> p, const std::vector<Polynomial<K>>& divisors, const rees::TermOrder& order) {
  const K& k = p.field();
  Polynomial<K> rem(p.ring_ptr());
  while (!p.is_zero()) {
    rees::Term<K> lt = lead_term(p, order);
    bool divided = false;
    for (const auto& g : divisors) {
      if (g.is_zero()) continue;
      rees::Term<K> lg = lead_term(g, order);
      if (lg.mono.divides(lt.mono)) {
        p -= g.times(k.div(lt.coeff, lg.coeff), lt.mono / lg.mono);
        divided = true;
        break;
      }
    }
    if (!divided) {
      Polynomial<K> single = Polynomial<K>::monomial(p.ring_ptr(), lt.coeff, lt.mono);
      rem += single;
      p -= single;
    }
  }
  return rem;
}

/// S-polynomial built from Polynomial arithmetic alone.
template <class K>
Polynomial<K> naive_spoly(const Polynomial<K>& f, const Polynomial<K>& g, const rees::TermOrder& order) {
  auto lf = lead_term(f, order), lg = lead_term(g, order);
  Monomial l = lf.mono.lcm(lg.mono);
  const K& k = f.field();
  return f.times(k.inv(lf.coeff), l / lf.mono) - g.times(k.inv(lg.coeff), l / lg.mono);
}

/// Buchberger's criterion checked from scratch: every S-polynomial of the
/// basis has remainder zero.
template <class K>
bool naive_is_groebner(const std::vector<Polynomial<K>>& basis, const rees::TermOrder& order) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!naive_remainder(naive_spoly(basis[i], basis[j], order), basis, order).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace testing
