#pragma once

// Buchberger machinery on raw term lists. Shared by the public Groebner
// basis API and by the ideal operations that work in an auxiliary ring.

#include <algorithm>
#include <string>
#include <vector>

#include "rees/errors.hpp"
#include "rees/oracle/groebner.hpp"

namespace rees::detail {

template <class K>
class Engine {
 public:
  using Elem = typename K::Elem;
  using TermList = std::vector<Term<K>>;

  Engine(const K& field, const TermOrder& order, const Budget& budget)
      : field_(field), order_(order), budget_(budget) {}

  const TermOrder& order() const { return order_; }
  const GroebnerStats& stats() const { return stats_; }

  void sort_terms(TermList& p) const {
    std::sort(p.begin(), p.end(), [&](const Term<K>& a, const Term<K>& b) { return order_.greater(a.mono, b.mono); });
  }

  TermList from_polynomial(const Polynomial<K>& p) const {
    TermList t = p.terms();
    if (order_.kind() != TermOrder::Kind::Grevlex) sort_terms(t);
    return t;
  }

  void make_monic(TermList& p) const {
    if (p.empty() || field_.is_one(p.front().coeff)) return;
    Elem inv = field_.inv(p.front().coeff);
    for (auto& t : p) t.coeff = field_.mul(t.coeff, inv);
  }

  /// p[p_begin..] - c*m*g[g_begin..]
  TermList sub_multiple(const TermList& p, std::size_t p_begin, const Elem& c, const Monomial& m, const TermList& g,
                        std::size_t g_begin) {
    TermList out;
    out.reserve(p.size() - p_begin + g.size() - g_begin);
    charge(p.size() - p_begin + g.size() - g_begin);
    std::size_t i = p_begin, j = g_begin;
    while (i < p.size() && j < g.size()) {
      Monomial gm = g[j].mono * m;
      int cmp = order_.compare(p[i].mono, gm);
      if (cmp > 0) {
        out.push_back(p[i++]);
      } else if (cmp < 0) {
        out.push_back({field_.neg(field_.mul(c, g[j].coeff)), gm});
        ++j;
      } else {
        Elem s = field_.sub(p[i].coeff, field_.mul(c, g[j].coeff));
        if (!field_.is_zero(s)) out.push_back({std::move(s), p[i].mono});
        ++i;
        ++j;
      }
    }
    for (; i < p.size(); ++i) out.push_back(p[i]);
    for (; j < g.size(); ++j) out.push_back({field_.neg(field_.mul(c, g[j].coeff)), g[j].mono * m});
    return out;
  }

  /// Reducers are addressed by pointer; leads are their first terms.
  struct Reducers {
    std::vector<const TermList*> polys;
    std::vector<std::uint32_t> masks;

    void add(const TermList* p) {
      polys.push_back(p);
      masks.push_back(p->front().mono.support_mask());
    }
    int find(const Monomial& t) const {
      std::uint32_t tm = t.support_mask();
      for (std::size_t k = 0; k < polys.size(); ++k) {
        if ((masks[k] & ~tm) != 0) continue;
        if (polys[k]->front().mono.divides(t)) return static_cast<int>(k);
      }
      return -1;
    }
  };

  /// Full reduction: no term of the result is divisible by a reducer lead.
  TermList reduce(TermList work, const Reducers& reducers) {
    TermList rem;
    std::size_t pos = 0;
    while (pos < work.size()) {
      int r = reducers.find(work[pos].mono);
      if (r < 0) {
        rem.push_back(std::move(work[pos]));
        ++pos;
        continue;
      }
      const TermList& g = *reducers.polys[r];
      Elem c = field_.div(work[pos].coeff, g.front().coeff);
      Monomial m = work[pos].mono / g.front().mono;
      work = sub_multiple(work, pos + 1, c, m, g, 1);
      pos = 0;
    }
    return rem;
  }

  TermList spoly(const TermList& f, const TermList& g) {
    Monomial l = f.front().mono.lcm(g.front().mono);
    Monomial mf = l / f.front().mono;
    Monomial mg = l / g.front().mono;
    // f and g are monic: mf*f - mg*g, leading terms cancel.
    TermList scaled_f;
    scaled_f.reserve(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) scaled_f.push_back({f[i].coeff, f[i].mono * mf});
    return sub_multiple(scaled_f, 0, field_.one(), mg, g, 1);
  }

  std::vector<TermList> groebner(std::vector<TermList> input);

 private:
  struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
  };

  void charge(std::uint64_t ops) {
    stats_.monomial_ops += ops;
    if (stats_.monomial_ops > budget_.max_monomial_ops) {
      throw Error(ErrorKind::ResourceLimit,
                  "Groebner basis exceeded " + std::to_string(budget_.max_monomial_ops) + " monomial operations");
    }
  }

  // true when a is processed before b
  bool earlier(const Pair& a, const Pair& b) const {
    int c = order_.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  }

  void update(std::size_t h);

  const K& field_;
  TermOrder order_;
  Budget budget_;
  GroebnerStats stats_;

  std::vector<TermList> polys_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;  // sorted so that the next pair is at the back
};

template <class K>
void Engine<K>::update(std::size_t h) {
  const Monomial& lh = polys_[h].front().mono;
  const std::size_t nc = active_.size();
  std::vector<Monomial> lcms(nc);
  std::vector<char> coprime(nc), keep(nc, 0);
  for (std::size_t a = 0; a < nc; ++a) {
    const Monomial& lg = polys_[active_[a]].front().mono;
    lcms[a] = lh.lcm(lg);
    coprime[a] = lh.coprime(lg);
  }
  for (std::size_t a = 0; a < nc; ++a) {
    if (coprime[a]) {
      keep[a] = 1;
      continue;
    }
    bool k = true;
    for (std::size_t b = a + 1; b < nc && k; ++b) {
      if (lcms[b].divides(lcms[a])) k = false;
    }
    for (std::size_t b = 0; b < a && k; ++b) {
      if (keep[b] && lcms[b].divides(lcms[a])) k = false;
    }
    keep[a] = k;
  }

  std::vector<Pair> fresh;
  for (std::size_t a = 0; a < nc; ++a) {
    if (keep[a] && !coprime[a]) {
      fresh.push_back({active_[a], h, lcms[a]});
    } else {
      ++stats_.pairs_skipped;
    }
  }

  std::vector<Pair> kept;
  kept.reserve(pairs_.size() + fresh.size());
  for (auto& p : pairs_) {
    bool drop = lh.divides(p.lcm) && polys_[p.i].front().mono.lcm(lh) != p.lcm &&
                polys_[p.j].front().mono.lcm(lh) != p.lcm;
    if (drop) {
      ++stats_.pairs_skipped;
    } else {
      kept.push_back(std::move(p));
    }
  }
  auto later = [&](const Pair& a, const Pair& b) { return earlier(b, a); };
  std::sort(fresh.begin(), fresh.end(), later);
  pairs_.clear();
  std::merge(kept.begin(), kept.end(), fresh.begin(), fresh.end(), std::back_inserter(pairs_), later);

  std::vector<std::size_t> still_active;
  still_active.reserve(active_.size() + 1);
  for (std::size_t g : active_) {
    if (!lh.divides(polys_[g].front().mono)) still_active.push_back(g);
  }
  still_active.push_back(h);
  active_ = std::move(still_active);
}

template <class K>
std::vector<typename Engine<K>::TermList> Engine<K>::groebner(std::vector<TermList> input) {
  polys_.clear();
  active_.clear();
  pairs_.clear();

  std::vector<TermList> gens;
  for (auto& g : input) {
    if (g.empty()) continue;
    make_monic(g);
    if (g.front().mono.is_one()) return {TermList{{field_.one(), Monomial{}}}};
    gens.push_back(std::move(g));
  }
  std::stable_sort(gens.begin(), gens.end(),
                   [&](const TermList& a, const TermList& b) { return order_.compare(a.front().mono, b.front().mono) < 0; });
  // polys_ must not reallocate while reducers hold pointers into it.
  polys_.reserve(gens.size() + 1024);
  for (auto& g : gens) {
    polys_.push_back(std::move(g));
    update(polys_.size() - 1);
  }

  while (!pairs_.empty()) {
    Pair pair = pairs_.back();
    pairs_.pop_back();
    if (++stats_.pairs_reduced > budget_.max_pairs) {
      throw Error(ErrorKind::ResourceLimit,
                  "Groebner basis exceeded " + std::to_string(budget_.max_pairs) + " pair reductions");
    }
    Reducers reducers;
    for (std::size_t a : active_) reducers.add(&polys_[a]);
    TermList r = reduce(spoly(polys_[pair.i], polys_[pair.j]), reducers);
    if (r.empty()) continue;
    make_monic(r);
    if (r.front().mono.is_one()) return {TermList{{field_.one(), Monomial{}}}};
    if (polys_.size() == polys_.capacity()) {
      // Reducers are rebuilt per pair, so growing here is safe.
      polys_.reserve(polys_.capacity() * 2);
    }
    polys_.push_back(std::move(r));
    update(polys_.size() - 1);
  }

  // Minimalize, then interreduce.
  std::vector<std::size_t> order_idx = active_;
  std::stable_sort(order_idx.begin(), order_idx.end(), [&](std::size_t a, std::size_t b) {
    return order_.compare(polys_[a].front().mono, polys_[b].front().mono) < 0;
  });
  std::vector<std::size_t> minimal;
  for (std::size_t a : order_idx) {
    bool redundant = false;
    for (std::size_t b : minimal) {
      if (polys_[b].front().mono.divides(polys_[a].front().mono)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(a);
  }
  std::vector<TermList> result;
  result.reserve(minimal.size());
  for (std::size_t a : minimal) {
    Reducers others;
    for (std::size_t b : minimal) {
      if (b != a) others.add(&polys_[b]);
    }
    TermList r = reduce(polys_[a], others);
    make_monic(r);
    result.push_back(std::move(r));
  }
  std::sort(result.begin(), result.end(),
            [&](const TermList& a, const TermList& b) { return order_.greater(a.front().mono, b.front().mono); });
  return result;
}

}  // namespace rees::detail
