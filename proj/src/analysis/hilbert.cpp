#include "rees/analysis/hilbert.hpp"

#include <algorithm>
#include <sstream>

namespace rees {

namespace {

using Coeffs = std::vector<std::int64_t>;

void trim(Coeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

void add_shifted(Coeffs& into, const Coeffs& c, int shift, std::int64_t sign) {
  if (into.size() < c.size() + static_cast<std::size_t>(shift)) into.resize(c.size() + shift, 0);
  for (std::size_t k = 0; k < c.size(); ++k) into[k + shift] += sign * c[k];
}

Coeffs multiply(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& m : gens) {
    bool redundant = std::any_of(out.begin(), out.end(), [&](const Monomial& o) { return o.divides(m); });
    if (!redundant) out.push_back(m);
  }
  return out;
}

Coeffs numerator(std::vector<Monomial> gens) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  if (gens.front().is_one()) return {};

  // Pivot on a variable shared by two generators, if any.
  int pivot = -1;
  for (int v = 0; v < kMaxVars && pivot < 0; ++v) {
    int count = 0;
    for (const auto& m : gens) count += m[v] > 0;
    if (count >= 2) pivot = v;
  }
  if (pivot < 0) {
    Coeffs out{1};
    for (const auto& m : gens) {
      Coeffs factor(m.degree() + 1, 0);
      factor[0] = 1;
      factor[m.degree()] = -1;
      out = multiply(out, factor);
    }
    return out;
  }

  int e = 0;
  for (const auto& m : gens) {
    if (m[pivot] > 0 && (e == 0 || m[pivot] < e)) e = m[pivot];
  }
  const Monomial p = Monomial::variable(pivot, e);

  std::vector<Monomial> plus = gens;
  plus.push_back(p);
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& m : gens) colon.push_back(m / m.gcd(p));

  Coeffs out = numerator(std::move(plus));
  add_shifted(out, numerator(std::move(colon)), e, 1);
  trim(out);
  return out;
}

}  // namespace

std::int64_t HilbertNumerator::at_one() const {
  std::int64_t s = 0;
  for (auto c : coeffs) s += c;
  return s;
}

int HilbertNumerator::vanishing_order_at_one() const {
  if (coeffs.empty()) return -1;
  Coeffs c = coeffs;
  int order = 0;
  for (;;) {
    std::int64_t sum = 0;
    for (auto v : c) sum += v;
    if (sum != 0) return order;
    // Divide by (1 - z): q_k = sum of c_0..c_k, with a sign flip.
    Coeffs q(c.size() - 1, 0);
    std::int64_t run = 0;
    for (std::size_t k = 0; k + 1 < c.size(); ++k) {
      run += c[k];
      q[k] = run;
    }
    c = std::move(q);
    ++order;
  }
}

std::string HilbertNumerator::to_text() const {
  if (coeffs.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    std::int64_t c = coeffs[k];
    if (c == 0) continue;
    std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (k == 0) {
      out << mag;
    } else {
      if (mag != 1) out << mag << "*";
      out << "z";
      if (k > 1) out << "^" << k;
    }
    first = false;
  }
  return out.str();
}

HilbertNumerator hilbert_from_betti(const BettiTable& table) {
  Coeffs out;
  for (const auto& m : table.modules) {
    std::int64_t sign = m.index % 2 == 0 ? 1 : -1;
    for (const auto& s : m.summands) add_shifted(out, {s.multiplicity}, s.a + s.b, sign);
  }
  trim(out);
  return {out};
}

HilbertNumerator hilbert_of_monomial_ideal(std::vector<Monomial> gens) {
  return {numerator(std::move(gens))};
}

}  // namespace rees
