#include "rees/poly_io.hpp"

namespace rees {

std::string format_monomial(const Monomial& m, const RingSpec& spec) {
  std::string out;
  for (int v = 0; v < spec.nvars(); ++v) {
    if (m[v] == 0) continue;
    if (!out.empty()) out += '*';
    out += spec.var_name(v);
    if (m[v] > 1) out += '^' + std::to_string(m[v]);
  }
  return out.empty() ? "1" : out;
}

template <class K>
std::string format_poly(const Polynomial<K>& p) {
  if (p.is_zero()) return "0";
  const RingSpec& spec = p.ring().spec();
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    mpq_class c = p.field().display(t.coeff);
    bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      out += c.get_str();
    } else {
      if (c != 1) out += c.get_str() + '*';
      out += format_monomial(t.mono, spec);
    }
  }
  return out;
}

template std::string format_poly(const Polynomial<RationalField>&);
template std::string format_poly(const Polynomial<PrimeField>&);

}  // namespace rees
