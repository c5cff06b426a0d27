#include "rees/analysis/verify.hpp"

#include <chrono>
#include <functional>
#include <optional>
#include <sstream>

#include "json.hpp"

#include "rees/bigrading.hpp"
#include "rees/downgrade.hpp"
#include "rees/errors.hpp"
#include "rees/oracle/ideal.hpp"
#include "rees/oracle/implicitize.hpp"
#include "rees/poly_io.hpp"

namespace rees {

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::ResourceLimit: return "resource-limit";
    case CheckStatus::Observed: return "observed";
    case CheckStatus::Skipped: return "skipped";
  }
  return "unknown";
}

bool VerifyReport::any_failed() const {
  for (const auto& c : checks) {
    if (c.status == CheckStatus::Fail) return true;
  }
  return false;
}

bool VerifyReport::any_resource_limit() const {
  for (const auto& c : checks) {
    if (c.status == CheckStatus::ResourceLimit) return true;
  }
  return false;
}

const CheckResult* VerifyReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

std::string verdict(const VerifyReport& r) {
  if (r.any_failed()) return "fail";
  if (r.any_resource_limit()) return "resource-limit";
  return "pass";
}

}  // namespace

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  out << "mode=" << mode << " n=" << n << " d=" << d << " field=" << field << " seed=" << seed << "\n";
  out << "f = " << f << "\n";
  out << "g = " << g << "\n";
  for (const auto& c : checks) {
    out << "check " << c.name << ": " << to_string(c.status);
    if (!c.witness.empty()) out << " (" << c.witness << ")";
    if (timing) out << " [" << c.seconds << "s]";
    out << "\n";
  }
  out << "verdict: " << verdict(*this) << "\n";
  return out.str();
}

std::string VerifyReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["instance"] = {{"mode", mode}, {"n", n}, {"d", d}, {"field", field}, {"f", f}, {"g", g}};
  doc["seed"] = seed;
  doc["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json entry = {{"name", c.name}, {"status", to_string(c.status)}, {"witness", c.witness}};
    entry["timing"] = timing ? nlohmann::ordered_json(c.seconds) : nlohmann::ordered_json(nullptr);
    doc["checks"].push_back(std::move(entry));
  }
  doc["verdict"] = verdict(*this);
  return doc.dump(2) + "\n";
}

namespace {

struct Outcome {
  CheckStatus status;
  std::string witness;
};

Outcome pass(std::string witness = {}) { return {CheckStatus::Pass, std::move(witness)}; }
Outcome fail(std::string witness) { return {CheckStatus::Fail, std::move(witness)}; }

template <class K>
class Suite {
 public:
  Suite(const DeJonquieresMap<K>& map, const VerifyOptions& options)
      : map_(map),
        opt_(options),
        ring_(map.ring_ptr()),
        spec_(map.spec()),
        seq_(downgraded_sequence(map)),
        minors_(minors_generators(ring_)),
        l_(symmetric_ideal(map)),
        m_(maximal_ideal(ring_)) {
    if (opt_.corrupt) corrupt();
    j_.emplace(rees_ideal(seq_));
  }

  VerifyReport run() {
    VerifyReport report;
    report.mode = to_string(spec_.mode);
    report.n = spec_.n;
    report.d = map_.d();
    report.field = spec_.field.to_string();
    report.f = format_poly(map_.f());
    report.g = format_poly(map_.g());
    report.seed = opt_.seed;
    report.timing = opt_.timing;
    add(report, "kernel", [&] { return kernel(); });
    add(report, "bidegree_ladder", [&] { return bidegree_ladder(); });
    add(report, "exchange", [&] { return exchange(); });
    add(report, "well_defined", [&] { return well_defined(); });
    add(report, "saturation", [&] { return saturation(); });
    add(report, "elimination", [&] { return elimination(); });
    add(report, "dimension", [&] { return dimension(); });
    add(report, "linkage", [&] { return linkage(); });
    return report;
  }

 private:
  void corrupt() {
    const int target = seq_.length() >= 2 ? 2 : 1;
    auto terms = seq_.h(target).terms();
    terms.pop_back();
    seq_.polys[static_cast<std::size_t>(target - 1)] = Polynomial<K>(ring_, std::move(terms));
  }

  void add(VerifyReport& report, std::string name, const std::function<Outcome()>& check) {
    CheckResult result;
    result.name = std::move(name);
    auto start = std::chrono::steady_clock::now();
    try {
      Outcome o = check();
      result.status = o.status;
      result.witness = std::move(o.witness);
    } catch (const Error& e) {
      result.status = e.kind() == ErrorKind::ResourceLimit ? CheckStatus::ResourceLimit : CheckStatus::Fail;
      result.witness = std::string(to_string(e.kind())) + ": " + e.what();
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.checks.push_back(std::move(result));
  }

  Polynomial<K> var(int v) const { return Polynomial<K>::variable(ring_, v); }

  std::string label(std::size_t index) const {
    const std::size_t minors = minors_.gens().size();
    if (index < minors) return "minor " + format_poly(minors_.gens()[index]);
    return "h" + std::to_string(index - minors + 1);
  }

  Outcome kernel() {
    Substitution<K> images(ring_, map_.ideal_generators());
    const auto& gens = j_->gens();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (!substitute(gens[k], images).is_zero()) return fail(label(k) + " does not vanish");
    }
    return pass();
  }

  Outcome bidegree_ladder() {
    for (int i = 1; i <= seq_.length(); ++i) {
      Bidegree want{map_.d() - i, i};
      BidegreeResult got = bidegree_of(seq_.h(i));
      const Bidegree* b = std::get_if<Bidegree>(&got);
      if (!b) return fail("h" + std::to_string(i) + " is not bihomogeneous");
      if (*b != want) {
        return fail("h" + std::to_string(i) + " has bidegree " + b->to_string() + ", expected " + want.to_string());
      }
    }
    return pass();
  }

  Outcome exchange() {
    const int n = spec_.n;
    for (int i = 2; i <= seq_.length(); ++i) {
      const std::string hi = "h" + std::to_string(i), hp = "h" + std::to_string(i - 1);
      for (int j = 1; j <= n; ++j) {
        Polynomial<K> rel = var(spec_.x(j)) * seq_.h(i) - var(spec_.y(j)) * seq_.h(i - 1);
        if (!minors_.contains(rel, opt_.budget)) {
          return fail("x" + std::to_string(j) + "*" + hi + " - y" + std::to_string(j) + "*" + hp + " not in I2");
        }
      }
      Polynomial<K> rel = seq_.h(i - 1) * var(spec_.y(n)) - var(spec_.x(n)) * seq_.h(i);
      if (!minors_.contains(rel, opt_.budget)) {
        return fail(hp + "*y" + std::to_string(n) + " - x" + std::to_string(n) + "*" + hi + " not in I2");
      }
    }
    return pass();
  }

  Outcome well_defined() {
    std::mt19937_64 rng(opt_.seed);
    std::vector<IdealHandle<K>> canonical;
    for (int i = 1; i <= seq_.length(); ++i) canonical.emplace_back(j_ideal(seq_, i));
    for (int t = 1; t <= opt_.trials; ++t) {
      DowngradedSequence<K> other = downgraded_sequence(map_, rng);
      for (int i = 1; i <= seq_.length(); ++i) {
        IdealHandle<K> alt(j_ideal(other, i));
        if (!ideal_equality(canonical[static_cast<std::size_t>(i - 1)], alt, opt_.budget)) {
          return fail("trial " + std::to_string(t) + ": J" + std::to_string(i) + " differs");
        }
      }
    }
    return pass(std::to_string(opt_.trials) + " trials");
  }

  Outcome saturation() {
    const int bound = spec_.mode == Mode::Standard ? map_.d() - 1 : map_.d() - 2;
    auto sat = saturate(l_, m_, opt_.budget);
    std::string steps = "steps=" + std::to_string(sat.steps) + ", bound " + std::to_string(bound);
    if (!ideal_equality(sat.ideal, *j_, opt_.budget)) return fail("L:m^inf differs from J; " + steps);
    if (sat.steps > bound) return fail(steps);
    return pass(steps);
  }

  Outcome elimination() {
    IdealHandle<K> fiber = eliminate_x(*j_, opt_.budget);
    if (spec_.mode == Mode::Generalized) {
      if (!fiber.is_zero()) return fail("J meets k[y] in " + format_poly(fiber.gens().front()));
      return pass("zero ideal");
    }
    const Polynomial<K>& hd = seq_.polys.back();
    if (fiber.gens().size() != 1) return fail(std::to_string(fiber.gens().size()) + " fiber generators");
    if (!proportional(fiber.gens().front(), hd)) return fail("fiber generator " + format_poly(fiber.gens().front()));
    Polynomial<K> graph = implicitize_elimination(map_, opt_.budget);
    if (!proportional(graph, hd)) return fail("graph elimination gives " + format_poly(graph));
    return pass("h" + std::to_string(seq_.length()) + " up to scalar");
  }

  Outcome dimension() {
    const int dim = krull_dimension(l_, opt_.budget);
    const std::string got = "dim=" + std::to_string(dim);
    if (spec_.mode == Mode::Generalized) return {CheckStatus::Observed, got};
    if (dim != spec_.n + 1) return fail(got + ", expected " + std::to_string(spec_.n + 1));
    return pass(got);
  }

  /// (I2 + x_n^i) : (I2 + K^i) = I2 + m^i and (I2 + x_n^i) : (I2 + m^i) = I2 + K^i.
  Outcome linkage() {
    const int n = spec_.n;
    for (int i = 1; i <= opt_.linkage_max; ++i) {
      std::vector<Polynomial<K>> kpow, mpow;
      for (int a = 0; a <= i; ++a) kpow.push_back(pow(var(spec_.x(n)), a) * pow(var(spec_.y(n)), i - a));
      std::vector<Monomial> monos;
      monomials_of_degree(1, i, Monomial{}, monos);
      for (const auto& mono : monos) mpow.push_back(Polynomial<K>::monomial(ring_, ring_->field().one(), mono));

      IdealHandle<K> xn(with_minors("(x_n^i)", {pow(var(spec_.x(n)), i)}));
      IdealHandle<K> k(with_minors("K^i", kpow));
      IdealHandle<K> m(with_minors("m^i", mpow));
      const std::string at = " at i=" + std::to_string(i);
      if (!ideal_equality(colon_ideal(xn, k, opt_.budget), m, opt_.budget)) return fail("x_n^i : K^i != m^i" + at);
      if (!ideal_equality(colon_ideal(xn, m, opt_.budget), k, opt_.budget)) return fail("x_n^i : m^i != K^i" + at);
    }
    return pass("i=1.." + std::to_string(opt_.linkage_max));
  }

  IdealHandle<K> with_minors(const std::string& name, const std::vector<Polynomial<K>>& extra) const {
    std::vector<Polynomial<K>> gens = minors_.gens();
    gens.insert(gens.end(), extra.begin(), extra.end());
    return IdealHandle<K>(name, ring_, std::move(gens));
  }

  /// Monomials of degree `remaining` in x_var..x_n.
  void monomials_of_degree(int var, int remaining, Monomial current, std::vector<Monomial>& out) const {
    if (var == spec_.n) {
      current.set(spec_.x(var), remaining);
      out.push_back(current);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      current.set(spec_.x(var), e);
      monomials_of_degree(var + 1, remaining - e, current, out);
    }
  }

  const DeJonquieresMap<K>& map_;
  VerifyOptions opt_;
  RingPtr<K> ring_;
  RingSpec spec_;
  DowngradedSequence<K> seq_;
  IdealHandle<K> minors_;
  IdealHandle<K> l_;
  IdealHandle<K> m_;
  std::optional<IdealHandle<K>> j_;
};

}  // namespace

template <class K>
VerifyReport verify_suite(const DeJonquieresMap<K>& map, const VerifyOptions& options) {
  return Suite<K>(map, options).run();
}

template VerifyReport verify_suite(const DeJonquieresMap<RationalField>&, const VerifyOptions&);
template VerifyReport verify_suite(const DeJonquieresMap<PrimeField>&, const VerifyOptions&);

}  // namespace rees
