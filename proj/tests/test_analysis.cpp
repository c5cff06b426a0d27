#include "doctest.h"
#include "json.hpp"
#include "rees/analysis/betti.hpp"
#include "rees/analysis/cm_report.hpp"
#include "rees/analysis/hilbert.hpp"
#include "rees/analysis/random_instance.hpp"
#include "rees/analysis/verify.hpp"
#include "rees/downgrade.hpp"
#include "rees/errors.hpp"
#include "rees/oracle/ideal.hpp"
#include "support.hpp"

using namespace testing;
using rees::CheckStatus;
using rees::HilbertNumerator;
using rees::IdealHandle;

namespace {

long long choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

/// Depth of R(I) from the depth of the powers of K-bar and the depth lemma.
int depth_oracle(Mode mode, int n, int d) {
  int shift = mode == Mode::Generalized ? 1 : 0;
  int power = mode == Mode::Standard ? d - 1 : d - 2;
  int depth_k = (power <= n - 1 ? n + 2 : n + 1) + shift;
  return depth_k - 1;
}

/// (1-z)^e expanded.
std::vector<std::int64_t> one_minus_z_power(int e) {
  std::vector<std::int64_t> c(e + 1);
  for (int k = 0; k <= e; ++k) c[k] = (k % 2 ? -1 : 1) * choose(e, k);
  return c;
}

}  // namespace

TEST_CASE("betti tables of small shapes") {
  auto t = rees::betti_table(2, 3);
  std::vector<long long> ranks;
  for (const auto& m : t.modules) ranks.push_back(m.rank());
  CHECK(ranks == std::vector<long long>{1, 2, 1});
  auto t3 = rees::betti_table(3, 3);
  ranks.clear();
  for (const auto& m : t3.modules) ranks.push_back(m.rank());
  CHECK(ranks == std::vector<long long>{1, 4, 5, 2});
  CHECK(t3.to_text() ==
        "F0 = B  rank 1\n"
        "F1 = B(-2,-1) + B^3(-1,-1)  rank 4\n"
        "F2 = B^3(-3,-2) + B(-2,-1) + B(-1,-2)  rank 5\n"
        "F3 = B(-4,-2) + B(-3,-3)  rank 2\n");
  CHECK_THROWS_AS(rees::betti_table(1, 3), rees::Error);
  CHECK_THROWS_AS(rees::betti_table(3, 1), rees::Error);
}

TEST_CASE("betti ranks alternate to zero and match the mapping cone count") {
  for (int n = 2; n <= 12; ++n) {
    for (int d = 2; d <= 12; ++d) {
      auto t = rees::betti_table(n, d);
      CHECK(t.modules.size() == static_cast<std::size_t>(n + 1));
      CHECK(t.alternating_rank_sum() == 0);
      // Eagon-Northcott of a 2 x n generic matrix has ranks C(n, i+1) * i;
      // the cone over multiplication by h adds a shifted copy one step later.
      for (int i = 1; i <= n; ++i) {
        long long en_i = i == 1 ? choose(n, 2) : choose(n, i + 1) * i;
        long long en_prev = i == 1 ? 1 : choose(n, i) * (i - 1);
        CHECK(t.modules[i].rank() == en_i + en_prev);
        for (const auto& s : t.modules[i].summands) {
          CHECK(s.a >= 1);
          CHECK(s.b >= 1);
          CHECK((s.a + s.b == i + 1 || s.a + s.b == (i == 1 ? d : d + i)));
        }
      }
    }
  }
}

TEST_CASE("hilbert numerators") {
  CHECK(rees::hilbert_from_betti(rees::betti_table(2, 3)).coeffs == std::vector<std::int64_t>{1, 0, -1, -1, 0, 1});
  CHECK(rees::hilbert_from_betti(rees::betti_table(2, 3)).to_text() == "1 - z^2 - z^3 + z^5");
  CHECK(rees::hilbert_of_monomial_ideal({Monomial::variable(0)}).coeffs == std::vector<std::int64_t>{1, -1});
  CHECK(rees::hilbert_of_monomial_ideal({}).coeffs == std::vector<std::int64_t>{1});
  // complete intersection of monomials of degrees 2 and 3
  Monomial a = Monomial::variable(0) * Monomial::variable(0);
  Monomial b = Monomial::variable(1) * Monomial::variable(1) * Monomial::variable(1);
  CHECK(rees::hilbert_of_monomial_ideal({a, b}).coeffs == std::vector<std::int64_t>{1, 0, -1, -1, 0, 1});
  for (int n = 2; n <= 8; ++n) {
    for (int d = 2; d <= 8; ++d) {
      auto h = rees::hilbert_from_betti(rees::betti_table(n, d));
      CHECK(h.at_one() == 0);
      CHECK(h.vanishing_order_at_one() == n);
    }
  }
}

TEST_CASE("monomial hilbert numerator against (1-z)^k for variable ideals") {
  for (int k = 0; k <= 6; ++k) {
    std::vector<Monomial> gens;
    for (int v = 0; v < k; ++v) gens.push_back(Monomial::variable(v));
    CHECK(rees::hilbert_of_monomial_ideal(gens).coeffs == one_minus_z_power(k));
  }
}

TEST_CASE("hilbert series of L from the resolution and from a Groebner basis agree") {
  std::mt19937_64 rng(83);
  for (int n : {2, 3}) {
    for (int d : {2, 3, 4}) {
      CAPTURE(n);
      CAPTURE(d);
      auto r = fp_ring(n);
      for (int rep = 0; rep < 3; ++rep) {
        auto map = rees::random_instance(r, d, rng);
        IdealHandle<PrimeField> l(rees::symmetric_ideal(map));
        CHECK(rees::hilbert_from_initial(l.grevlex_basis()) == rees::hilbert_from_betti(rees::betti_table(n, d)));
      }
    }
  }
}

TEST_CASE("closed form depth and dimension") {
  auto r = rees::cm_report(Mode::Standard, 3, 3);
  CHECK(r.dim_rees == 4);
  CHECK(r.depth_rees == 4);
  CHECK(r.is_cm);
  CHECK(r.to_text() == "dim=4 depth=4 CM=yes (d=3 ≤ n=3)\nalmost-CM=yes (per closed formula)\n");
  auto s = rees::cm_report(Mode::Standard, 2, 3);
  CHECK(s.depth_rees == 2);
  CHECK_FALSE(s.is_cm);
  CHECK(s.to_text().starts_with("dim=3 depth=2 CM=no (d=3 > n=2)"));
  auto g = rees::cm_report(Mode::Generalized, 3, 4);
  CHECK(g.is_cm);
  CHECK(g.to_text().starts_with("dim=5 depth=5 CM=yes (d=4 ≤ n+1=4)"));
  auto h = rees::cm_report(Mode::Generalized, 2, 4);
  CHECK(h.depth_rees == 3);
  CHECK_FALSE(h.is_cm);
  for (Mode mode : {Mode::Standard, Mode::Generalized}) {
    for (int n = 2; n <= 10; ++n) {
      for (int d = 2; d <= 14; ++d) {
        auto c = rees::cm_report(mode, n, d);
        CHECK(c.depth_rees == depth_oracle(mode, n, d));
        CHECK(c.dim_rees == n + 1 + (mode == Mode::Generalized ? 1 : 0));
        CHECK(c.dim_rees - c.depth_rees <= 1);
        CHECK(c.is_almost_cm);
        CHECK(c.is_cm == (d <= n + (mode == Mode::Generalized ? 1 : 0)));
      }
    }
  }
}

TEST_CASE("dimension of the Rees ideal matches the closed form") {
  std::mt19937_64 rng(89);
  for (Mode mode : {Mode::Standard, Mode::Generalized}) {
    for (int d : {2, 3}) {
      auto r = fp_ring(2, mode);
      auto map = rees::random_instance(r, d, rng);
      IdealHandle<PrimeField> j(rees::rees_ideal(map));
      CHECK(rees::krull_dimension(j) == rees::cm_report(mode, 2, d).dim_rees);
    }
  }
}

TEST_CASE("random instances are valid and reproducible") {
  for (Mode mode : {Mode::Standard, Mode::Generalized}) {
    for (int n : {2, 3, 4}) {
      for (int d : {2, 3, 5}) {
        auto r = fp_ring(n, mode);
        std::mt19937_64 a(n * 100 + d), b(n * 100 + d);
        auto m1 = rees::random_instance(r, d, a);
        auto m2 = rees::random_instance(r, d, b);
        CHECK(m1.f() == m2.f());
        CHECK(m1.g() == m2.g());
        CHECK(m1.d() == d);
        CHECK(m1.f().total_degree() == d - 1);
        CHECK(m1.g().total_degree() == d);
        CHECK(m1.f().terms().size() <= 6);
        if (mode == Mode::Generalized) {
          int last = r->spec().x(n + 1);
          bool uses = false;
          for (const auto* p : {&m1.f(), &m1.g()}) {
            for (const auto& t : p->terms()) uses = uses || t.mono[last] > 0;
          }
          CHECK(uses);
        }
      }
    }
  }
}

TEST_CASE("verification passes on the worked examples") {
  auto r = q_ring(3);
  auto sec4 = rees::validate_map(P(r, "x1^2"), P(r, "x2^3"));
  auto rep = rees::verify_suite(sec4);
  CHECK_FALSE(rep.any_failed());
  std::vector<std::string> names;
  for (const auto& c : rep.checks) names.push_back(c.name);
  CHECK(names == std::vector<std::string>{"kernel", "bidegree_ladder", "exchange", "well_defined", "saturation",
                                          "elimination", "dimension", "linkage"});
  CHECK(rep.find("saturation")->witness == "steps=2, bound 2");
  CHECK(rep.find("dimension")->witness == "dim=4");
  CHECK(rep.to_text().ends_with("verdict: pass\n"));

  auto g = q_ring(3, Mode::Generalized);
  auto sec6 = rees::validate_map(P(g, "x1^2*x4"), P(g, "x1^2*x2^2 + x3^3*x4"));
  auto rep6 = rees::verify_suite(sec6);
  CHECK_FALSE(rep6.any_failed());
  CHECK(rep6.find("dimension")->status == CheckStatus::Observed);
  CHECK(rep6.find("dimension")->witness == "dim=5");
}

TEST_CASE("verification passes on random instances") {
  std::mt19937_64 rng(97);
  int count = 0;
  for (Mode mode : {Mode::Standard, Mode::Generalized}) {
    for (int n : {2, 3}) {
      for (int d : {2, 3, 4}) {
        auto r = fp_ring(n, mode);
        for (int rep = 0; rep < 9; ++rep) {
          auto map = rees::random_instance(r, d, rng);
          rees::VerifyOptions options;
          options.seed = rng();
          options.trials = 3;
          auto report = rees::verify_suite(map, options);
          CAPTURE(report.to_text());
          CHECK_FALSE(report.any_failed());
          CHECK_FALSE(report.any_resource_limit());
          ++count;
        }
      }
    }
  }
  CHECK(count >= 100);
}

TEST_CASE("a corrupted sequence is caught") {
  auto r = q_ring(3);
  auto sec4 = rees::validate_map(P(r, "x1^2"), P(r, "x2^3"));
  rees::VerifyOptions options;
  options.corrupt = true;
  auto rep = rees::verify_suite(sec4, options);
  CHECK(rep.any_failed());
  for (const char* name : {"kernel", "exchange", "well_defined", "saturation"}) {
    CAPTURE(name);
    CHECK(rep.find(name)->status == CheckStatus::Fail);
  }
  CHECK(rep.to_text().ends_with("verdict: fail\n"));

  std::mt19937_64 rng(101);
  for (Mode mode : {Mode::Standard, Mode::Generalized}) {
    for (int d : {2, 3, 4}) {
      auto map = rees::random_instance(fp_ring(3, mode), d, rng);
      auto bad = rees::verify_suite(map, options);
      CHECK(bad.any_failed());
      CHECK(bad.find("kernel")->status == CheckStatus::Fail);
    }
  }
}

TEST_CASE("verification report as json") {
  auto r = q_ring(3);
  auto sec4 = rees::validate_map(P(r, "x1^2"), P(r, "x2^3"));
  auto j = nlohmann::json::parse(rees::verify_suite(sec4).to_json());
  CHECK(j["instance"]["mode"] == "standard");
  CHECK(j["instance"]["n"] == 3);
  CHECK(j["instance"]["d"] == 3);
  CHECK(j["instance"]["f"] == "x1^2");
  CHECK(j["seed"] == 1);
  CHECK(j["checks"].size() == 8);
  CHECK(j["checks"][0]["name"] == "kernel");
  CHECK(j["checks"][0]["timing"].is_null());
  CHECK(j["verdict"] == "pass");
  rees::VerifyOptions timed;
  timed.timing = true;
  auto t = nlohmann::json::parse(rees::verify_suite(sec4, timed).to_json());
  CHECK(t["checks"][0]["timing"].is_number());
}

TEST_CASE("verification is deterministic for a fixed seed") {
  std::mt19937_64 rng(103);
  auto map = rees::random_instance(fp_ring(3), 3, rng);
  rees::VerifyOptions options;
  options.seed = 42;
  CHECK(rees::verify_suite(map, options).to_text() == rees::verify_suite(map, options).to_text());
}

TEST_CASE("a tiny budget is reported, not thrown") {
  auto r = q_ring(3);
  auto sec4 = rees::validate_map(P(r, "x1^2"), P(r, "x2^3"));
  rees::VerifyOptions options;
  options.budget = rees::Budget{2, 10000000};
  auto rep = rees::verify_suite(sec4, options);
  CHECK(rep.any_resource_limit());
  CHECK(rep.find("saturation")->status == CheckStatus::ResourceLimit);
  CHECK(rep.to_text().ends_with("verdict: resource-limit\n"));
}
