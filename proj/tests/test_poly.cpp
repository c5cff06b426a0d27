#include <map>

#include "doctest.h"
#include "rees/bigrading.hpp"
#include "rees/errors.hpp"
#include "support.hpp"

using namespace testing;
using rees::Bidegree;
using rees::ErrorKind;
using rees::TermOrder;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const rees::Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("prime field axioms on random elements") {
  PrimeField k(kP);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::uint32_t> d(0, kP - 1);
  for (int i = 0; i < 2000; ++i) {
    std::uint32_t a = d(rng), b = d(rng), c = d(rng);
    CHECK(k.add(a, b) == (a + b) % kP);
    CHECK(k.mul(a, b) == static_cast<std::uint32_t>(std::uint64_t{a} * b % kP));
    CHECK(k.mul(a, k.add(b, c)) == k.add(k.mul(a, b), k.mul(a, c)));
    CHECK(k.add(a, k.neg(a)) == 0);
    if (a != 0) CHECK(k.mul(a, k.inv(a)) == 1);
  }
}

TEST_CASE("prime field construction") {
  CHECK(rees::is_prime(2));
  CHECK(rees::is_prime(32003));
  CHECK(rees::is_prime(2147483647u));
  CHECK_FALSE(rees::is_prime(1));
  CHECK_FALSE(rees::is_prime(32001));
  CHECK(kind_of([] { PrimeField k(32001); }) == ErrorKind::InvalidRing);
  PrimeField k(7);
  CHECK(k.from_int(-1) == 6);
  CHECK(k.display(6) == -1);
  CHECK(k.display(3) == 3);
  CHECK(k.display(4) == -3);
}

TEST_CASE("rational field") {
  RationalField q;
  auto h = q.from_fraction(2, 4);
  CHECK(h == mpq_class(1, 2));
  CHECK(q.inv(h) == 2);
  CHECK(kind_of([&] { q.inv(q.zero()); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("ring specs") {
  RingSpec s{Mode::Standard, 3, FieldSpec::rationals()};
  CHECK(s.x_count() == 3);
  CHECK(s.y_count() == 4);
  CHECK(s.var_name(0) == "x1");
  CHECK(s.var_name(3) == "y1");
  CHECK(s.var_name(6) == "y4");
  RingSpec g{Mode::Generalized, 3, FieldSpec::rationals()};
  CHECK(g.x_count() == 4);
  CHECK(g.var_name(3) == "x4");
  CHECK(g.var_name(4) == "y1");
  CHECK(kind_of([] { q_ring(1); }) == ErrorKind::InvalidRing);
  CHECK(kind_of([] { q_ring(rees::kMaxN + 1); }) == ErrorKind::InvalidRing);
}

TEST_CASE("term orders are total, multiplicative and have 1 as minimum") {
  std::mt19937_64 rng(5);
  for (TermOrder order : {TermOrder::grevlex(), TermOrder::lex(), TermOrder::block(3)}) {
    CAPTURE(order.name());
    for (int i = 0; i < 1000; ++i) {
      Monomial a = random_monomial(rng, 7, 4), b = random_monomial(rng, 7, 4), c = random_monomial(rng, 7, 4);
      int ab = order.compare(a, b);
      CHECK(ab == -order.compare(b, a));
      CHECK((ab == 0) == (a == b));
      if (ab > 0) CHECK(order.greater(a * c, b * c));
      if (!a.is_one()) CHECK(order.greater(a, Monomial{}));
      if (order.greater(a, b) && order.greater(b, c)) CHECK(order.greater(a, c));
    }
  }
}

TEST_CASE("grevlex ranks x1 > ... > y_{n+1} and breaks ties from the last variable") {
  auto r = q_ring(3);
  const TermOrder g = TermOrder::grevlex();
  for (int v = 0; v + 1 < r->nvars(); ++v) CHECK(g.greater(Monomial::variable(v), Monomial::variable(v + 1)));
  // x2*y1 > x1*y2: the last differing variable is y2, with the smaller exponent winning.
  CHECK(g.greater(P(r, "x2*y1").terms()[0].mono, P(r, "x1*y2").terms()[0].mono));
  CHECK(g.greater(P(r, "x1^3").terms()[0].mono, P(r, "x1*y4").terms()[0].mono));
  const TermOrder b = TermOrder::block(3);
  CHECK(b.greater(P(r, "x3").terms()[0].mono, P(r, "y1^5").terms()[0].mono));
}

TEST_CASE("parse examples") {
  auto r = q_ring(3);
  auto h1 = P(r, "x2^2*y2 - x1^2*y4");
  CHECK(h1.size() == 2);
  CHECK(std::get<Bidegree>(rees::bidegree_of(h1)) == Bidegree{2, 1});
  CHECK(P(r, "0").is_zero());
  auto f5 = fp_ring(3, Mode::Standard, 5);
  CHECK(S(P(f5, "x1*(x1+y1)")) == "x1^2 + x1*y1");
  CHECK(S(P(r, "  -3/6*x1 +  2 ")) == "-1/2*x1 + 2");
  CHECK(S(P(r, "(x1 - y1)*(x1 + y1)")) == "x1^2 - y1^2");
  CHECK(kind_of([&] { P(r, "(x1 - y1)^2"); }) == ErrorKind::Syntax);
  CHECK(S(P(r, "x1*x1 - x1^2")) == "0");
}

TEST_CASE("parse errors carry a kind and a position") {
  auto r = q_ring(3);
  auto position_of = [&](const std::string& text, ErrorKind want) -> std::size_t {
    try {
      P(r, text);
    } catch (const rees::ParseError& e) {
      CHECK(e.kind() == want);
      return e.position();
    }
    FAIL("no error for " << text);
    return 0;
  };
  CHECK(position_of("x1 +", ErrorKind::Syntax) == 4);
  CHECK(position_of("x1y1", ErrorKind::Syntax) == 2);
  CHECK(position_of("x1 * * x2", ErrorKind::Syntax) == 5);
  CHECK(position_of("(x1 + x2", ErrorKind::Syntax) == 8);
  CHECK(position_of("x4", ErrorKind::UnknownVariable) == 0);
  CHECK(position_of("x1 + y5", ErrorKind::UnknownVariable) == 5);
  CHECK(position_of("1/0", ErrorKind::CoefficientNotInField) == 0);
  auto f5 = fp_ring(3, Mode::Standard, 5);
  CHECK(kind_of([&] { P(f5, "1/5*x1"); }) == ErrorKind::CoefficientNotInField);
  CHECK(S(P(f5, "1/2*x1")) == "-2*x1");
  CHECK(S(P(q_ring(3, Mode::Generalized), "x4")) == "x4");
}

TEST_CASE("format examples") {
  auto r = q_ring(3);
  CHECK(S(Polynomial<RationalField>(r)) == "0");
  CHECK(S(P(r, "x2^2*y2 - x1^2*y4")) == "x2^2*y2 - x1^2*y4");
  CHECK(S(P(r, "-x1")) == "-x1");
  CHECK(S(P(r, "-1")) == "-1");
  CHECK(S(P(r, "y4 + 5/3*x1*y1 - x3^2")) == "-x3^2 + 5/3*x1*y1 + y4");
  auto fp = fp_ring(3);
  CHECK(S(P(fp, "32002*x1 + 16002*x2")) == "-x1 - 16001*x2");
}

TEST_CASE("canonical term order agrees with a naive sort") {
  std::mt19937_64 rng(21);
  auto r = q_ring(3);
  const TermOrder g = TermOrder::grevlex();
  for (int i = 0; i < 200; ++i) {
    auto p = random_poly(r, rng, 8, 4);
    // Reference: merge duplicates in a map, then sort descending.
    std::map<std::string, std::pair<Monomial, mpq_class>> merged;
    for (const auto& t : p.terms()) merged[rees::format_monomial(t.mono, r->spec())] = {t.mono, t.coeff};
    std::vector<Monomial> expect;
    for (auto& [_, mc] : merged) expect.push_back(mc.first);
    std::sort(expect.begin(), expect.end(), [&](const Monomial& a, const Monomial& b) { return g.greater(a, b); });
    std::vector<Monomial> got;
    for (const auto& t : p.terms()) got.push_back(t.mono);
    CHECK(got == expect);
    for (const auto& t : p.terms()) CHECK(t.coeff != 0);
  }
}

TEST_CASE("arithmetic examples") {
  auto r = q_ring(3);
  auto a = P(r, "x1*y2 - x2*y1");
  CHECK(a + Polynomial<RationalField>(r) == a);
  CHECK(S(a * P(r, "x3")) == "-x2*x3*y1 + x1*x3*y2");
  CHECK((a * P(r, "x1 + y3") - P(r, "x1 + y3") * a).is_zero());
  CHECK(S(rees::pow(P(r, "x1 + x2"), 3)) == "x1^3 + 3*x1^2*x2 + 3*x1*x2^2 + x2^3");
  CHECK(S(rees::divide_exact(P(r, "x1^3 - x2^3"), P(r, "x1 - x2"))) == "x1^2 + x1*x2 + x2^2");
  CHECK(kind_of([&] { rees::divide_exact(P(r, "x1^3 + x2"), P(r, "x1")); }) == ErrorKind::InternalInvariantViolation);
  CHECK(rees::proportional(P(r, "2*x1 - 4*y1"), P(r, "-1/2*x1 + y1")));
  CHECK_FALSE(rees::proportional(P(r, "x1 - y1"), P(r, "x1 + y1")));
  CHECK(S(P(r, "3*x2 + 6*x1").monic()) == "x1 + 1/2*x2");
}

TEST_CASE("ring axioms hold, checked by evaluation at random points") {
  std::mt19937_64 rng(3);
  auto r = fp_ring(3);
  for (int i = 0; i < 300; ++i) {
    auto a = random_poly(r, rng), b = random_poly(r, rng), c = random_poly(r, rng);
    auto pt = random_point(rng, r->nvars());
    const PrimeField& k = r->field();
    CHECK(evaluate(a * b, pt) == k.mul(evaluate(a, pt), evaluate(b, pt)));
    CHECK(evaluate(a + b, pt) == k.add(evaluate(a, pt), evaluate(b, pt)));
    CHECK(evaluate(a - b, pt) == k.sub(evaluate(a, pt), evaluate(b, pt)));
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("format and parse round-trip") {
  std::mt19937_64 rng(8);
  auto q = q_ring(3, Mode::Generalized);
  auto fp = fp_ring(2);
  for (int i = 0; i < 300; ++i) {
    mpq_class c(1 + i % 5, 1 + i % 7);
    c.canonicalize();
    auto p = random_poly(q, rng, 6, 5).scaled(c);
    CHECK(P(q, S(p)) == p);
    CHECK(S(P(q, S(p))) == S(p));
    auto e = random_poly(fp, rng, 6, 5);
    CHECK(P(fp, S(e)) == e);
  }
}

TEST_CASE("F_p arithmetic agrees with Q arithmetic reduced mod p") {
  std::mt19937_64 rng(9);
  auto q = q_ring(2);
  auto fp = fp_ring(2, Mode::Standard, 101);
  for (int i = 0; i < 200; ++i) {
    auto a = random_poly(q, rng), b = random_poly(q, rng);
    CHECK(P(fp, S(a * b)) == P(fp, S(a)) * P(fp, S(b)));
    CHECK(P(fp, S(a - b)) == P(fp, S(a)) - P(fp, S(b)));
  }
}

TEST_CASE("bidegrees") {
  auto r = q_ring(3);
  CHECK(std::get<Bidegree>(rees::bidegree_of(P(r, "x2^2*y2 - x1^2*y4"))) == Bidegree{2, 1});
  CHECK(std::holds_alternative<rees::NotBihomogeneous>(rees::bidegree_of(P(r, "x1 + y1"))));
  CHECK(std::holds_alternative<rees::ZeroPolynomial>(rees::bidegree_of(P(r, "0"))));
  auto g = q_ring(3, Mode::Generalized);
  CHECK(std::get<Bidegree>(rees::bidegree_of(P(g, "x2*y1^2*y2 + x4*y3^3 - x4*y1^2*y4"))) == Bidegree{1, 3});
  CHECK(Bidegree{2, 1}.to_string() == "(2,1)");
}

TEST_CASE("bidegree is additive under products") {
  std::mt19937_64 rng(13);
  auto r = fp_ring(3);
  std::uniform_int_distribution<int> deg(0, 3);
  for (int i = 0; i < 200; ++i) {
    Bidegree ba{deg(rng), deg(rng)}, bb{deg(rng), deg(rng)};
    auto a = random_bihomogeneous(r, rng, ba.xdeg, ba.ydeg);
    auto b = random_bihomogeneous(r, rng, bb.xdeg, bb.ydeg);
    CHECK(std::get<Bidegree>(rees::bidegree_of(a * b)) == ba + bb);
  }
}

TEST_CASE("substitution examples") {
  auto r = q_ring(3);
  rees::Substitution<RationalField> sec4(r, {P(r, "x1^3"), P(r, "x1^2*x2"), P(r, "x1^2*x3"), P(r, "x2^3")});
  CHECK(rees::substitute(P(r, "y2^3 - y1^2*y4"), sec4).is_zero());
  // The value printed for h3 in the worked example does not vanish.
  CHECK_FALSE(rees::substitute(P(r, "y2^2 - y1^2*y4"), sec4).is_zero());
  CHECK(S(rees::substitute(P(r, "y1 + x3*y2"), sec4)) == "x1^2*x2*x3 + x1^3");
  auto id = rees::Substitution<RationalField>::identity(r);
  auto p = P(r, "x1*y2^2 - 3*y4 + x3");
  CHECK(rees::substitute(p, id) == p);
  auto f = P(r, "x1 + x2*x3");
  rees::Substitution<RationalField> koszul(
      r, {f * P(r, "x1"), f * P(r, "x2"), f * P(r, "x3"), P(r, "x1^3 + x2^3")});
  CHECK(rees::substitute(P(r, "x1*y2 - x2*y1"), koszul).is_zero());
  CHECK(kind_of([&] { rees::Substitution<RationalField>(r, {P(r, "y1"), P(r, "x1"), P(r, "x1"), P(r, "x1")}); }) ==
        ErrorKind::InvalidArgument);
}

TEST_CASE("substitution is a ring homomorphism") {
  std::mt19937_64 rng(17);
  auto r = fp_ring(2);
  const auto& spec = r->spec();
  for (int i = 0; i < 100; ++i) {
    std::vector<Polynomial<PrimeField>> images;
    for (int j = 0; j < spec.y_count(); ++j) images.push_back(random_bihomogeneous(r, rng, 2, 0, 2));
    rees::Substitution<PrimeField> s(r, images);
    auto a = random_poly(r, rng), b = random_poly(r, rng);
    CHECK(rees::substitute(a * b, s) == rees::substitute(a, s) * rees::substitute(b, s));
    CHECK(rees::substitute(a + b, s) == rees::substitute(a, s) + rees::substitute(b, s));
    // Against evaluation: substitute then evaluate = evaluate at the image point.
    auto pt = random_point(rng, r->nvars());
    auto moved = pt;
    for (int j = 0; j < spec.y_count(); ++j) moved[spec.x_count() + j] = evaluate(images[j], pt);
    CHECK(evaluate(rees::substitute(a, s), pt) == evaluate(a, moved));
  }
}

TEST_CASE("mixing rings is rejected") {
  auto a = q_ring(2), b = q_ring(3);
  CHECK(kind_of([&] { (void)(P(a, "x1") + P(b, "x1")); }) == ErrorKind::MixedRings);
  auto c = q_ring(2);
  CHECK(S(P(a, "x1") + P(c, "x2")) == "x1 + x2");
}

TEST_CASE("monomial operations") {
  Monomial a = Monomial::variable(0, 2) * Monomial::variable(3);
  Monomial b = Monomial::variable(0) * Monomial::variable(4, 2);
  CHECK(a.degree() == 3);
  CHECK(a.lcm(b) == Monomial::variable(0, 2) * Monomial::variable(3) * Monomial::variable(4, 2));
  CHECK(a.gcd(b) == Monomial::variable(0));
  CHECK(Monomial::variable(0).divides(a));
  CHECK_FALSE(a.divides(b));
  CHECK(a.coprime(Monomial::variable(1)));
  CHECK(a / Monomial::variable(0) == Monomial::variable(0) * Monomial::variable(3));
  CHECK(a.shifted(1)[1] == 2);
  CHECK(a.shifted(1).shifted(-1) == a);
  CHECK(a.degree_in_range(0, 3) == 2);
}
