#include "rees/field.hpp"

#include "rees/errors.hpp"

namespace rees {

RationalField::Elem RationalField::from_fraction(const mpz_class& num, const mpz_class& den) const {
  if (den == 0) throw Error(ErrorKind::CoefficientNotInField, "zero denominator");
  Elem q(num, den);
  q.canonicalize();
  return q;
}

RationalField::Elem RationalField::inv(const Elem& a) const {
  if (sgn(a) == 0) throw Error(ErrorKind::InvalidArgument, "inverse of zero");
  return 1 / a;
}

RationalField::Elem RationalField::random_nonzero(std::mt19937_64& rng) const {
  std::uniform_int_distribution<int> dist(1, 18);
  int v = dist(rng);
  return Elem(v <= 9 ? v : 9 - v);
}

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t q = 2; static_cast<std::uint64_t>(q) * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw Error(ErrorKind::InvalidRing, "field characteristic " + std::to_string(p) +
                                            " is not a prime below 2^31");
  }
}

PrimeField::Elem PrimeField::from_int(long v) const {
  long r = v % static_cast<long>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

PrimeField::Elem PrimeField::from_fraction(const mpz_class& num, const mpz_class& den) const {
  mpz_class m(p_);
  mpz_class n = num % m;
  if (n < 0) n += m;
  mpz_class d = den % m;
  if (d < 0) d += m;
  if (d == 0) {
    throw Error(ErrorKind::CoefficientNotInField,
                "denominator " + den.get_str() + " vanishes modulo " + std::to_string(p_));
  }
  return div(static_cast<Elem>(n.get_ui()), static_cast<Elem>(d.get_ui()));
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw Error(ErrorKind::InvalidArgument, "inverse of zero");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<Elem>(t);
}

mpq_class PrimeField::display(Elem a) const {
  if (a > p_ / 2) return mpq_class(-static_cast<long>(p_ - a));
  return mpq_class(static_cast<unsigned long>(a));
}

PrimeField::Elem PrimeField::random_nonzero(std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::uint32_t> dist(1, p_ - 1);
  return dist(rng);
}

}  // namespace rees
