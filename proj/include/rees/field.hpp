#pragma once

#include <concepts>
#include <cstdint>
#include <random>
#include <string>

#include <gmpxx.h>

namespace rees {

/// Exact rationals backed by GMP.
class RationalField {
 public:
  using Elem = mpq_class;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long v) const { return Elem(v); }
  /// num/den; throws CoefficientNotInField when den is zero.
  Elem from_fraction(const mpz_class& num, const mpz_class& den) const;

  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool is_one(const Elem& a) const { return a == 1; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const;
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

  /// Value used for printing.
  mpq_class display(const Elem& a) const { return a; }
  /// Small nonzero integer in [-9, 9].
  Elem random_nonzero(std::mt19937_64& rng) const;

  std::string name() const { return "Q"; }
  bool operator==(const RationalField&) const = default;
};

/// Integers modulo a prime p < 2^31.
class PrimeField {
 public:
  using Elem = std::uint32_t;

  /// Throws InvalidRing unless p is a prime in [2, 2^31).
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long v) const;
  Elem from_fraction(const mpz_class& num, const mpz_class& den) const;

  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1; }
  Elem add(Elem a, Elem b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  /// Symmetric representative in (-p/2, p/2].
  mpq_class display(Elem a) const;
  Elem random_nonzero(std::mt19937_64& rng) const;

  std::string name() const { return "Fp " + std::to_string(p_); }
  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint32_t p);

template <class K>
concept CoefficientField = requires(const K& k, const typename K::Elem& a, std::mt19937_64& rng) {
  { k.zero() } -> std::same_as<typename K::Elem>;
  { k.add(a, a) } -> std::same_as<typename K::Elem>;
  { k.mul(a, a) } -> std::same_as<typename K::Elem>;
  { k.inv(a) } -> std::same_as<typename K::Elem>;
  { k.is_zero(a) } -> std::same_as<bool>;
  { k.display(a) } -> std::same_as<mpq_class>;
  { k.random_nonzero(rng) } -> std::same_as<typename K::Elem>;
};

static_assert(CoefficientField<RationalField>);
static_assert(CoefficientField<PrimeField>);

}  // namespace rees
