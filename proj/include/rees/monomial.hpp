#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace rees {

/// Upper bound on the number of variables of any ring the library builds,
/// including the oracle's auxiliary variable.
inline constexpr int kMaxVars = 16;

/// Dense exponent vector. Slots past the ring's variable count stay zero,
/// so comparisons never need to know the ring.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;

  static Monomial variable(int var, int exponent = 1);

  Exponent operator[](int var) const { return exps_[var]; }
  void set(int var, int exponent);

  int degree() const { return static_cast<int>(degree_); }
  /// Sum of exponents over [begin, end).
  int degree_in_range(int begin, int end) const;
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  /// True when no variable occurs in both.
  bool coprime(const Monomial& other) const;
  /// Bit i set iff variable i occurs.
  std::uint32_t support_mask() const;

  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; precondition other.divides(*this).
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;

  /// Moves every exponent `by` slots to the right (positive) or left (negative).
  Monomial shifted(int by) const;

  bool operator==(const Monomial& other) const = default;

  std::size_t hash() const;

 private:
  std::array<Exponent, kMaxVars> exps_{};
  std::uint32_t degree_ = 0;
};

}  // namespace rees

template <>
struct std::hash<rees::Monomial> {
  std::size_t operator()(const rees::Monomial& m) const noexcept { return m.hash(); }
};
