#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "rees/field.hpp"

namespace rees {

enum class Mode { Standard, Generalized };

std::string to_string(Mode mode);

struct FieldSpec {
  enum class Kind { Rationals, Prime };

  Kind kind = Kind::Rationals;
  std::uint32_t p = 0;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(std::uint32_t p) { return {Kind::Prime, p}; }

  bool is_prime() const { return kind == Kind::Prime; }
  /// "Q" or "Fp <p>", the instance-file spelling.
  std::string to_string() const;

  bool operator==(const FieldSpec&) const = default;
};

/// Largest n accepted: the generalized ring has 2n+2 variables and the
/// oracle needs one auxiliary slot on top.
inline constexpr int kMaxN = 6;

/// The polynomial ring B = k[x_1..x_m, y_1..y_{n+1}] where m = n in
/// standard mode and n+1 in generalized mode. Variables are indexed
/// x-block first, so x_i is index i-1 and y_j is index x_count()+j-1.
struct RingSpec {
  Mode mode = Mode::Standard;
  int n = 2;
  FieldSpec field;

  int x_count() const { return mode == Mode::Standard ? n : n + 1; }
  int y_count() const { return n + 1; }
  int nvars() const { return x_count() + y_count(); }

  /// 1-based variable names to slot indices.
  int x(int i) const { return i - 1; }
  int y(int j) const { return x_count() + j - 1; }
  bool is_x(int var) const { return var < x_count(); }

  std::string var_name(int var) const;

  /// Throws InvalidRing when n or the field is out of range.
  void validate() const;

  bool operator==(const RingSpec&) const = default;
};

template <CoefficientField K>
class Ring {
 public:
  Ring(RingSpec spec, K field) : spec_(spec), field_(std::move(field)) { spec_.validate(); }

  const RingSpec& spec() const { return spec_; }
  const K& field() const { return field_; }
  int nvars() const { return spec_.nvars(); }

 private:
  RingSpec spec_;
  K field_;
};

template <class K>
using RingPtr = std::shared_ptr<const Ring<K>>;

/// Builds the ring for `spec`; the field kind in `spec` must match K.
template <class K>
RingPtr<K> make_ring(const RingSpec& spec);

template <>
RingPtr<RationalField> make_ring<RationalField>(const RingSpec& spec);
template <>
RingPtr<PrimeField> make_ring<PrimeField>(const RingSpec& spec);

}  // namespace rees
