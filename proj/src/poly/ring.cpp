#include "rees/ring.hpp"

#include "rees/errors.hpp"
#include "rees/monomial.hpp"

namespace rees {

std::string to_string(Mode mode) {
  return mode == Mode::Standard ? "standard" : "generalized";
}

std::string FieldSpec::to_string() const {
  return kind == Kind::Rationals ? "Q" : "Fp " + std::to_string(p);
}

std::string RingSpec::var_name(int var) const {
  if (var < x_count()) return "x" + std::to_string(var + 1);
  return "y" + std::to_string(var - x_count() + 1);
}

void RingSpec::validate() const {
  if (n < 2) throw Error(ErrorKind::InvalidRing, "n must be at least 2, got " + std::to_string(n));
  if (n > kMaxN) {
    throw Error(ErrorKind::InvalidRing,
                "n = " + std::to_string(n) + " exceeds the supported maximum " + std::to_string(kMaxN));
  }
  static_assert(2 * kMaxN + 2 + 1 <= kMaxVars);
  if (field.is_prime() && !is_prime(field.p)) {
    throw Error(ErrorKind::InvalidRing, std::to_string(field.p) + " is not prime");
  }
}

template <>
RingPtr<RationalField> make_ring<RationalField>(const RingSpec& spec) {
  if (spec.field.is_prime()) throw Error(ErrorKind::InvalidRing, "ring spec asks for a prime field");
  return std::make_shared<const Ring<RationalField>>(spec, RationalField{});
}

template <>
RingPtr<PrimeField> make_ring<PrimeField>(const RingSpec& spec) {
  if (!spec.field.is_prime()) throw Error(ErrorKind::InvalidRing, "ring spec asks for the rationals");
  return std::make_shared<const Ring<PrimeField>>(spec, PrimeField(spec.field.p));
}

}  // namespace rees
