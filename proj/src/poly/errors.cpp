#include "rees/errors.hpp"

namespace rees {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "Syntax";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::CoefficientNotInField: return "CoefficientNotInField";
    case ErrorKind::MixedRings: return "MixedRings";
    case ErrorKind::InvalidRing: return "InvalidRing";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::NotMonoid: return "NotMonoid";
    case ErrorKind::MonoidMissingLastVariable: return "MonoidMissingLastVariable";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::NotInBaseRing: return "NotInBaseRing";
    case ErrorKind::NotInIdeal: return "NotInIdeal";
    case ErrorKind::NotDowngradable: return "NotDowngradable";
    case ErrorKind::InternalInvariantViolation: return "InternalInvariantViolation";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::NotPrincipal: return "NotPrincipal";
    case ErrorKind::ImproperIdeal: return "ImproperIdeal";
    case ErrorKind::Io: return "Io";
    case ErrorKind::Format: return "Format";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(message), kind_(kind) {}

ParseError::ParseError(ErrorKind kind, std::size_t position, const std::string& message)
    : Error(kind, message + " at position " + std::to_string(position)), position_(position) {}

}  // namespace rees
