#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rees {

enum class ErrorKind {
  Syntax,
  UnknownVariable,
  CoefficientNotInField,
  MixedRings,
  InvalidRing,
  InvalidArgument,
  DegreeMismatch,
  NotCoprime,
  NotMonoid,
  MonoidMissingLastVariable,
  NotHomogeneous,
  NotInBaseRing,
  NotInIdeal,
  NotDowngradable,
  InternalInvariantViolation,
  ResourceLimit,
  NotPrincipal,
  ImproperIdeal,
  Io,
  Format,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. The kind is stable and machine
/// readable; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Polynomial syntax errors carry the byte offset where parsing stopped.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, std::size_t position, const std::string& message);

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace rees
