#include "rees/monomial.hpp"

#include <algorithm>
#include <limits>

#include "rees/errors.hpp"

namespace rees {

Monomial Monomial::variable(int var, int exponent) {
  Monomial m;
  m.set(var, exponent);
  return m;
}

void Monomial::set(int var, int exponent) {
  if (var < 0 || var >= kMaxVars) {
    throw Error(ErrorKind::InvalidArgument, "variable index out of range");
  }
  if (exponent < 0 || exponent > std::numeric_limits<Exponent>::max()) {
    throw Error(ErrorKind::ResourceLimit, "exponent out of range");
  }
  degree_ = degree_ - exps_[var] + static_cast<std::uint32_t>(exponent);
  exps_[var] = static_cast<Exponent>(exponent);
}

int Monomial::degree_in_range(int begin, int end) const {
  int s = 0;
  for (int i = begin; i < end; ++i) s += exps_[i];
  return s;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (int i = 0; i < kMaxVars; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (int i = 0; i < kMaxVars; ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

std::uint32_t Monomial::support_mask() const {
  std::uint32_t mask = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    if (exps_[i] != 0) mask |= 1u << i;
  }
  return mask;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    unsigned e = unsigned{exps_[i]} + other.exps_[i];
    if (e > std::numeric_limits<Exponent>::max()) {
      throw Error(ErrorKind::ResourceLimit, "exponent overflow");
    }
    r.exps_[i] = static_cast<Exponent>(e);
  }
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.exps_[i] = static_cast<Exponent>(exps_[i] - other.exps_[i]);
  r.degree_ = degree_ - other.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    r.exps_[i] = std::max(exps_[i], other.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    r.exps_[i] = std::min(exps_[i], other.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

Monomial Monomial::shifted(int by) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    if (exps_[i] == 0) continue;
    int j = i + by;
    if (j < 0 || j >= kMaxVars) throw Error(ErrorKind::InvalidArgument, "monomial shift out of range");
    r.exps_[j] = exps_[i];
  }
  r.degree_ = degree_;
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto e : exps_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace rees
