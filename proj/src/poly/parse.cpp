#include <cctype>

#include "rees/errors.hpp"
#include "rees/poly_io.hpp"

namespace rees {
namespace {

template <class K>
class Parser {
 public:
  Parser(std::string_view text, const RingPtr<K>& ring) : text_(text), ring_(ring) {}

  Polynomial<K> parse() {
    Polynomial<K> p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  Polynomial<K> expr() {
    skip_ws();
    bool negate_first = false;
    if (peek() == '-') {
      ++pos_;
      negate_first = true;
    }
    Polynomial<K> acc = term();
    if (negate_first) acc = -acc;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Polynomial<K> rhs = term();
      acc = c == '+' ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  Polynomial<K> term() {
    Polynomial<K> acc = factor();
    for (;;) {
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      acc = acc * factor();
    }
    return acc;
  }

  Polynomial<K> factor() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial<K> inner = expr();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return coefficient();
    if (c == 'x' || c == 'y') return variable();
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Polynomial<K> coefficient() {
    std::size_t start = pos_;
    mpz_class num(read_digits());
    mpz_class den(1);
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
      den = mpz_class(read_digits());
    }
    try {
      return Polynomial<K>::constant(ring_, ring_->field().from_fraction(num, den));
    } catch (const Error& e) {
      throw ParseError(ErrorKind::CoefficientNotInField, start, e.what());
    }
  }

  Polynomial<K> variable() {
    std::size_t start = pos_;
    char letter = text_[pos_++];
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected variable index");
    std::string digits = read_digits();
    if (digits.size() > 4) throw ParseError(ErrorKind::UnknownVariable, start, "unknown variable");
    int index = std::stoi(digits);
    const RingSpec& spec = ring_->spec();
    int limit = letter == 'x' ? spec.x_count() : spec.y_count();
    if (index < 1 || index > limit) {
      throw ParseError(ErrorKind::UnknownVariable, start,
                       "unknown variable " + std::string(1, letter) + digits);
    }
    int var = letter == 'x' ? spec.x(index) : spec.y(index);
    int exponent = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
      std::string e = read_digits();
      if (e.size() > 4) fail("exponent too large");
      exponent = std::stoi(e);
    }
    return Polynomial<K>::monomial(ring_, ring_->field().one(), Monomial::variable(var, exponent));
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(ErrorKind::Syntax, pos_, message);
  }

  std::string_view text_;
  const RingPtr<K>& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

template <class K>
Polynomial<K> parse_poly(std::string_view text, const RingPtr<K>& ring) {
  return Parser<K>(text, ring).parse();
}

template Polynomial<RationalField> parse_poly(std::string_view, const RingPtr<RationalField>&);
template Polynomial<PrimeField> parse_poly(std::string_view, const RingPtr<PrimeField>&);

}  // namespace rees
