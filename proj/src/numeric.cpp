#include "k3mcg/numeric.hpp"

#include <cctype>

namespace k3mcg {

namespace {

bool valid_integer_literal(std::string_view text) {
  if (text.empty()) return false;
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) return false;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view text) {
  if (!valid_integer_literal(text)) {
    throw DomainError("malformed integer literal '" + std::string(text) + "'");
  }
  if (text[0] == '+') text.remove_prefix(1);
  return Integer(std::string(text));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const Integer num = parse_integer(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw DomainError("malformed rational literal '" + std::string(text) + "'");
  }
  return make_rational(num, parse_integer(den_text));
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) { return value.get_str(); }

bool is_square_free(const Integer& value) {
  if (value <= 0) return false;
  Integer rest = value;
  for (Integer p = 2; p * p <= rest; ++p) {
    if (rest % p == 0) {
      rest /= p;
      if (rest % p == 0) return false;
    }
  }
  return true;
}

Integer isqrt(const Integer& value) {
  if (value < 0) throw DomainError("isqrt of a negative number");
  Integer root;
  mpz_sqrt(root.get_mpz_t(), value.get_mpz_t());
  return root;
}

bool rational_sqrt(const Rational& value, Rational& root) {
  if (value < 0) return false;
  const Integer& num = value.get_num();
  const Integer& den = value.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return false;
  root = make_rational(isqrt(num), isqrt(den));
  return true;
}

}  // namespace k3mcg
