#include "multigrade/arith.hpp"

#include <cctype>

namespace multigrade {

Integer pow(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Rational pow(const Rational& base, unsigned long exponent) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  return out;
}

std::optional<Integer> exact_sqrt(const Integer& value) {
  if (value < 0) return std::nullopt;
  if (mpz_perfect_square_p(value.get_mpz_t()) == 0) return std::nullopt;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), value.get_mpz_t());
  return root;
}

std::optional<Rational> exact_sqrt(const Rational& value) {
  auto num = exact_sqrt(Integer(value.get_num()));
  auto den = exact_sqrt(Integer(value.get_den()));
  if (!num || !den) return std::nullopt;
  return make_rational(*num, *den);
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

Rational make_rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw PreconditionError("rational with zero denominator");
  Rational out(numerator, denominator);
  out.canonicalize();
  return out;
}

Integer parse_integer(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw PreconditionError("not an integer: '" + std::string(text) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw PreconditionError("not an integer: '" + std::string(text) + "'");
    }
  }
  // GMP rejects a leading '+'.
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return Integer(digits, 10);
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  return make_rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

std::string to_string(const Integer& value) { return value.get_str(10); }

std::string to_string(const Rational& value) { return value.get_str(10); }

std::string to_string(std::span<const Integer> values, std::string_view separator) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += separator;
    out += values[i].get_str(10);
  }
  return out;
}

}  // namespace multigrade
