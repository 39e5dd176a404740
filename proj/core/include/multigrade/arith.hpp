#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace multigrade {

/// Arbitrary-precision signed integer. Every term of every solution is one of these.
using Integer = mpz_class;

/// Exact rational; GMP keeps it reduced with a positive denominator.
using Rational = mpq_class;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called with input outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Input collapses to a degenerate object (all-zero solution, empty side).
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// A birational map or formula is undefined at the given point.
class ExceptionalLocus : public Error {
 public:
  using Error::Error;
};

Integer pow(const Integer& base, unsigned long exponent);
Rational pow(const Rational& base, unsigned long exponent);

/// Returns the integer square root when `value` is a perfect square (0 included).
std::optional<Integer> exact_sqrt(const Integer& value);
/// Rational square root when numerator and denominator are both perfect squares.
std::optional<Rational> exact_sqrt(const Rational& value);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

Rational make_rational(const Integer& numerator, const Integer& denominator);

/// Parses a decimal integer, optionally signed. Throws PreconditionError on junk.
Integer parse_integer(std::string_view text);
/// Parses "a" or "a/b".
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);
std::string to_string(std::span<const Integer> values, std::string_view separator = ",");

}  // namespace multigrade
