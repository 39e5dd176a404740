#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "multigrade/arith.hpp"

namespace multigrade {

/// Identifies the system  sum_{i<=s1} x_i^r = sum_{i<=s2} y_i^r,  r = 1..k.
/// Always stored with s1 <= s2.
struct SystemShape {
  unsigned k = 1;
  std::size_t s1 = 1;
  std::size_t s2 = 1;

  /// Validates k, s1, s2 >= 1 and swaps the counts so that s1 <= s2.
  static SystemShape make(unsigned k, std::size_t s1, std::size_t s2);

  std::size_t total() const { return s1 + s2; }

  friend bool operator==(const SystemShape&, const SystemShape&) = default;
};

/// Two integer term lists and the degree they are claimed to agree up to.
///
/// A Solution is only a *candidate*: nothing about the power sums is assumed.
/// Use verify() to check it. Construction puts the shorter list on the left.
class Solution {
 public:
  Solution(unsigned k, std::vector<Integer> lhs, std::vector<Integer> rhs);

  const SystemShape& shape() const { return shape_; }
  unsigned k() const { return shape_.k; }
  const std::vector<Integer>& lhs() const { return lhs_; }
  const std::vector<Integer>& rhs() const { return rhs_; }

  /// Every term of both sides multiplied by -1.
  Solution negated() const;

  friend bool operator==(const Solution& a, const Solution& b);
  /// Orders by k, then shape, then lhs and rhs lexicographically.
  friend bool operator<(const Solution& a, const Solution& b);

 private:
  SystemShape shape_;
  std::vector<Integer> lhs_;
  std::vector<Integer> rhs_;
};

/// A symmetric (equal-size) pair of term lists: the Tarry-Escott setting.
struct TEPair {
  unsigned k = 1;
  std::vector<Integer> a;
  std::vector<Integer> b;

  friend bool operator==(const TEPair&, const TEPair&) = default;
};

Integer power_sum(std::span<const Integer> terms, unsigned r);

/// Exponents r in 1..k for which both sides have equal r-th power sums.
std::vector<unsigned> holding_exponents(unsigned k, std::span<const Integer> lhs,
                                        std::span<const Integer> rhs);

bool verify(const Solution& sol);
bool verify(const TEPair& te);

/// True when the longer side is the shorter side plus (s2 - s1) zeros, up to order.
bool is_trivial(const Solution& sol);

/// Canonical representative of a verified solution.
///
/// Divides by the positive GCD of the nonzero terms, sorts each side in
/// descending order and fixes the global sign: the largest-magnitude term is
/// made positive, falling back to the lexicographically larger of the two
/// sign choices when +m and -m both occur. For s1 == s2 the sides are ordered
/// so that lhs >= rhs lexicographically.
///
/// Throws PreconditionError if sol does not verify and DegenerateError if
/// every term is zero.
Solution normalize(const Solution& sol);

/// Adds d to every term of a verifying pair. Throws PreconditionError otherwise.
TEPair frolov_shift(const TEPair& te, const Integer& d);

/// Removes zeros from each side independently. Throws DegenerateError if a side empties.
Solution drop_zeros(const TEPair& te);

struct ShapeBounds {
  std::size_t max_side_min;
  std::size_t min_side_min;
  std::size_t total_min;

  friend bool operator==(const ShapeBounds&, const ShapeBounds&) = default;
};

/// Smallest side counts that can carry a nontrivial solution of degree k.
ShapeBounds shape_lower_bounds(unsigned k);

/// Shapes (s1 <= s2) with s1 + s2 == total that the lower bounds do not exclude.
std::vector<SystemShape> admissible_shapes(unsigned k, std::size_t total);

}  // namespace multigrade
