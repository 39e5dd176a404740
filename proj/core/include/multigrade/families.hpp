#pragma once

#include <optional>
#include <vector>

#include "multigrade/core.hpp"

namespace multigrade {

/// Output of a closed integer family.
///
/// `solution` holds the terms in formula order (not normalized).
/// `verified_r` lists the exponents that were checked to hold.
struct Generated {
  Solution solution;
  std::vector<unsigned> verified_r;
  bool trivial = false;
  /// Trivial, or every term zero.
  bool degenerate = false;
};

/// Rational-valued candidate produced by the partial constructions.
///
/// Nothing beyond what the construction guarantees is assumed; query it.
class Candidate {
 public:
  Candidate(unsigned k, std::vector<Rational> lhs, std::vector<Rational> rhs);

  unsigned k() const { return k_; }
  const std::vector<Rational>& lhs() const { return lhs_; }
  const std::vector<Rational>& rhs() const { return rhs_; }

  /// sum lhs^r - sum rhs^r
  Rational defect(unsigned r) const;
  std::vector<unsigned> holding_exponents() const;
  bool holds_all() const;
  bool all_zero() const;

  /// Multiplies through by the positive LCM of the denominators.
  Solution to_solution() const;

 private:
  unsigned k_;
  std::vector<Rational> lhs_;
  std::vector<Rational> rhs_;
};

// k = 2, shape (1, 3):  (p^2+pq+q^2)^r = (p^2+pq)^r + (pq+q^2)^r + (-pq)^r.
// Degenerate (trivial) when p = 0, q = 0 or p = -q. Rejects p = q = 0.
Generated k2_family(const Integer& p, const Integer& q);

// k = 3, shape (2, 4): {c, -c | a, -a, b, -b} for a^2 + b^2 = c^2.
Generated k3_pythagorean(const Integer& a, const Integer& b, const Integer& c);

// Four-parameter k = 3 construction; r = 1 and r = 3 hold identically, r = 2 only
// when s is a root of k3_quadratic_in_s.
Candidate k3_partial(const Rational& p, const Rational& q, const Rational& r, const Rational& s);

/// Coefficients (a, b, c) of a*s^2 + b*s + c = 0, the r = 2 condition on k3_partial.
struct Quadratic {
  Integer a;
  Integer b;
  Integer c;
};
Quadratic k3_quadratic_in_s(const Integer& p, const Integer& q, const Integer& r);

/// All distinct rational roots s of the r = 2 condition (empty if none, or if
/// every s works). Linear when r = p + q.
std::vector<Rational> k3_solve_s_roots(const Integer& p, const Integer& q, const Integer& r);
/// First root from k3_solve_s_roots, if any.
std::optional<Rational> k3_solve_s(const Integer& p, const Integer& q, const Integer& r);

// Closed two-parameter k = 3 family obtained with r = p + q. Rejects p = q = 0.
Generated k3_family(const Integer& p, const Integer& q);

// Three-parameter k = 4 candidate (shape (3, 5)); r = 1, 2 hold identically.
Candidate k4_raw(const Rational& u, const Rational& v, const Rational& w);

/// The w that makes the r = 3 condition hold. Rejects v = 0.
Rational k4_w(const Rational& u, const Rational& v);

/// -32u^4 + 32u^3 + 24u^2 - 16u + 1
Rational k4_quartic(const Rational& u);

/// Roots v = ((4u-1)^2 +- t) / (24u) of the quadratic that makes r = 4 hold.
/// Requires t^2 == k4_quartic(u); rejects u = 0 and u = 1/2.
std::vector<Rational> k4_v_candidates(const Rational& u, const Rational& t);

// k = 5, shape (4, 6) closed families. Both reject m = n = 0.
Generated k5_family1(const Integer& m, const Integer& n);
Generated k5_family2(const Integer& m, const Integer& n);

/// Six-against-six k = 5 pair, odd r by antisymmetry and r = 2, 4 by construction.
TEPair k5_symmetric_raw(const Integer& m, const Integer& n, const Integer& x, const Integer& y);

/// 9u^4 - 72u^3 + 24u^2 + 96u - 48
Rational k5_quartic(const Rational& u);
/// D = k5_quartic(u) - v^2; the r = 2 and r = 4 defects of k5_ec_raw are -8D^2, -32D^4.
Rational k5_quartic_defect(const Rational& u, const Rational& v);

/// Four-against-six k = 5 candidate; r = 1, 3, 5 hold identically.
Candidate k5_ec_raw(const Rational& u, const Rational& v);

}  // namespace multigrade
