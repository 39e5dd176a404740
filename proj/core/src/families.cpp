#include "multigrade/families.hpp"

#include <algorithm>
#include <string>

namespace multigrade {

namespace {

bool all_zero(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  auto zero = [](const Integer& t) { return t == 0; };
  return std::all_of(a.begin(), a.end(), zero) && std::all_of(b.begin(), b.end(), zero);
}

// Checks that every exponent up to k holds; a failure here is a transcription bug.
Generated finish(const char* family, unsigned k, std::vector<Integer> lhs, std::vector<Integer> rhs) {
  Solution sol(k, std::move(lhs), std::move(rhs));
  auto holding = holding_exponents(k, sol.lhs(), sol.rhs());
  if (holding.size() != k) throw Error(std::string(family) + ": generated terms fail verification");
  bool trivial = is_trivial(sol);
  bool zero = all_zero(sol.lhs(), sol.rhs());
  return Generated{std::move(sol), std::move(holding), trivial, trivial || zero};
}

Rational rational_power_sum(const std::vector<Rational>& terms, unsigned r) {
  Rational total = 0;
  for (const auto& t : terms) total += pow(t, r);
  return total;
}

}  // namespace

Candidate::Candidate(unsigned k, std::vector<Rational> lhs, std::vector<Rational> rhs)
    : k_(k), lhs_(std::move(lhs)), rhs_(std::move(rhs)) {
  if (k_ < 1) throw PreconditionError("degree k must be at least 1");
}

Rational Candidate::defect(unsigned r) const { return rational_power_sum(lhs_, r) - rational_power_sum(rhs_, r); }

std::vector<unsigned> Candidate::holding_exponents() const {
  std::vector<unsigned> out;
  for (unsigned r = 1; r <= k_; ++r) {
    if (defect(r) == 0) out.push_back(r);
  }
  return out;
}

bool Candidate::holds_all() const { return holding_exponents().size() == k_; }

bool Candidate::all_zero() const {
  auto zero = [](const Rational& t) { return t == 0; };
  return std::all_of(lhs_.begin(), lhs_.end(), zero) && std::all_of(rhs_.begin(), rhs_.end(), zero);
}

Solution Candidate::to_solution() const {
  Integer scale = 1;
  for (const auto* side : {&lhs_, &rhs_}) {
    for (const auto& t : *side) scale = lcm(scale, Integer(t.get_den()));
  }
  auto scaled = [&](const std::vector<Rational>& terms) {
    std::vector<Integer> out;
    out.reserve(terms.size());
    for (const auto& t : terms) out.push_back(Integer(t.get_num()) * (scale / t.get_den()));
    return out;
  };
  return Solution(k_, scaled(lhs_), scaled(rhs_));
}

Generated k2_family(const Integer& p, const Integer& q) {
  if (p == 0 && q == 0) throw PreconditionError("k2_family: (p, q) must not both be zero");
  return finish("k2_family", 2, {p * p + p * q + q * q}, {p * p + p * q, p * q + q * q, -p * q});
}

Generated k3_pythagorean(const Integer& a, const Integer& b, const Integer& c) {
  if (a * a + b * b != c * c) throw PreconditionError("k3_pythagorean: a^2 + b^2 != c^2");
  return finish("k3_pythagorean", 3, {c, -c}, {a, -a, b, -b});
}

Candidate k3_partial(const Rational& p, const Rational& q, const Rational& r, const Rational& s) {
  Rational x1 = p * q - p * r + q * r - (p - q - r) * s;
  Rational x2 = -p * q + p * r + q * r + (p - q + r) * s;
  Rational y1 = p * q + p * r - q * r + (p - q + r) * s;
  Rational y2 = p * q - p * r + q * r + (p + q - r) * s;
  Rational y3 = -p * q + p * r + q * r - (p - q - r) * s;
  Rational y4 = -p * q - p * r + q * r - (p + q - r) * s;
  return Candidate(3, {x1, x2}, {y1, y2, y3, y4});
}

Quadratic k3_quadratic_in_s(const Integer& p, const Integer& q, const Integer& r) {
  Integer lead = p + q - r;
  Integer constant = p * q + p * r - q * r;
  return Quadratic{
      2 * lead * lead,
      12 * p * p * q - 4 * p * p * r - 4 * p * q * q - 4 * p * q * r + 4 * p * r * r + 4 * q * q * r -
          4 * q * r * r,
      2 * constant * constant,
  };
}

std::vector<Rational> k3_solve_s_roots(const Integer& p, const Integer& q, const Integer& r) {
  auto [a, b, c] = k3_quadratic_in_s(p, q, r);
  if (a == 0) {
    if (b == 0) return {};
    return {make_rational(-c, b)};
  }
  auto root = exact_sqrt(Integer(b * b - 4 * a * c));
  if (!root) return {};
  Rational first = make_rational(-b + *root, 2 * a);
  Rational second = make_rational(-b - *root, 2 * a);
  if (first == second) return {first};
  return {first, second};
}

std::optional<Rational> k3_solve_s(const Integer& p, const Integer& q, const Integer& r) {
  auto roots = k3_solve_s_roots(p, q, r);
  if (roots.empty()) return std::nullopt;
  return roots.front();
}

Generated k3_family(const Integer& p, const Integer& q) {
  if (p == 0 && q == 0) throw PreconditionError("k3_family: (p, q) must not both be zero");
  Integer p2 = p * p, q2 = q * q;
  Integer p3 = p2 * p, q3 = q2 * q;
  Integer p4 = p2 * p2, q4 = q2 * q2;
  Integer x1 = (3 * p4 - 2 * p3 * q - p2 * q2 + q4) * q;
  Integer x2 = (p4 - p2 * q2 - 2 * p * q3 + 3 * q4) * p;
  Integer y1 = (p4 - p2 * q2 + 2 * p * q3 - q4) * p;
  Integer y2 = 2 * p * q * (p - q) * (p2 - p * q - q2);
  Integer y3 = -(p4 - 2 * p3 * q + p2 * q2 - q4) * q;
  Integer y4 = 2 * p * q * (p - q) * (p2 + p * q - q2);
  return finish("k3_family", 3, {x1, x2}, {y1, y2, y3, y4});
}

Candidate k4_raw(const Rational& u, const Rational& v, const Rational& w) {
  Rational uv4 = 4 * u * v;
  Rational tail = -8 * u * u + 8 * u * v + 4 * u;
  return Candidate(4, {uv4 + w + 1, -uv4 + w - 1, tail - 2},
                   {4 * u - 2, -4 * u, uv4 + w - 1, -uv4 + w + 1, tail});
}

Rational k4_w(const Rational& u, const Rational& v) {
  if (v == 0) throw PreconditionError("k4_w: v must be nonzero");
  Rational numerator = 4 * u * u * u - 8 * u * u * v + 4 * u * v * v - 4 * u * u + 4 * u * v + u - v;
  return numerator / v;
}

Rational k4_quartic(const Rational& u) {
  return -32 * pow(u, 4) + 32 * pow(u, 3) + 24 * u * u - 16 * u + 1;
}

std::vector<Rational> k4_v_candidates(const Rational& u, const Rational& t) {
  if (t * t != k4_quartic(u)) throw PreconditionError("k4_v_candidates: (u, t) is not on the quartic");
  if (u == 0) throw DegenerateError("k4_v_candidates: u = 0 gives only trivial solutions");
  if (2 * u - 1 == 0) throw DegenerateError("k4_v_candidates: u = 1/2 gives only trivial solutions");
  Rational base = (4 * u - 1) * (4 * u - 1);
  Rational first = (base + t) / (24 * u);
  Rational second = (base - t) / (24 * u);
  return {first, second};
}

Generated k5_family1(const Integer& m, const Integer& n) {
  if (m == 0 && n == 0) throw PreconditionError("k5_family1: (m, n) must not both be zero");
  Integer h = m * m + m * n + n * n;
  return finish("k5_family1", 5, {h, h, -h, -h},
                {m * m - n * n, -m * m - 2 * m * n, 2 * m * n + n * n, -2 * m * n - n * n, m * m + 2 * m * n,
                 -m * m + n * n});
}

Generated k5_family2(const Integer& m, const Integer& n) {
  if (m == 0 && n == 0) throw PreconditionError("k5_family2: (m, n) must not both be zero");
  Integer h = m * m + m * n + n * n;
  return finish("k5_family2", 5, {3 * h, 2 * h, -h, 2 * h},
                {3 * m * m + 3 * m * n, -3 * m * n, 3 * m * n + 3 * n * n, 2 * m * m - m * n - n * n,
                 2 * m * m + 5 * m * n + 2 * n * n, -m * m - m * n + 2 * n * n});
}

TEPair k5_symmetric_raw(const Integer& m, const Integer& n, const Integer& x, const Integer& y) {
  Integer x1 = (m + 2 * n) * x - (m - n) * y;
  Integer x2 = -(2 * m + n) * x - (m + 2 * n) * y;
  Integer x3 = (m - n) * x + (2 * m + n) * y;
  Integer y1 = (m - n) * x - (m + 2 * n) * y;
  Integer y2 = -(2 * m + n) * x - (m - n) * y;
  Integer y3 = (m + 2 * n) * x + (2 * m + n) * y;
  return TEPair{5, {x1, x2, x3, -x3, -x2, -x1}, {y1, y2, y3, -y3, -y2, -y1}};
}

Rational k5_quartic(const Rational& u) {
  return 9 * pow(u, 4) - 72 * pow(u, 3) + 24 * u * u + 96 * u - 48;
}

Rational k5_quartic_defect(const Rational& u, const Rational& v) { return k5_quartic(u) - v * v; }

Candidate k5_ec_raw(const Rational& u, const Rational& v) {
  Rational u2 = u * u, u3 = u2 * u, u4 = u3 * u, u5 = u4 * u;
  Rational v2 = v * v;
  Rational x1 = u * v2 + (6 * u3 - 12 * u2 + 32 * u - 32) * v + 9 * u5 - 36 * u4 - 336 * u2 + 96 * u3 + 240 * u;
  Rational x2 = (2 * u - 2) * v2 + (12 * u3 - 48 * u2 + 40 * u - 16) * v + 18 * u5 - 126 * u4 - 288 * u2 +
                264 * u3 + 96;
  Rational y1 = (2 * u - 2) * v2 + (12 * u3 - 48 * u2 + 48 * u) * v + 18 * u5 - 126 * u4 - 144 * u2 +
                288 * u3 + 96 * u - 96;
  Rational y2 = u * v2 + (6 * u3 - 12 * u2 - 32 * u + 32) * v + 9 * u5 - 36 * u4 + 240 * u2 - 96 * u3 - 144 * u;
  Rational y3 = 2 * v2 + (24 * u2 - 40 * u + 16) * v + 54 * u4 - 264 * u3 + 96 * u + 192 * u2 - 96;
  // The rhs pairs as y4 = -y3, y5 = -y2, y6 = -y1 so odd powers cancel.
  return Candidate(5, {x1, x2, -x1, -x2}, {y1, y2, y3, -y3, -y2, -y1});
}

}  // namespace multigrade
