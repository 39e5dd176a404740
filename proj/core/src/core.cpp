#include "multigrade/core.hpp"

#include <algorithm>
#include <functional>
#include <utility>

namespace multigrade {

namespace {

bool lex_less(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void sort_descending(std::vector<Integer>& terms) {
  std::sort(terms.begin(), terms.end(), std::greater<>());
}

std::vector<Integer> negate_all(const std::vector<Integer>& terms) {
  std::vector<Integer> out;
  out.reserve(terms.size());
  for (const auto& t : terms) out.push_back(-t);
  return out;
}

// Sorted sides, equal-length sides ordered lhs >= rhs.
Solution sorted_form(unsigned k, std::vector<Integer> lhs, std::vector<Integer> rhs) {
  sort_descending(lhs);
  sort_descending(rhs);
  if (lhs.size() == rhs.size() && lex_less(lhs, rhs)) std::swap(lhs, rhs);
  return Solution(k, std::move(lhs), std::move(rhs));
}

bool form_less(const Solution& a, const Solution& b) {
  if (a.lhs() != b.lhs()) return lex_less(a.lhs(), b.lhs());
  return lex_less(a.rhs(), b.rhs());
}

}  // namespace

SystemShape SystemShape::make(unsigned k, std::size_t s1, std::size_t s2) {
  if (k < 1) throw PreconditionError("degree k must be at least 1");
  if (s1 < 1 || s2 < 1) throw PreconditionError("both sides need at least one term");
  if (s1 > s2) std::swap(s1, s2);
  return SystemShape{k, s1, s2};
}

Solution::Solution(unsigned k, std::vector<Integer> lhs, std::vector<Integer> rhs)
    : lhs_(std::move(lhs)), rhs_(std::move(rhs)) {
  if (lhs_.size() > rhs_.size()) std::swap(lhs_, rhs_);
  shape_ = SystemShape::make(k, lhs_.size(), rhs_.size());
}

Solution Solution::negated() const { return Solution(k(), negate_all(lhs_), negate_all(rhs_)); }

bool operator==(const Solution& a, const Solution& b) {
  return a.shape_ == b.shape_ && a.lhs_ == b.lhs_ && a.rhs_ == b.rhs_;
}

bool operator<(const Solution& a, const Solution& b) {
  if (a.k() != b.k()) return a.k() < b.k();
  if (a.shape_.s1 != b.shape_.s1) return a.shape_.s1 < b.shape_.s1;
  if (a.shape_.s2 != b.shape_.s2) return a.shape_.s2 < b.shape_.s2;
  return form_less(a, b);
}

Integer power_sum(std::span<const Integer> terms, unsigned r) {
  Integer total = 0;
  Integer term_power;
  for (const auto& t : terms) {
    mpz_pow_ui(term_power.get_mpz_t(), t.get_mpz_t(), r);
    total += term_power;
  }
  return total;
}

std::vector<unsigned> holding_exponents(unsigned k, std::span<const Integer> lhs,
                                        std::span<const Integer> rhs) {
  std::vector<unsigned> out;
  for (unsigned r = 1; r <= k; ++r) {
    if (power_sum(lhs, r) == power_sum(rhs, r)) out.push_back(r);
  }
  return out;
}

bool verify(const Solution& sol) {
  for (unsigned r = 1; r <= sol.k(); ++r) {
    if (power_sum(sol.lhs(), r) != power_sum(sol.rhs(), r)) return false;
  }
  return true;
}

bool verify(const TEPair& te) {
  if (te.k < 1 || te.a.size() != te.b.size()) return false;
  for (unsigned r = 1; r <= te.k; ++r) {
    if (power_sum(te.a, r) != power_sum(te.b, r)) return false;
  }
  return true;
}

bool is_trivial(const Solution& sol) {
  std::vector<Integer> shorter = sol.lhs();
  std::vector<Integer> longer = sol.rhs();
  std::size_t padding = longer.size() - shorter.size();
  for (std::size_t removed = 0; removed < padding; ++removed) {
    auto zero = std::find(longer.begin(), longer.end(), 0);
    if (zero == longer.end()) return false;
    longer.erase(zero);
  }
  std::sort(shorter.begin(), shorter.end());
  std::sort(longer.begin(), longer.end());
  return shorter == longer;
}

Solution normalize(const Solution& sol) {
  if (!verify(sol)) throw PreconditionError("normalize: solution does not verify");

  Integer divisor = 0;
  Integer largest = 0;
  for (const auto* side : {&sol.lhs(), &sol.rhs()}) {
    for (const auto& t : *side) {
      if (t == 0) continue;
      divisor = gcd(divisor, t);
      if (abs(t) > largest) largest = abs(t);
    }
  }
  if (divisor == 0) throw DegenerateError("normalize: all terms are zero");

  std::vector<Integer> lhs;
  std::vector<Integer> rhs;
  for (const auto& t : sol.lhs()) lhs.push_back(t / divisor);
  for (const auto& t : sol.rhs()) rhs.push_back(t / divisor);
  largest /= divisor;

  bool has_pos = false;
  bool has_neg = false;
  for (const auto* side : {&lhs, &rhs}) {
    for (const auto& t : *side) {
      if (t == largest) has_pos = true;
      if (t == -largest) has_neg = true;
    }
  }

  Solution plain = sorted_form(sol.k(), lhs, rhs);
  if (has_pos && !has_neg) return plain;
  Solution flipped = sorted_form(sol.k(), negate_all(lhs), negate_all(rhs));
  if (has_neg && !has_pos) return flipped;
  return form_less(plain, flipped) ? flipped : plain;
}

TEPair frolov_shift(const TEPair& te, const Integer& d) {
  if (!verify(te)) throw PreconditionError("frolov_shift: input pair does not verify");
  TEPair out{te.k, te.a, te.b};
  for (auto& t : out.a) t += d;
  for (auto& t : out.b) t += d;
  if (!verify(out)) throw Error("frolov_shift: shifted pair failed verification");
  return out;
}

Solution drop_zeros(const TEPair& te) {
  std::vector<Integer> a;
  std::vector<Integer> b;
  std::copy_if(te.a.begin(), te.a.end(), std::back_inserter(a), [](const Integer& t) { return t != 0; });
  std::copy_if(te.b.begin(), te.b.end(), std::back_inserter(b), [](const Integer& t) { return t != 0; });
  if (a.empty() || b.empty()) throw DegenerateError("drop_zeros: a side has only zero terms");
  return Solution(te.k, std::move(a), std::move(b));
}

ShapeBounds shape_lower_bounds(unsigned k) {
  if (k < 1) throw PreconditionError("degree k must be at least 1");
  if (k <= 3) return {k + 1, 1, k + 2};
  return {k + 1, 2, k + 3};
}

std::vector<SystemShape> admissible_shapes(unsigned k, std::size_t total) {
  ShapeBounds bounds = shape_lower_bounds(k);
  std::vector<SystemShape> out;
  for (std::size_t s1 = bounds.min_side_min; 2 * s1 <= total; ++s1) {
    std::size_t s2 = total - s1;
    if (s2 >= bounds.max_side_min) out.push_back(SystemShape::make(k, s1, s2));
  }
  return out;
}

}  // namespace multigrade
