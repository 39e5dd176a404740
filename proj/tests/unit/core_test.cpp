#include <doctest.h>

#include "multigrade/core.hpp"
#include "test_support.hpp"

using namespace multigrade;
using multigrade::testing::Sampler;
using multigrade::testing::sol;
using multigrade::testing::terms;

TEST_CASE("power_sum evaluates exactly") {
  CHECK(power_sum(terms({2, 2, -1}), 2) == 9);
  CHECK(power_sum(std::vector<Integer>{}, 5) == 0);
  CHECK(power_sum(terms({29, 22}), 3) == 35037);
  // 2^200 does not fit anywhere but here.
  CHECK(power_sum(terms({2}), 200) == pow(Integer(2), 200));
}

TEST_CASE("power_sum is additive over concatenation") {
  Sampler rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Integer> a, b;
    for (long i = rng.integer(0, 5); i > 0; --i) a.emplace_back(rng.integer(-1000, 1000));
    for (long i = rng.integer(0, 5); i > 0; --i) b.emplace_back(rng.integer(-1000, 1000));
    std::vector<Integer> both = a;
    both.insert(both.end(), b.begin(), b.end());
    unsigned r = static_cast<unsigned>(rng.integer(1, 9));
    CHECK(power_sum(both, r) == power_sum(a, r) + power_sum(b, r));
  }
}

TEST_CASE("shapes and solutions keep the shorter side on the left") {
  auto shape = SystemShape::make(3, 4, 2);
  CHECK(shape.s1 == 2);
  CHECK(shape.s2 == 4);
  CHECK_THROWS_AS(SystemShape::make(0, 1, 1), PreconditionError);
  CHECK_THROWS_AS(SystemShape::make(2, 0, 3), PreconditionError);

  Solution s = sol(3, {30, 4, -3, 20}, {29, 22});
  CHECK(s.lhs() == terms({29, 22}));
  CHECK(s.shape() == SystemShape{3, 2, 4});
}

TEST_CASE("verify") {
  CHECK(verify(sol(3, {29, 22}, {30, 4, -3, 20})));
  CHECK(verify(sol(5, {21, 14, -7, 14}, {18, -6, 9, 5, 20, -4})));
  CHECK_FALSE(verify(sol(3, {29, 22}, {30, 4, -3, 21})));
  CHECK(holding_exponents(3, terms({2, 2}), terms({2, 2, 2, -2})) == std::vector<unsigned>{1, 3});
}

TEST_CASE("is_trivial") {
  CHECK(is_trivial(sol(4, {5}, {5, 0, 0})));
  CHECK_FALSE(is_trivial(sol(3, {29, 22}, {30, 4, -3, 20})));
  CHECK(is_trivial(sol(4, {2, -4, -2}, {2, -4, 0, -2, 0})));
  // Too few zeros on the long side.
  CHECK_FALSE(is_trivial(sol(2, {3, 1}, {3, 1, 1})));
  // Zeros beyond the quota must be matched on the short side.
  CHECK(is_trivial(sol(2, {3, 0}, {0, 3, 0, 0})));
  CHECK_FALSE(is_trivial(sol(2, {3, 1}, {0, 3, 0, 0})));
  // Equal sizes: trivial means a permutation.
  CHECK(is_trivial(sol(3, {1, 2, 3}, {3, 1, 2})));
}

TEST_CASE("is_trivial ignores the order within each side") {
  Sampler rng(5);
  const Solution cases[] = {
      sol(4, {2, -4, -2}, {2, -4, 0, -2, 0}),
      sol(3, {29, 22}, {30, 4, -3, 20}),
      sol(2, {7, 0}, {0, 7, 0}),
      sol(5, {21, 14, -7, 14}, {18, -6, 9, 5, 20, -4}),
  };
  for (const auto& base : cases) {
    for (int trial = 0; trial < 20; ++trial) {
      auto lhs = base.lhs();
      auto rhs = base.rhs();
      rng.shuffle(lhs);
      rng.shuffle(rhs);
      CHECK(is_trivial(Solution(base.k(), lhs, rhs)) == is_trivial(base));
    }
  }
}

TEST_CASE("normalize divides by the gcd and sorts") {
  CHECK(normalize(sol(3, {58, 44}, {60, 8, -6, 40})) == sol(3, {29, 22}, {30, 20, 4, -3}));
  CHECK(normalize(sol(2, {3}, {2, 2, -1})) == sol(2, {3}, {2, 2, -1}));
  CHECK_THROWS_AS(normalize(sol(1, {0}, {0, 0})), DegenerateError);
  CHECK_THROWS_AS(normalize(sol(3, {29, 22}, {30, 4, -3, 21})), PreconditionError);
}

TEST_CASE("normalize fixes the global sign") {
  // Negation is a symmetry: both sides pick up (-1)^r.
  Solution known = sol(4, {-74, 124, 78}, {126, -72, -20, 70, 24});
  REQUIRE(verify(known.negated()));
  CHECK(normalize(known.negated()) == normalize(known));
  CHECK(normalize(known) == sol(4, {62, 39, -37}, {63, 35, 12, -10, -36}));
  // +m and -m both present: lexicographically larger sign choice wins.
  CHECK(normalize(sol(1, {0}, {1, -1})) == sol(1, {0}, {1, -1}));
  // Equal side counts are ordered lhs >= rhs.
  CHECK(normalize(sol(2, {1, 5, 6}, {2, 3, 7})) == sol(2, {7, 3, 2}, {6, 5, 1}));
}

TEST_CASE("normalize is idempotent and preserves verification") {
  Sampler rng(17);
  const Solution seeds[] = {
      sol(3, {29, 22}, {30, 4, -3, 20}),
      sol(5, {21, 14, -7, 14}, {18, -6, 9, 5, 20, -4}),
      sol(2, {3}, {2, 2, -1}),
      sol(4, {-74, 124, 78}, {126, -72, -20, 70, 24}),
  };
  for (const auto& seed : seeds) {
    for (int trial = 0; trial < 25; ++trial) {
      long scale = rng.integer(-40, 40);
      if (scale == 0) continue;
      std::vector<Integer> lhs, rhs;
      for (const auto& t : seed.lhs()) lhs.push_back(t * scale);
      for (const auto& t : seed.rhs()) rhs.push_back(t * scale);
      rng.shuffle(lhs);
      rng.shuffle(rhs);
      Solution scaled(seed.k(), lhs, rhs);
      REQUIRE(verify(scaled));
      Solution once = normalize(scaled);
      CHECK(verify(once));
      CHECK(normalize(once) == once);
      CHECK(once == normalize(seed));
    }
  }
}

TEST_CASE("frolov_shift translates a verified pair") {
  TEPair classic{2, terms({1, 5, 6}), terms({2, 3, 7})};
  CHECK(frolov_shift(classic, -1) == TEPair{2, terms({0, 4, 5}), terms({1, 2, 6})});
  CHECK(frolov_shift(classic, 0) == classic);
  CHECK_THROWS_AS(frolov_shift(TEPair{2, terms({1, 5, 6}), terms({2, 3, 8})}, 1), PreconditionError);
}

TEST_CASE("frolov_shift preserves every sampled translation") {
  const TEPair pairs[] = {
      {2, terms({1, 5, 6}), terms({2, 3, 7})},
      {3, terms({0, 4, 7, 11}), terms({1, 2, 9, 10})},
      {5, terms({0, 4, 9, 17, 22, 26}), terms({1, 2, 12, 14, 24, 25})},
  };
  for (const auto& te : pairs) {
    REQUIRE(verify(te));
    for (long d = -60; d <= 60; d += 7) CHECK(verify(frolov_shift(te, d)));
  }
}

TEST_CASE("drop_zeros") {
  Solution s = drop_zeros(TEPair{2, terms({0, 4, 5}), terms({1, 2, 6})});
  CHECK(s.shape() == SystemShape{2, 2, 3});
  CHECK(s.lhs() == terms({4, 5}));
  CHECK(s.rhs() == terms({1, 2, 6}));
  CHECK(verify(s));

  Solution same = drop_zeros(TEPair{2, terms({1, 5, 6}), terms({2, 3, 7})});
  CHECK(same.shape() == SystemShape{2, 3, 3});

  // Zeros on the first side only: sides swap to keep s1 <= s2.
  Solution swapped = drop_zeros(TEPair{2, terms({2, 3, 7}), terms({0, 4, 5}) });
  CHECK(swapped.lhs() == terms({4, 5}));

  CHECK_THROWS_AS(drop_zeros(TEPair{1, terms({0, 0}), terms({1, -1})}), DegenerateError);
}

TEST_CASE("shape_lower_bounds") {
  CHECK(shape_lower_bounds(1) == ShapeBounds{2, 1, 3});
  CHECK(shape_lower_bounds(3) == ShapeBounds{4, 1, 5});
  CHECK(shape_lower_bounds(4) == ShapeBounds{5, 2, 7});
  CHECK(shape_lower_bounds(5) == ShapeBounds{6, 2, 8});
  CHECK_THROWS_AS(shape_lower_bounds(0), PreconditionError);

  auto window = admissible_shapes(4, 7);
  REQUIRE(window.size() == 1);
  CHECK(window[0] == SystemShape{4, 2, 5});
  CHECK(admissible_shapes(3, 5) == std::vector<SystemShape>{SystemShape{3, 1, 4}});
  CHECK(admissible_shapes(4, 6).empty());
}
