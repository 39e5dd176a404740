#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "multigrade/core.hpp"

namespace multigrade {

/// Short Weierstrass curve Y^2 = X^3 + a X + b over the rationals.
class Curve {
 public:
  /// Throws PreconditionError when 4a^3 + 27b^2 == 0.
  Curve(Integer a, Integer b);

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }

  /// Y^2 = X^3 - 36X, the model of the k = 4 quartic.
  static Curve k4();
  /// Y^2 = X^3 - 21X - 20, the model of the k = 5 quartic.
  static Curve k5();

  friend bool operator==(const Curve&, const Curve&) = default;

 private:
  Integer a_;
  Integer b_;
};

/// Affine rational point, or the point at infinity.
class Point {
 public:
  Point() = default;  // infinity
  Point(Rational x, Rational y) : coords_(Coordinates{std::move(x), std::move(y)}) {}

  static Point infinity() { return Point(); }

  bool is_infinity() const { return !coords_.has_value(); }
  /// Affine coordinates; calling these on infinity throws.
  const Rational& x() const;
  const Rational& y() const;

  Point operator-() const;

  friend bool operator==(const Point& p, const Point& q);

 private:
  struct Coordinates {
    Rational x;
    Rational y;
  };
  std::optional<Coordinates> coords_;
};

std::string to_string(const Point& p);

bool on_curve(const Curve& c, const Point& p);

/// Chord-and-tangent addition. Throws PreconditionError for off-curve input.
Point add(const Curve& c, const Point& p, const Point& q);

/// n * p by double-and-add. n >= 1.
Point scalar_mul(const Curve& c, std::uint64_t n, const Point& p);

/// Hardcoded Mordell-Weil generators: (-3, 9) on the k = 4 curve, (-3, 4) on the k = 5 curve.
Point k4_generator();
Point k5_generator();

enum class QuarticModel { K4, K5 };

/// A point (u, second) on one of the two quartics:
///   K4: t^2 = -32u^4 + 32u^3 + 24u^2 - 16u + 1   (second = t)
///   K5: v^2 = 9u^4 - 72u^3 + 24u^2 + 96u - 48     (second = v)
struct QuarticParams {
  QuarticModel model;
  Rational u;
  Rational second;

  friend bool operator==(const QuarticParams&, const QuarticParams&) = default;
};

bool on_quartic(const QuarticParams& q);

/// (X, Y) -> (u, t). Throws ExceptionalLocus when 4X + Y - 12 == 0 or p is infinity.
QuarticParams k4_point_to_uv(const Point& p);
/// (u, t) -> (X, Y). Rejects u == 0 and off-quartic input.
Point k4_uv_to_point(const QuarticParams& q);
/// (X, Y) -> (u, v). Throws ExceptionalLocus when X == 8 or p is infinity.
QuarticParams k5_point_to_uv(const Point& p);
/// (u, v) -> (X, Y). Rejects off-quartic input.
Point k5_uv_to_point(const QuarticParams& q);

/// Everything the n*P pipelines produce, including what they discarded.
struct PipelineReport {
  std::uint64_t n = 0;
  Point point;
  std::vector<QuarticParams> params;
  /// Normalized, nontrivial, sorted, deduplicated.
  std::vector<Solution> solutions;
  /// Normalized candidates that came out trivial.
  std::vector<Solution> trivial;
  /// Human-readable reasons for skipped candidates (exceptional loci etc.).
  std::vector<std::string> diagnostics;
};

/// n*P on Y^2 = X^3 - 36X, mapped to (u, t), both v roots, w, then the k = 4 candidate.
PipelineReport k4_solutions_from_point(std::uint64_t n);
/// n*P on Y^2 = X^3 - 21X - 20, mapped to (u, v), then the k = 5 candidate.
PipelineReport k5_solutions_from_point(std::uint64_t n);

}  // namespace multigrade
