#include "multigrade/elliptic.hpp"

#include <algorithm>

#include "multigrade/families.hpp"

namespace multigrade {

Curve::Curve(Integer a, Integer b) : a_(std::move(a)), b_(std::move(b)) {
  if (4 * a_ * a_ * a_ + 27 * b_ * b_ == 0) throw PreconditionError("curve is singular");
}

Curve Curve::k4() { return Curve(-36, 0); }

Curve Curve::k5() { return Curve(-21, -20); }

const Rational& Point::x() const {
  if (!coords_) throw PreconditionError("point at infinity has no affine coordinates");
  return coords_->x;
}

const Rational& Point::y() const {
  if (!coords_) throw PreconditionError("point at infinity has no affine coordinates");
  return coords_->y;
}

Point Point::operator-() const {
  if (!coords_) return Point();
  return Point(coords_->x, -coords_->y);
}

bool operator==(const Point& p, const Point& q) {
  if (p.is_infinity() || q.is_infinity()) return p.is_infinity() == q.is_infinity();
  return p.x() == q.x() && p.y() == q.y();
}

std::string to_string(const Point& p) {
  if (p.is_infinity()) return "O";
  return "(" + to_string(p.x()) + ", " + to_string(p.y()) + ")";
}

bool on_curve(const Curve& c, const Point& p) {
  if (p.is_infinity()) return true;
  const Rational& x = p.x();
  return p.y() * p.y() == x * x * x + c.a() * x + c.b();
}

Point add(const Curve& c, const Point& p, const Point& q) {
  if (!on_curve(c, p) || !on_curve(c, q)) throw PreconditionError("add: point is not on the curve");
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;

  Rational slope;
  if (p.x() == q.x()) {
    // Vertical chord, or tangent at a 2-torsion point.
    if (p.y() != q.y() || p.y() == 0) return Point::infinity();
    slope = (3 * p.x() * p.x() + c.a()) / (2 * p.y());
  } else {
    slope = (q.y() - p.y()) / (q.x() - p.x());
  }
  Rational x = slope * slope - p.x() - q.x();
  Rational y = slope * (p.x() - x) - p.y();
  return Point(std::move(x), std::move(y));
}

Point scalar_mul(const Curve& c, std::uint64_t n, const Point& p) {
  if (n == 0) throw PreconditionError("scalar_mul: n must be positive");
  if (!on_curve(c, p)) throw PreconditionError("scalar_mul: point is not on the curve");
  Point result;
  Point addend = p;
  while (n != 0) {
    if (n & 1U) result = add(c, result, addend);
    n >>= 1U;
    if (n != 0) addend = add(c, addend, addend);
  }
  return result;
}

Point k4_generator() { return Point(-3, 9); }

Point k5_generator() { return Point(-3, 4); }

bool on_quartic(const QuarticParams& q) {
  const Rational& rhs = q.model == QuarticModel::K4 ? k4_quartic(q.u) : k5_quartic(q.u);
  return q.second * q.second == rhs;
}

QuarticParams k4_point_to_uv(const Point& p) {
  if (p.is_infinity()) throw ExceptionalLocus("k4 map: point at infinity");
  const Rational& x = p.x();
  const Rational& y = p.y();
  Rational denom = 4 * x + y - 12;
  if (denom == 0) throw ExceptionalLocus("k4 map: 4X + Y - 12 = 0 at " + to_string(p));
  Rational u = (x - 12) / denom;
  Rational t = (x * x * x - 36 * x * x + 36 * x - 72 * y + 432) / (denom * denom);
  return QuarticParams{QuarticModel::K4, std::move(u), std::move(t)};
}

Point k4_uv_to_point(const QuarticParams& q) {
  if (q.model != QuarticModel::K4) throw PreconditionError("k4 inverse map: wrong quartic model");
  if (q.u == 0) throw ExceptionalLocus("k4 inverse map: u = 0");
  if (!on_quartic(q)) throw PreconditionError("k4 inverse map: (u, t) is not on the quartic");
  const Rational& u = q.u;
  const Rational& t = q.second;
  Rational x = (4 * u * u - 8 * u + t + 1) / (2 * u * u);
  Rational y = (8 * u * u * u + 12 * u * u - 4 * u * t - 12 * u + t + 1) / (2 * u * u * u);
  return Point(std::move(x), std::move(y));
}

QuarticParams k5_point_to_uv(const Point& p) {
  if (p.is_infinity()) throw ExceptionalLocus("k5 map: point at infinity");
  const Rational& x = p.x();
  const Rational& y = p.y();
  if (x == 8) throw ExceptionalLocus("k5 map: X = 8 at " + to_string(p));
  Rational u = (6 * x + 2 * y - 12) / (3 * x - 24);
  Rational v = (4 * x * x * x - 96 * x * x + 84 * x - 144 * y + 832) / (3 * (x - 8) * (x - 8));
  return QuarticParams{QuarticModel::K5, std::move(u), std::move(v)};
}

Point k5_uv_to_point(const QuarticParams& q) {
  if (q.model != QuarticModel::K5) throw PreconditionError("k5 inverse map: wrong quartic model");
  if (!on_quartic(q)) throw PreconditionError("k5 inverse map: (u, v) is not on the quartic");
  const Rational& u = q.u;
  const Rational& v = q.second;
  Rational x = (9 * u * u - 36 * u + 3 * v + 4) / 8;
  Rational y = (27 * u * u * u - 162 * u * u + 9 * u * v + 36 * u - 18 * v + 72) / 16;
  return Point(std::move(x), std::move(y));
}

namespace {

void file_candidate(PipelineReport& report, const Candidate& cand, const std::string& label) {
  if (!cand.holds_all()) {
    report.diagnostics.push_back(label + ": candidate fails the power-sum equations, skipped");
    return;
  }
  if (cand.all_zero()) {
    report.diagnostics.push_back(label + ": all terms zero, skipped");
    return;
  }
  Solution sol = normalize(cand.to_solution());
  if (is_trivial(sol)) {
    report.trivial.push_back(std::move(sol));
  } else {
    report.solutions.push_back(std::move(sol));
  }
}

void sort_unique(std::vector<Solution>& sols) {
  std::sort(sols.begin(), sols.end());
  sols.erase(std::unique(sols.begin(), sols.end()), sols.end());
}

void finalize(PipelineReport& report) {
  sort_unique(report.solutions);
  sort_unique(report.trivial);
}

}  // namespace

PipelineReport k4_solutions_from_point(std::uint64_t n) {
  if (n == 0) throw PreconditionError("k4 pipeline: n must be positive");
  PipelineReport report;
  report.n = n;
  report.point = scalar_mul(Curve::k4(), n, k4_generator());

  QuarticParams params;
  try {
    params = k4_point_to_uv(report.point);
  } catch (const ExceptionalLocus& e) {
    report.diagnostics.emplace_back(e.what());
    return report;
  }
  report.params.push_back(params);

  std::vector<Rational> roots;
  try {
    roots = k4_v_candidates(params.u, params.second);
  } catch (const DegenerateError& e) {
    report.diagnostics.emplace_back(e.what());
    return report;
  }
  for (const auto& v : roots) {
    std::string label = "v = " + to_string(v);
    if (v == 0) {
      report.diagnostics.push_back(label + ": w undefined, skipped");
      continue;
    }
    file_candidate(report, k4_raw(params.u, v, k4_w(params.u, v)), label);
  }
  finalize(report);
  return report;
}

PipelineReport k5_solutions_from_point(std::uint64_t n) {
  if (n == 0) throw PreconditionError("k5 pipeline: n must be positive");
  PipelineReport report;
  report.n = n;
  report.point = scalar_mul(Curve::k5(), n, k5_generator());

  QuarticParams params;
  try {
    params = k5_point_to_uv(report.point);
  } catch (const ExceptionalLocus& e) {
    report.diagnostics.emplace_back(e.what());
    return report;
  }
  report.params.push_back(params);
  if (k5_quartic_defect(params.u, params.second) != 0) {
    report.diagnostics.emplace_back("k5 map produced a point off the quartic");
    return report;
  }
  file_candidate(report, k5_ec_raw(params.u, params.second), "(u, v) = (" + to_string(params.u) + ", " +
                                                                  to_string(params.second) + ")");
  finalize(report);
  return report;
}

}  // namespace multigrade
