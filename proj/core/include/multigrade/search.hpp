#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "multigrade/core.hpp"

namespace multigrade {

enum class Strategy {
  /// Meet-in-the-middle when the left-side table fits, plain enumeration otherwise.
  Automatic,
  /// Enumerate both sides, pruning the right side by partial r = 1, 2 sums.
  Plain,
  /// Table of left-side power-sum vectors, probed by every right side.
  MeetInTheMiddle,
};

std::string_view to_string(Strategy s);
/// "auto", "plain", "mitm" (or "meet-in-the-middle").
Strategy parse_strategy(std::string_view text);

inline constexpr std::uint64_t kDefaultNodeBudget = 1'000'000'000;

struct SearchSpec {
  SystemShape shape;
  /// Every term satisfies |term| <= height.
  std::int64_t height = 1;
  bool allow_zero_terms = true;
  /// Stop after this many distinct solutions.
  std::optional<std::size_t> limit;
  Strategy strategy = Strategy::Automatic;
  /// 0 means one per hardware thread. Does not affect the report.
  unsigned threads = 1;
  std::uint64_t node_budget = kDefaultNodeBudget;
};

struct SearchReport {
  SearchSpec spec;
  /// Never Automatic.
  Strategy strategy_used = Strategy::Plain;
  /// Normalized, nontrivial, sorted and free of duplicates.
  std::vector<Solution> solutions;
  /// True when the whole box was covered (up to side order and global sign).
  bool exhaustive = false;
  std::uint64_t nodes_visited = 0;
};

/// Finds every nontrivial solution of spec.shape with all terms in [-height, height].
///
/// The report depends only on the spec, never on the thread count. When the
/// node budget or the limit cuts the run short, exhaustive is false and the
/// solutions are those found in the covered part of the box.
SearchReport exhaustive_search(const SearchSpec& spec);

struct Discriminant {
  Integer value;
  bool is_square;
};

/// -(3y1^2 + 2y1y2 + 3y2^2) y1^2 y2^2, the discriminant of the k = 3, (1, 4)
/// quadratic in y3, with a perfect-square flag (0 counts as a square).
Discriminant k3_discriminant(const Integer& y1, const Integer& y2);

struct ImpossibilityAudit {
  /// No (y1, y2) with y1*y2 != 0 in the box has a square discriminant.
  bool discriminant_clear = false;
  /// Search for k = 3, shape (1, 4) in the same box.
  SearchReport search;

  bool passed() const { return discriminant_clear && search.exhaustive && search.solutions.empty(); }
};

ImpossibilityAudit k3_impossibility_report(std::int64_t height, unsigned threads = 1);
/// Both checks agree that k = 3 has no nontrivial (1, 4) solution within the box.
bool k3_impossibility_audit(std::int64_t height, unsigned threads = 1);

/// Searches every admissible k = 4 shape with seven terms (only (2, 5)).
SearchReport beta4_window_search(std::int64_t height, Strategy strategy = Strategy::Automatic,
                                 unsigned threads = 1);

nlohmann::json to_json(const SearchSpec& spec, Strategy strategy_used);
nlohmann::json to_json(const SearchReport& report);

}  // namespace multigrade
