#include "multigrade/search.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <set>
#include <string>
#include <thread>

#include "multigrade/serialize.hpp"

namespace multigrade {

namespace {

__extension__ typedef __int128 Wide;
using Index = std::uint16_t;

constexpr unsigned kMaxDegree = 16;
// Largest left-side table Automatic will build, and the hard ceiling for any table.
constexpr std::size_t kAutoTableLimit = 4'000'000;
constexpr std::size_t kMaxTableEntries = 60'000'000;

// The box [-height, height] (optionally without 0) with cached powers.
struct Box {
  unsigned k = 1;
  std::size_t s1 = 1;
  std::size_t s2 = 1;
  Wide height = 1;
  std::vector<std::int64_t> values;  // strictly descending
  std::vector<std::vector<Wide>> powers;  // powers[r][i] = values[i]^r

  Wide power(unsigned r, Index i) const { return powers[r][i]; }
};

Box make_box(const SearchSpec& spec) {
  const SystemShape& shape = spec.shape;
  if (spec.height < 1) throw PreconditionError("search height must be at least 1");
  if (shape.k < 1 || shape.k > kMaxDegree) {
    throw PreconditionError("search supports 1 <= k <= " + std::to_string(kMaxDegree));
  }
  if (2 * spec.height + 1 > 0xFFFF) throw PreconditionError("search height too large");
  // Power sums are carried in 128-bit integers.
  Integer worst = Integer(static_cast<unsigned long>(shape.s2 + 1)) *
                  pow(Integer(static_cast<long>(spec.height)), shape.k);
  if (mpz_sizeinbase(worst.get_mpz_t(), 2) > 120) {
    throw PreconditionError("height^k too large for exact fixed-width search");
  }

  Box box;
  box.k = shape.k;
  box.s1 = shape.s1;
  box.s2 = shape.s2;
  box.height = spec.height;
  for (std::int64_t v = spec.height; v >= -spec.height; --v) {
    if (v == 0 && !spec.allow_zero_terms) continue;
    box.values.push_back(v);
  }
  box.powers.assign(box.k + 1, std::vector<Wide>(box.values.size()));
  for (std::size_t i = 0; i < box.values.size(); ++i) {
    Wide p = 1;
    for (unsigned r = 0; r <= box.k; ++r) {
      box.powers[r][i] = p;
      p *= box.values[i];
    }
  }
  return box;
}

// Enumerates non-decreasing index sequences (descending value multisets).
template <class Fn>
void for_each_multiset(std::size_t n_values, std::size_t length, Fn&& fn) {
  std::vector<Index> idx(length, 0);
  while (true) {
    fn(idx);
    std::size_t pos = length;
    while (pos > 0 && idx[pos - 1] + 1U >= n_values) --pos;
    if (pos == 0) return;
    Index next = static_cast<Index>(idx[pos - 1] + 1);
    for (std::size_t j = pos - 1; j < length; ++j) idx[j] = next;
  }
}

// A side and its global negation describe the same solution class; keep the
// lexicographically larger one.
bool keeps_sign(const Box& box, const std::vector<Index>& idx) {
  std::size_t n = idx.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t own = box.values[idx[i]];
    std::int64_t mirrored = -box.values[idx[n - 1 - i]];
    if (own != mirrored) return own > mirrored;
  }
  return true;
}

std::vector<Integer> to_terms(const Box& box, const Index* idx, std::size_t n) {
  std::vector<Integer> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(static_cast<long>(box.values[idx[i]]));
  return out;
}

struct ChunkResult {
  bool ran = false;
  bool complete = false;
  std::uint64_t nodes = 0;
  std::vector<Solution> solutions;
};

// Filters a raw hit and appends its canonical form. normalize() re-verifies
// with arbitrary precision, independent of the fixed-width sums.
void record(const Box& box, const Index* lhs, const Index* rhs, ChunkResult& out) {
  Solution sol(box.k, to_terms(box, lhs, box.s1), to_terms(box, rhs, box.s2));
  if (is_trivial(sol)) return;
  out.solutions.push_back(normalize(sol));
}

void sort_unique(std::vector<Solution>& sols) {
  std::sort(sols.begin(), sols.end());
  sols.erase(std::unique(sols.begin(), sols.end()), sols.end());
}

Wide max_square(const Box& box, Wide cap) { return std::max(cap * cap, box.height * box.height); }

// Right-side DFS against one fixed left side.
class PlainChunk {
 public:
  PlainChunk(const Box& box, const Index* lhs, std::uint64_t cap) : box_(box), lhs_(lhs), cap_(cap) {
    rhs_.resize(box.s2);
    for (unsigned r = 1; r <= box.k; ++r) {
      Wide sum = 0;
      for (std::size_t i = 0; i < box.s1; ++i) sum += box.power(r, lhs[i]);
      remaining_[r] = sum;
    }
  }

  ChunkResult run() {
    descend(0, 0);
    result_.complete = !aborted_;
    result_.nodes = nodes_;
    sort_unique(result_.solutions);
    return std::move(result_);
  }

 private:
  void descend(std::size_t pos, Index first) {
    if (++nodes_ > cap_) {
      aborted_ = true;
      return;
    }
    const auto m = static_cast<Wide>(box_.s2 - pos);
    if (m == 0) {
      for (unsigned r = 1; r <= box_.k; ++r) {
        if (remaining_[r] != 0) return;
      }
      record(box_, lhs_, rhs_.data(), result_);
      return;
    }
    const Wide top = box_.values[first];
    const Wide r1 = remaining_[1];
    if (r1 > m * top || r1 < -m * box_.height) return;
    if (box_.k >= 2) {
      const Wide r2 = remaining_[2];
      if (r2 < 0 || r2 > m * max_square(box_, top) || r1 * r1 > m * r2) return;
      for (unsigned r = 4; r <= box_.k; r += 2) {
        if (remaining_[r] < 0) return;
      }
    }
    for (std::size_t i = first; i < box_.values.size(); ++i) {
      // The remaining m terms are all <= this one, so it must carry its share of r1.
      if (static_cast<Wide>(box_.values[i]) * m < r1) break;
      const auto idx = static_cast<Index>(i);
      rhs_[pos] = idx;
      for (unsigned r = 1; r <= box_.k; ++r) remaining_[r] -= box_.power(r, idx);
      descend(pos + 1, idx);
      for (unsigned r = 1; r <= box_.k; ++r) remaining_[r] += box_.power(r, idx);
      if (aborted_) return;
    }
  }

  const Box& box_;
  const Index* lhs_;
  std::uint64_t cap_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::vector<Index> rhs_;
  Wide remaining_[kMaxDegree + 1] = {};
  ChunkResult result_;
};

// Left-side power-sum vectors, sorted for binary search.
struct SideTable {
  std::size_t entries = 0;
  std::vector<Wide> keys;     // entries * k, row-major
  std::vector<Index> sides;   // entries * s1
  std::vector<std::uint32_t> order;
  Wide min1 = 0, max1 = 0, min2 = 0, max2 = 0;

  const Wide* key(std::uint32_t row, unsigned k) const { return keys.data() + std::size_t{row} * k; }
};

SideTable build_table(const Box& box) {
  SideTable table;
  for_each_multiset(box.values.size(), box.s1, [&](const std::vector<Index>& idx) {
    if (!keeps_sign(box, idx)) return;
    if (table.entries >= kMaxTableEntries) throw PreconditionError("meet-in-the-middle table too large");
    for (unsigned r = 1; r <= box.k; ++r) {
      Wide sum = 0;
      for (Index i : idx) sum += box.power(r, i);
      table.keys.push_back(sum);
    }
    table.sides.insert(table.sides.end(), idx.begin(), idx.end());
    ++table.entries;
  });
  table.order.resize(table.entries);
  std::iota(table.order.begin(), table.order.end(), 0U);
  const unsigned k = box.k;
  std::sort(table.order.begin(), table.order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return std::lexicographical_compare(table.key(a, k), table.key(a, k) + k, table.key(b, k), table.key(b, k) + k);
  });
  if (table.entries > 0) {
    table.min1 = table.max1 = table.key(0, k)[0];
    if (k >= 2) table.min2 = table.max2 = table.key(0, k)[1];
    for (std::uint32_t row = 0; row < table.entries; ++row) {
      const Wide* key = table.key(row, k);
      table.min1 = std::min(table.min1, key[0]);
      table.max1 = std::max(table.max1, key[0]);
      if (k >= 2) {
        table.min2 = std::min(table.min2, key[1]);
        table.max2 = std::max(table.max2, key[1]);
      }
    }
  }
  return table;
}

// Right sides whose largest term is values[first], probed against the table.
class TableChunk {
 public:
  TableChunk(const Box& box, const SideTable& table, std::uint64_t cap) : box_(box), table_(table), cap_(cap) {
    rhs_.resize(box.s2);
  }

  ChunkResult run(Index first) {
    if (table_.entries > 0) place(0, first);
    result_.complete = !aborted_;
    result_.nodes = nodes_;
    sort_unique(result_.solutions);
    return std::move(result_);
  }

 private:
  void place(std::size_t pos, Index idx) {
    rhs_[pos] = idx;
    for (unsigned r = 1; r <= box_.k; ++r) partial_[r] += box_.power(r, idx);
    descend(pos + 1, idx);
    for (unsigned r = 1; r <= box_.k; ++r) partial_[r] -= box_.power(r, idx);
  }

  void descend(std::size_t pos, Index first) {
    if (++nodes_ > cap_) {
      aborted_ = true;
      return;
    }
    const auto m = static_cast<Wide>(box_.s2 - pos);
    if (m == 0) {
      probe();
      return;
    }
    const Wide top = box_.values[first];
    const Wide p1 = partial_[1];
    if (p1 + m * top < table_.min1 || p1 - m * box_.height > table_.max1) return;
    if (box_.k >= 2) {
      const Wide p2 = partial_[2];
      if (p2 > table_.max2 || p2 + m * max_square(box_, top) < table_.min2) return;
    }
    for (std::size_t i = first; i < box_.values.size(); ++i) {
      if (p1 + static_cast<Wide>(box_.values[i]) * m < table_.min1) break;
      place(pos, static_cast<Index>(i));
      if (aborted_) return;
    }
  }

  void probe() {
    const unsigned k = box_.k;
    const Wide* want = partial_ + 1;
    auto less_key = [&](std::uint32_t row, const Wide* key) {
      return std::lexicographical_compare(table_.key(row, k), table_.key(row, k) + k, key, key + k);
    };
    auto it = std::lower_bound(table_.order.begin(), table_.order.end(), want, less_key);
    for (; it != table_.order.end() && std::equal(want, want + k, table_.key(*it, k)); ++it) {
      record(box_, table_.sides.data() + std::size_t{*it} * box_.s1, rhs_.data(), result_);
    }
  }

  const Box& box_;
  const SideTable& table_;
  std::uint64_t cap_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::vector<Index> rhs_;
  Wide partial_[kMaxDegree + 1] = {};
  ChunkResult result_;
};

Integer multiset_count(std::size_t n_values, std::size_t length) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n_values + length - 1, length);
  return out;
}

// Runs chunks on a pool. Workers take chunks in index order and stop taking new
// ones once the finished chunks exceed the budget or reach the limit, so the
// finished set is always a prefix that covers everything merge() will read.
template <class Fn>
std::vector<ChunkResult> run_chunks(std::size_t count, const SearchSpec& spec, std::uint64_t base_nodes, Fn&& fn) {
  std::vector<ChunkResult> results(count);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{base_nodes > spec.node_budget};
  std::mutex mu;
  std::uint64_t finished_nodes = base_nodes;
  std::set<Solution> seen;

  auto worker = [&] {
    while (!stop.load()) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      ChunkResult r = fn(i, spec.node_budget);
      r.ran = true;
      std::lock_guard lock(mu);
      finished_nodes += r.nodes;
      if (!r.complete || finished_nodes > spec.node_budget) stop = true;
      if (spec.limit) {
        seen.insert(r.solutions.begin(), r.solutions.end());
        if (seen.size() >= *spec.limit) stop = true;
      }
      results[i] = std::move(r);
    }
  };

  unsigned threads = spec.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : spec.threads;
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return results;
}

// Sequential replay of the chunk results in index order.
void merge(const std::vector<ChunkResult>& results, std::uint64_t base_nodes, SearchReport& report) {
  const SearchSpec& spec = report.spec;
  report.nodes_visited = base_nodes;
  report.exhaustive = base_nodes <= spec.node_budget;
  if (spec.limit && *spec.limit == 0) report.exhaustive = false;
  std::set<Solution> found;
  for (std::size_t i = 0; report.exhaustive && i < results.size(); ++i) {
    const ChunkResult& r = results[i];
    if (!r.ran) {
      report.exhaustive = false;
      break;
    }
    report.nodes_visited += r.nodes;
    if (!r.complete || report.nodes_visited > spec.node_budget) {
      report.exhaustive = false;
      break;
    }
    for (std::size_t j = 0; j < r.solutions.size(); ++j) {
      found.insert(r.solutions[j]);
      if (spec.limit && found.size() >= *spec.limit) {
        bool rest_empty = j + 1 == r.solutions.size() && i + 1 == results.size();
        if (!rest_empty) report.exhaustive = false;
        i = results.size();
        break;
      }
    }
  }
  report.solutions.assign(found.begin(), found.end());
}

}  // namespace

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::Automatic:
      return "auto";
    case Strategy::Plain:
      return "plain";
    case Strategy::MeetInTheMiddle:
      return "mitm";
  }
  return "auto";
}

Strategy parse_strategy(std::string_view text) {
  if (text == "auto") return Strategy::Automatic;
  if (text == "plain") return Strategy::Plain;
  if (text == "mitm" || text == "meet-in-the-middle") return Strategy::MeetInTheMiddle;
  throw PreconditionError("unknown search strategy '" + std::string(text) + "'");
}

SearchReport exhaustive_search(const SearchSpec& spec) {
  const Box box = make_box(spec);
  SearchReport report;
  report.spec = spec;

  Strategy strategy = spec.strategy;
  if (strategy == Strategy::Automatic) {
    bool fits = multiset_count(box.values.size(), box.s1) <= 2 * kAutoTableLimit;
    strategy = fits ? Strategy::MeetInTheMiddle : Strategy::Plain;
  }
  report.strategy_used = strategy;

  if (strategy == Strategy::Plain) {
    std::vector<Index> sides;
    std::size_t count = 0;
    for_each_multiset(box.values.size(), box.s1, [&](const std::vector<Index>& idx) {
      if (!keeps_sign(box, idx)) return;
      sides.insert(sides.end(), idx.begin(), idx.end());
      ++count;
    });
    auto results = run_chunks(count, spec, 0, [&](std::size_t i, std::uint64_t cap) {
      return PlainChunk(box, sides.data() + i * box.s1, cap).run();
    });
    merge(results, 0, report);
  } else {
    const SideTable table = build_table(box);
    const std::uint64_t base = table.entries;
    auto results = run_chunks(box.values.size(), spec, base, [&](std::size_t i, std::uint64_t cap) {
      return TableChunk(box, table, cap).run(static_cast<Index>(i));
    });
    merge(results, base, report);
  }
  return report;
}

Discriminant k3_discriminant(const Integer& y1, const Integer& y2) {
  Integer value = -(3 * y1 * y1 + 2 * y1 * y2 + 3 * y2 * y2) * y1 * y1 * y2 * y2;
  bool square = exact_sqrt(value).has_value();
  return Discriminant{std::move(value), square};
}

ImpossibilityAudit k3_impossibility_report(std::int64_t height, unsigned threads) {
  if (height < 1) throw PreconditionError("audit height must be at least 1");
  ImpossibilityAudit audit;
  audit.discriminant_clear = true;
  for (std::int64_t a = -height; a <= height && audit.discriminant_clear; ++a) {
    for (std::int64_t b = -height; b <= height; ++b) {
      if (a == 0 || b == 0) continue;
      if (k3_discriminant(Integer(static_cast<long>(a)), Integer(static_cast<long>(b))).is_square) {
        audit.discriminant_clear = false;
        break;
      }
    }
  }
  SearchSpec spec;
  spec.shape = SystemShape::make(3, 1, 4);
  spec.height = height;
  spec.threads = threads;
  audit.search = exhaustive_search(spec);
  return audit;
}

bool k3_impossibility_audit(std::int64_t height, unsigned threads) {
  return k3_impossibility_report(height, threads).passed();
}

SearchReport beta4_window_search(std::int64_t height, Strategy strategy, unsigned threads) {
  auto shapes = admissible_shapes(4, shape_lower_bounds(4).total_min);
  SearchReport combined;
  combined.exhaustive = true;
  bool first = true;
  for (const auto& shape : shapes) {
    SearchSpec spec;
    spec.shape = shape;
    spec.height = height;
    spec.strategy = strategy;
    spec.threads = threads;
    SearchReport r = exhaustive_search(spec);
    if (first) {
      combined.spec = r.spec;
      combined.strategy_used = r.strategy_used;
      first = false;
    }
    combined.nodes_visited += r.nodes_visited;
    combined.exhaustive = combined.exhaustive && r.exhaustive;
    combined.solutions.insert(combined.solutions.end(), r.solutions.begin(), r.solutions.end());
  }
  sort_unique(combined.solutions);
  return combined;
}

nlohmann::json to_json(const SearchSpec& spec, Strategy strategy_used) {
  nlohmann::json doc = {
      {"k", spec.shape.k},
      {"s1", spec.shape.s1},
      {"s2", spec.shape.s2},
      {"height", spec.height},
      {"allow_zero_terms", spec.allow_zero_terms},
      {"strategy", std::string(to_string(strategy_used))},
      {"node_budget", spec.node_budget},
  };
  doc["limit"] = spec.limit ? nlohmann::json(*spec.limit) : nlohmann::json(nullptr);
  return doc;
}

nlohmann::json to_json(const SearchReport& report) {
  auto solutions = nlohmann::json::array();
  for (const auto& sol : report.solutions) solutions.push_back(to_json(sol));
  return {
      {"spec", to_json(report.spec, report.strategy_used)},
      {"exhaustive", report.exhaustive},
      {"nodes", report.nodes_visited},
      {"solutions", std::move(solutions)},
  };
}

}  // namespace multigrade
