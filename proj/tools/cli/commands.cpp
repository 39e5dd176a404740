#include "cli/commands.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <map>
#include <optional>

#include "multigrade/elliptic.hpp"
#include "multigrade/families.hpp"
#include "multigrade/search.hpp"
#include "multigrade/serialize.hpp"

namespace multigrade::cli {

namespace {

using nlohmann::json;

std::vector<Integer> parse_list(const std::string& text) {
  std::vector<Integer> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    out.push_back(parse_integer(std::string_view(text).substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format(const Solution& sol) {
  return "{" + to_string(sol.lhs()) + " | " + to_string(sol.rhs()) + "}";
}

std::string format_exponents(const std::vector<unsigned>& rs) {
  std::string out;
  for (unsigned r : rs) out += (out.empty() ? "" : ",") + std::to_string(r);
  return out.empty() ? "none" : out;
}

json point_json(const Point& p) {
  if (p.is_infinity()) return "infinity";
  return {{"x", to_string(p.x())}, {"y", to_string(p.y())}};
}

json params_json(const QuarticParams& q) {
  return {{"u", to_string(q.u)}, {q.model == QuarticModel::K4 ? "t" : "v", to_string(q.second)}};
}

std::uint64_t node_budget_from_env() {
  const char* raw = std::getenv("MULTIGRADE_NODE_BUDGET");
  if (raw == nullptr || *raw == '\0') return kDefaultNodeBudget;
  Integer value = parse_integer(raw);
  if (value < 1 || !value.fits_ulong_p()) throw PreconditionError("MULTIGRADE_NODE_BUDGET must be a positive integer");
  return value.get_ui();
}

// verify --------------------------------------------------------------------

struct VerifyArgs {
  unsigned k = 0;
  std::string lhs;
  std::string rhs;
  bool json = false;
};

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
  Solution sol(args.k, parse_list(args.lhs), parse_list(args.rhs));
  bool ok = verify(sol);
  bool trivial = is_trivial(sol);

  if (args.json) {
    json doc = to_json_annotated(sol);
    auto sums = json::array();
    for (unsigned r = 1; r <= sol.k(); ++r) {
      Integer left = power_sum(sol.lhs(), r);
      Integer right = power_sum(sol.rhs(), r);
      sums.push_back({{"r", r}, {"lhs", term_to_json(left)}, {"rhs", term_to_json(right)}, {"equal", left == right}});
    }
    doc["sums"] = std::move(sums);
    doc["verified"] = ok;
    out << doc.dump() << '\n';
  } else {
    out << "solution: " << format(sol) << "  (k=" << sol.k() << ", shape " << sol.shape().s1 << "+"
        << sol.shape().s2 << ")\n";
    for (unsigned r = 1; r <= sol.k(); ++r) {
      Integer left = power_sum(sol.lhs(), r);
      Integer right = power_sum(sol.rhs(), r);
      out << "r=" << r << "  lhs=" << left << "  rhs=" << right << (left == right ? "  ok" : "  MISMATCH") << '\n';
    }
    out << "verified: " << (ok ? "true" : "false") << '\n';
    out << "trivial: " << (trivial ? "true" : "false") << '\n';
  }
  return ok ? kOk : kNegative;
}

// family --------------------------------------------------------------------

struct FamilyArgs {
  std::string name;
  std::map<std::string, std::string> params;
  bool json = false;
  bool raw = false;
};

const std::map<std::string, std::vector<std::string>>& family_params() {
  static const std::map<std::string, std::vector<std::string>> table = {
      {"k2", {"p", "q"}},         {"k3-pyth", {"a", "b", "c"}}, {"k3", {"p", "q"}},
      {"k3-partial", {"p", "q", "r", "s"}}, {"k5a", {"m", "n"}}, {"k5b", {"m", "n"}},
  };
  return table;
}

int cmd_family(const FamilyArgs& args, std::ostream& out, std::ostream& err) {
  auto known = family_params().find(args.name);
  if (known == family_params().end()) {
    err << "error: unknown family '" << args.name << "' (expected k2, k3-pyth, k3, k3-partial, k5a, k5b)\n";
    return kUsageError;
  }
  for (const auto& p : known->second) {
    if (args.params.at(p).empty()) {
      err << "error: family " << args.name << " needs --" << p << '\n';
      return kUsageError;
    }
  }
  auto integer = [&](const char* key) { return parse_integer(args.params.at(key)); };
  auto rational = [&](const char* key) { return parse_rational(args.params.at(key)); };

  Solution sol(1, {0}, {0});
  std::vector<unsigned> verified_r;
  bool trivial = false;
  bool degenerate = false;
  bool normalized = false;

  if (args.name == "k3-partial") {
    Candidate cand = k3_partial(rational("p"), rational("q"), rational("r"), rational("s"));
    sol = cand.to_solution();
    verified_r = holding_exponents(sol.k(), sol.lhs(), sol.rhs());
    trivial = is_trivial(sol);
    degenerate = trivial || cand.all_zero();
  } else {
    Generated gen = [&] {
      if (args.name == "k2") return k2_family(integer("p"), integer("q"));
      if (args.name == "k3-pyth") return k3_pythagorean(integer("a"), integer("b"), integer("c"));
      if (args.name == "k3") return k3_family(integer("p"), integer("q"));
      if (args.name == "k5a") return k5_family1(integer("m"), integer("n"));
      return k5_family2(integer("m"), integer("n"));
    }();
    sol = gen.solution;
    verified_r = gen.verified_r;
    trivial = gen.trivial;
    degenerate = gen.degenerate;
    if (!args.raw) {
      sol = normalize(sol);
      normalized = true;
    }
  }

  if (args.json) {
    json doc = to_json_annotated(sol);
    doc["family"] = args.name;
    doc["verified_r"] = verified_r;
    doc["trivial"] = trivial;
    doc["degenerate"] = degenerate;
    doc["normalized"] = normalized;
    out << doc.dump() << '\n';
  } else {
    out << args.name << ": " << format(sol) << '\n';
    out << "k=" << sol.k() << "  verified_r=" << format_exponents(verified_r) << "  trivial=" << (trivial ? "true" : "false")
        << "  degenerate=" << (degenerate ? "true" : "false") << "  normalized=" << (normalized ? "true" : "false")
        << '\n';
  }
  return kOk;
}

// ec ------------------------------------------------------------------------

struct EcArgs {
  std::string curve;
  std::uint64_t n = 1;
  bool json = false;
  bool show_point = false;
  bool show_uv = false;
};

int cmd_ec(const EcArgs& args, std::ostream& out, std::ostream& err) {
  if (args.curve != "k4" && args.curve != "k5") {
    err << "error: unknown curve '" << args.curve << "' (expected k4 or k5)\n";
    return kUsageError;
  }
  if (args.n < 1) {
    err << "error: --n must be at least 1\n";
    return kUsageError;
  }
  PipelineReport report = args.curve == "k4" ? k4_solutions_from_point(args.n) : k5_solutions_from_point(args.n);

  if (args.json) {
    json doc = {{"curve", args.curve}, {"n", args.n}};
    if (args.show_point) doc["point"] = point_json(report.point);
    if (args.show_uv) {
      auto params = json::array();
      for (const auto& q : report.params) params.push_back(params_json(q));
      doc["params"] = std::move(params);
    }
    auto sols = json::array();
    for (const auto& s : report.solutions) sols.push_back(to_json_annotated(s));
    auto trivial = json::array();
    for (const auto& s : report.trivial) trivial.push_back(to_json(s));
    doc["solutions"] = std::move(sols);
    doc["trivial"] = std::move(trivial);
    doc["diagnostics"] = report.diagnostics;
    out << doc.dump() << '\n';
  } else {
    if (args.show_point) out << "point: " << to_string(report.point) << '\n';
    if (args.show_uv) {
      for (const auto& q : report.params) {
        out << "u=" << to_string(q.u) << (q.model == QuarticModel::K4 ? "  t=" : "  v=") << to_string(q.second) << '\n';
      }
    }
    for (const auto& s : report.solutions) out << format(s) << '\n';
  }
  for (const auto& d : report.diagnostics) err << "note: " << d << '\n';
  if (report.solutions.empty()) {
    err << "all candidates trivial\n";
    return kNegative;
  }
  return kOk;
}

// search --------------------------------------------------------------------

struct SearchArgs {
  unsigned k = 0;
  std::size_t s1 = 0;
  std::size_t s2 = 0;
  std::int64_t height = 0;
  bool zeros = true;
  std::optional<std::size_t> limit;
  unsigned threads = 1;
  std::string strategy = "auto";
  bool json = false;
  bool strict = false;
};

int cmd_search(const SearchArgs& args, std::ostream& out, std::ostream& err) {
  SearchSpec spec;
  spec.shape = SystemShape::make(args.k, args.s1, args.s2);
  spec.height = args.height;
  spec.allow_zero_terms = args.zeros;
  spec.limit = args.limit;
  spec.threads = args.threads;
  spec.strategy = parse_strategy(args.strategy);
  spec.node_budget = node_budget_from_env();

  ShapeBounds bounds = shape_lower_bounds(spec.shape.k);
  bool excluded = spec.shape.total() < bounds.total_min || spec.shape.s2 < bounds.max_side_min ||
                  spec.shape.s1 < bounds.min_side_min;
  if (excluded && args.strict) {
    err << "error: shape (" << spec.shape.s1 << ", " << spec.shape.s2 << ") cannot carry a nontrivial solution for k="
        << spec.shape.k << " (needs s1+s2 >= " << bounds.total_min << ", max side >= " << bounds.max_side_min
        << ", min side >= " << bounds.min_side_min << ")\n";
    return kUsageError;
  }

  SearchReport report = exhaustive_search(spec);
  if (args.json) {
    out << to_json(report).dump() << '\n';
  } else {
    for (const auto& s : report.solutions) out << format(s) << '\n';
    out << "solutions: " << report.solutions.size() << "  exhaustive: " << (report.exhaustive ? "true" : "false")
        << "  nodes: " << report.nodes_visited << "  strategy: " << to_string(report.strategy_used) << '\n';
  }
  return report.solutions.empty() ? kNegative : kOk;
}

// shift ---------------------------------------------------------------------

struct ShiftArgs {
  unsigned k = 0;
  std::string a;
  std::string b;
  std::string d;
  bool drop_zeros = false;
  bool json = false;
};

int cmd_shift(const ShiftArgs& args, std::ostream& out, std::ostream& err) {
  TEPair te{args.k, parse_list(args.a), parse_list(args.b)};
  if (te.a.size() != te.b.size()) {
    err << "error: --a and --b must have the same length\n";
    return kUsageError;
  }
  if (!verify(te)) {
    err << "error: input pair does not satisfy r = 1.." << args.k << '\n';
    return kUsageError;
  }
  TEPair shifted = frolov_shift(te, parse_integer(args.d));
  std::optional<Solution> dropped;
  if (args.drop_zeros) dropped = drop_zeros(shifted);

  if (args.json) {
    json doc = {{"shifted", to_json(shifted)}};
    if (dropped) doc["solution"] = to_json_annotated(*dropped);
    out << doc.dump() << '\n';
  } else {
    out << "shifted: {" << to_string(shifted.a) << " | " << to_string(shifted.b) << "}  (k=" << shifted.k << ")\n";
    if (dropped) {
      out << "solution: " << format(*dropped) << "  (shape " << dropped->shape().s1 << "+" << dropped->shape().s2
          << ", trivial=" << (is_trivial(*dropped) ? "true" : "false") << ")\n";
    }
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact generation, verification and search for equal sums of like powers"};
  app.require_subcommand(1);

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Check sum lhs^r == sum rhs^r for r = 1..k");
  verify_cmd->add_option("--k", verify_args.k, "Highest exponent")->required()->check(CLI::PositiveNumber);
  verify_cmd->add_option("--lhs", verify_args.lhs, "Comma-separated integers")->required();
  verify_cmd->add_option("--rhs", verify_args.rhs, "Comma-separated integers")->required();
  verify_cmd->add_flag("--json", verify_args.json);

  FamilyArgs family_args;
  auto* family_cmd = app.add_subcommand("family", "Instantiate a parametric family");
  family_cmd->add_option("name", family_args.name, "k2 | k3-pyth | k3 | k3-partial | k5a | k5b")->required();
  for (const char* p : {"p", "q", "r", "s", "a", "b", "c", "m", "n"}) {
    family_args.params[p] = "";
    family_cmd->add_option(std::string("--") + p, family_args.params[p]);
  }
  family_cmd->add_flag("--json", family_args.json);
  family_cmd->add_flag("--raw", family_args.raw, "Skip normalization");

  EcArgs ec_args;
  auto* ec_cmd = app.add_subcommand("ec", "Solutions from multiples of the generator on the k4 or k5 curve");
  ec_cmd->add_option("curve", ec_args.curve, "k4 | k5")->required();
  ec_cmd->add_option("--n", ec_args.n, "Multiple of the generator")->required();
  ec_cmd->add_flag("--json", ec_args.json);
  ec_cmd->add_flag("--show-point", ec_args.show_point);
  ec_cmd->add_flag("--show-uv", ec_args.show_uv);

  SearchArgs search_args;
  auto* search_cmd = app.add_subcommand("search", "Bounded exhaustive search for nontrivial solutions");
  search_cmd->add_option("--k", search_args.k)->required()->check(CLI::PositiveNumber);
  search_cmd->add_option("--s1", search_args.s1)->required()->check(CLI::PositiveNumber);
  search_cmd->add_option("--s2", search_args.s2)->required()->check(CLI::PositiveNumber);
  search_cmd->add_option("--height", search_args.height, "Max |term|")->required()->check(CLI::PositiveNumber);
  search_cmd->add_flag("--zeros,!--no-zeros", search_args.zeros, "Allow zero terms (default on)");
  search_cmd->add_option("--limit", search_args.limit, "Stop after N solutions");
  search_cmd->add_option("--threads", search_args.threads, "Worker threads (0 = all cores)");
  search_cmd->add_option("--strategy", search_args.strategy, "auto | plain | mitm");
  search_cmd->add_flag("--json", search_args.json);
  search_cmd->add_flag("--strict", search_args.strict, "Reject shapes excluded by the lower bounds");

  ShiftArgs shift_args;
  auto* shift_cmd = app.add_subcommand("shift", "Translate an equal-size pair by d");
  shift_cmd->add_option("--k", shift_args.k)->required()->check(CLI::PositiveNumber);
  shift_cmd->add_option("--a", shift_args.a)->required();
  shift_cmd->add_option("--b", shift_args.b)->required();
  shift_cmd->add_option("--d", shift_args.d)->required();
  shift_cmd->add_flag("--drop-zeros", shift_args.drop_zeros);
  shift_cmd->add_flag("--json", shift_args.json);

  std::vector<std::string> rest(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*verify_cmd) return cmd_verify(verify_args, out);
    if (*family_cmd) return cmd_family(family_args, out, err);
    if (*ec_cmd) return cmd_ec(ec_args, out, err);
    if (*search_cmd) return cmd_search(search_args, out, err);
    if (*shift_cmd) return cmd_shift(shift_args, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace multigrade::cli
