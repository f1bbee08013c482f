#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "footsort/classifier.hpp"
#include "footsort/decider.hpp"
#include "footsort/generators.hpp"
#include "footsort/oracle.hpp"
#include "footsort/text_format.hpp"

namespace footsort::cli {
namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string join_labels(std::span<const Color> colors, const std::vector<std::string>& labels,
                        std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < colors.size(); ++i) {
    if (i) out += sep;
    out += labels.at(colors[i]);
  }
  return out;
}

std::vector<std::size_t> to_sizes(std::span<const Position> p) { return {p.begin(), p.end()}; }

json report_json(const DecideReport& r) {
  static constexpr const char* kBranchNames[kBranchCount] = {
      "case1", "case2", "case2_not_minimal", "case2_exception",
      "case3_not_minimal", "case3_adjacent", "case3_reduce", "case3_exception"};
  json branches = json::object();
  for (int i = 0; i < kBranchCount; ++i) branches[kBranchNames[i]] = r.branch_counts[i];
  return {{"n", r.n},           {"map_ops", r.map_ops},       {"deletions", r.deletions},
          {"reductions", r.reductions}, {"iterations", r.iterations}, {"branches", branches}};
}

void print(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

}  // namespace

int cmd_decide(const std::string& input, Format format, std::ostream& out) {
  const ParsedOrdering parsed = parse_ordering(input);
  const SockOrdering& s = parsed.ordering;
  DecideReport report;
  const Verdict verdict = decide(s, &report);

  std::optional<PatternMatch> witness;
  bool witness_skipped = false;
  if (!verdict && s.two_bounded()) {
    if (s.size() <= kWitnessLengthLimit) {
      witness = match_minimal_pattern(s);
    } else {
      witness_skipped = true;
    }
  }

  if (format == Format::kJson) {
    json j = {{"ordering", format_colors(s.colors(), parsed.labels)},
              {"length", s.size()},
              {"two_bounded", s.two_bounded()},
              {"sortable", verdict.is_sortable()},
              {"report", report_json(report)}};
    if (verdict) {
      std::vector<std::string> asc;
      for (Color c : verdict.certificate().ascending) asc.push_back(parsed.labels.at(c));
      j["certificate"] = asc;
    }
    if (witness) {
      j["witness"] = {{"pattern", witness->pattern.name()},
                      {"positions", to_sizes(witness->embedding.positions)}};
    }
    print(out, j);
  } else if (verdict) {
    out << "SORTABLE\n";
    out << "certificate: " << join_labels(verdict.certificate().ascending, parsed.labels, " < ") << '\n';
  } else {
    out << "NOT-SORTABLE\n";
    if (witness) {
      out << "witness: " << witness->pattern.name() << '\n';
      out << "embedding:";
      for (Position p : witness->embedding.positions) out << ' ' << p;
      out << '\n';
    } else if (witness_skipped) {
      out << "witness: skipped (longer than " << kWitnessLengthLimit << ")\n";
    }
  }
  return verdict ? kExitSortable : kExitNotSortable;
}

int cmd_oracle(const std::string& input, OracleMode mode, Format format, std::ostream& out) {
  const ParsedOrdering parsed = parse_ordering(input);
  const SockOrdering& s = parsed.ordering;

  std::optional<Verdict> by_orders;
  std::optional<bool> by_sim;
  if (mode != OracleMode::kSimulate) by_orders = oracle::oracle_by_orders(s);
  if (mode != OracleMode::kOrders) by_sim = oracle::oracle_by_simulation(s);

  const bool sortable = by_orders ? by_orders->is_sortable() : *by_sim;
  const bool agree = !(by_orders && by_sim) || by_orders->is_sortable() == *by_sim;
  auto word = [](bool ok) { return ok ? "SORTABLE" : "NOT-SORTABLE"; };

  if (format == Format::kJson) {
    json j = {{"ordering", format_colors(s.colors(), parsed.labels)}, {"sortable", sortable}, {"agree", agree}};
    if (by_orders) {
      j["orders"] = by_orders->is_sortable();
      if (*by_orders) {
        std::vector<std::string> asc;
        for (Color c : by_orders->certificate().ascending) asc.push_back(parsed.labels.at(c));
        j["certificate"] = asc;
      }
    }
    if (by_sim) j["simulate"] = *by_sim;
    print(out, j);
  } else {
    if (by_orders) {
      out << "orders: " << word(by_orders->is_sortable());
      if (*by_orders) {
        out << " (" << join_labels(by_orders->certificate().ascending, parsed.labels, " < ") << ')';
      }
      out << '\n';
    }
    if (by_sim) out << "simulate: " << word(*by_sim) << '\n';
    if (by_orders && by_sim) out << (agree ? "agree: " : "DISAGREE: ") << word(sortable) << '\n';
  }
  if (!agree) return kExitDisagree;
  return sortable ? kExitSortable : kExitNotSortable;
}

int cmd_verify(std::size_t max_length, unsigned shards, Format format, std::ostream& out) {
  const ClassificationReport r = verify_classification(max_length, shards);
  if (format == Format::kJson) {
    json per_length = json::array();
    for (const auto& l : r.per_length) {
      per_length.push_back({{"length", l.length},
                            {"enumerated", l.enumerated},
                            {"not_sortable", l.not_sortable},
                            {"minimal", l.minimal}});
    }
    auto listing = [](const std::vector<NamedOrdering>& v) {
      json a = json::array();
      for (const auto& e : v) a.push_back({{"ordering", format_ordering(e.ordering)}, {"pattern", e.name}});
      return a;
    };
    print(out, {{"max_length", r.max_length},
                {"per_length", per_length},
                {"found", listing(r.found)},
                {"expected", listing(r.expected)},
                {"missing", listing(r.missing)},
                {"unexpected", listing(r.unexpected)},
                {"pass", r.matches()}});
  } else {
    for (const auto& l : r.per_length) {
      out << "length " << l.length << " enumerated " << l.enumerated << " not_sortable " << l.not_sortable
          << " minimal " << l.minimal << '\n';
    }
    for (const auto& e : r.found) {
      out << "minimal " << format_ordering(e.ordering) << ' ' << (e.name.empty() ? "(unlisted)" : e.name) << '\n';
    }
    for (const auto& e : r.missing) out << "missing " << format_ordering(e.ordering) << ' ' << e.name << '\n';
    for (const auto& e : r.unexpected) out << "unexpected " << format_ordering(e.ordering) << '\n';
    out << "total found " << r.found.size() << " expected " << r.expected.size() << '\n';
    out << (r.matches() ? "PASS" : "FAIL") << '\n';
  }
  return r.matches() ? 0 : 1;
}

int cmd_enumerate(std::size_t length, bool two_bounded, std::size_t limit, Format format, std::ostream& out) {
  EnumerationOptions options;
  options.two_bounded = two_bounded;
  std::size_t count = 0;
  json all = json::array();
  for_each_canonical(length, options, [&](const CanonicalOrdering& c) {
    if (limit && count >= limit) return;
    ++count;
    if (format == Format::kJson) {
      all.push_back(format_ordering(c));
    } else {
      out << format_ordering(c) << '\n';
    }
  });
  if (format == Format::kJson) {
    print(out, {{"length", length}, {"two_bounded", two_bounded}, {"count", count}, {"orderings", all}});
  } else {
    out << "count " << count << '\n';
  }
  return 0;
}

int cmd_bench(const BenchConfig& config, Format format, std::ostream& out) {
  struct Row {
    std::string kind;
    std::size_t n;
    double seconds;
    std::uint64_t map_ops;
    double ratio;
    bool sortable;
  };
  std::vector<Row> rows;
  gen::Rng rng(config.seed);

  auto measure = [&](const std::string& kind, const SockOrdering& s) {
    DecideReport report;
    const auto t0 = std::chrono::steady_clock::now();
    const Verdict v = decide(s, &report);
    const auto t1 = std::chrono::steady_clock::now();
    const double n = static_cast<double>(s.size());
    rows.push_back({kind, s.size(), std::chrono::duration<double>(t1 - t0).count(), report.map_ops,
                    static_cast<double>(report.map_ops) / (std::max(n, 1.0) * std::log2(n + 2.0)),
                    v.is_sortable()});
  };

  for (std::size_t n : config.sizes) {
    measure("random", gen::random_ordering(rng, n, std::max<std::size_t>(n / 2, 1)));
    measure("random-2-bounded", gen::random_two_bounded(rng, n));
    measure("sortable-2-bounded", gen::random_sortable(rng, n, 2));
    measure("sortable-multi", gen::random_sortable(rng, n, 8));
    measure("chain", gen::chain(n));
    if (n >= family_length(Family::kA, 2)) {
      const int k = static_cast<int>((n - 3) / 2);
      measure("family-A", generate_family(Family::kA, k).ordering);
    }
  }

  if (format == Format::kJson) {
    json a = json::array();
    for (const auto& r : rows) {
      a.push_back({{"kind", r.kind}, {"n", r.n}, {"seconds", r.seconds}, {"map_ops", r.map_ops},
                   {"ratio", r.ratio}, {"sortable", r.sortable}});
    }
    print(out, {{"seed", config.seed}, {"rows", a}});
  } else {
    out << std::left << std::setw(20) << "kind" << std::right << std::setw(10) << "n" << std::setw(12) << "seconds"
        << std::setw(14) << "map_ops" << std::setw(12) << "ops/NlogN" << "  verdict\n";
    for (const auto& r : rows) {
      out << std::left << std::setw(20) << r.kind << std::right << std::setw(10) << r.n << std::setw(12)
          << std::fixed << std::setprecision(4) << r.seconds << std::setw(14) << r.map_ops << std::setw(12)
          << std::setprecision(3) << r.ratio << "  " << (r.sortable ? "sortable" : "not-sortable") << '\n';
    }
  }
  return 0;
}

namespace {

std::string read_input(const std::string& positional, bool has_positional, const std::string& file,
                       std::istream& in) {
  if (has_positional) return positional;
  if (!file.empty()) {
    std::ifstream f(file);
    if (!f) throw UsageError("cannot open " + file);
    return {std::istreambuf_iterator<char>(f), {}};
  }
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Foot-sortability of sock orderings: decide, oracles, classification, benchmarks"};
  app.require_subcommand(1);

  Format format = Format::kText;
  const std::map<std::string, Format> formats = {{"text", Format::kText}, {"json", Format::kJson}};
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format: text or json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };

  std::string input;
  std::string file;
  auto* decide_cmd = app.add_subcommand("decide", "Decide foot-sortability in O(N log N)");
  decide_cmd->add_option("ordering", input, "Letters (abcab) or whitespace-separated ids; stdin if omitted");
  decide_cmd->add_option("--file", file, "Read the ordering from a file");
  add_format(decide_cmd);

  std::vector<std::string> oracle_args;
  OracleMode mode = OracleMode::kBoth;
  const std::map<std::string, OracleMode> modes = {
      {"orders", OracleMode::kOrders}, {"simulate", OracleMode::kSimulate}, {"both", OracleMode::kBoth}};
  auto* oracle_cmd = app.add_subcommand("oracle", "Run the brute-force oracles");
  oracle_cmd->add_option("args", oracle_args, "[orders|simulate|both] ORDERING")->expected(0, 2);
  oracle_cmd->add_option("--mode", mode, "orders, simulate or both")
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
  oracle_cmd->add_option("--file", file, "Read the ordering from a file");
  add_format(oracle_cmd);

  std::size_t max_length = 11;
  std::size_t positional_length = 0;
  unsigned shards = 1;
  auto* verify_cmd = app.add_subcommand("verify", "Enumerate minimal non-sortable 2-bounded orderings");
  verify_cmd->add_option("length", positional_length, "Maximum length (same as --max-length)");
  verify_cmd->add_option("--max-length", max_length, "Maximum length, at most 13")->check(CLI::Range(0, 13));
  verify_cmd->add_option("--shards", shards, "Worker threads")->check(CLI::Range(1, 256));
  add_format(verify_cmd);

  std::size_t enum_length = 0;
  bool enum_all = false;
  std::size_t limit = 0;
  std::size_t enum_bound = kDefaultEnumerationBound;
  auto* enum_cmd = app.add_subcommand("enumerate", "List canonical reduced orderings of one length");
  enum_cmd->add_option("length", enum_length, "Length")->required();
  enum_cmd->add_flag("--all", enum_all, "Include colors used more than twice");
  enum_cmd->add_option("--limit", limit, "Stop after this many (0 = no limit)");
  enum_cmd->add_option("--max-length", enum_bound, "Refuse lengths above this bound");
  add_format(enum_cmd);

  BenchConfig bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time decide() and count ordered-map operations");
  bench_cmd->add_option("--sizes", bench.sizes, "Instance sizes")->delimiter(',');
  bench_cmd->add_option("--seed", bench.seed, "Random seed");
  add_format(bench_cmd);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (decide_cmd->parsed()) {
      return cmd_decide(read_input(input, decide_cmd->count("ordering") > 0, file, in), format, out);
    }
    if (oracle_cmd->parsed()) {
      std::string text;
      bool given = false;
      if (oracle_args.size() == 2) {
        auto it = modes.find(oracle_args[0]);
        if (it == modes.end()) throw UsageError("unknown oracle mode '" + oracle_args[0] + "'");
        mode = it->second;
        text = oracle_args[1];
        given = true;
      } else if (oracle_args.size() == 1) {
        auto it = modes.find(oracle_args[0]);
        if (it != modes.end() && file.empty()) {
          mode = it->second;
        } else {
          text = oracle_args[0];
          given = true;
        }
      }
      return cmd_oracle(read_input(text, given, file, in), mode, format, out);
    }
    if (verify_cmd->parsed()) {
      if (verify_cmd->count("length")) {
        if (positional_length > kDefaultEnumerationBound) throw UsageError("verify: length is at most 13");
        max_length = positional_length;
      }
      return cmd_verify(max_length, shards, format, out);
    }
    if (enum_cmd->parsed()) {
      if (enum_length > enum_bound) throw UsageError("enumerate: length exceeds --max-length");
      return cmd_enumerate(enum_length, !enum_all, limit, format, out);
    }
    if (bench_cmd->parsed()) return cmd_bench(bench, format, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    // parse failures and oracle guards
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace footsort::cli
