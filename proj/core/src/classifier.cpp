#include "footsort/classifier.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>

#include "footsort/decider.hpp"
#include "footsort/text_format.hpp"

namespace footsort {
namespace {

constexpr std::array<SporadicPattern, 14> kSporadic = {{
    {"I", "abcdbacd"},
    {"I", "abcdedabc"},
    {"I'", "abcadbdc"},
    {"I'", "abcbdadc"},
    {"I'", "abcdbadc"},
    {"I'", "abcdcadb"},
    {"I'", "abcdceaeb"},
    {"I'", "abcdedacb"},
    {"II", "abcdbcad"},
    {"II", "abcdcbad"},
    {"II", "abcdedbac"},
    {"III", "abcabdedc"},
    {"III", "abcbadedc"},
    {"III", "abcdcaefeb"},
}};

SockOrdering from_letters(std::string_view letters) {
  std::vector<Color> colors;
  colors.reserve(letters.size());
  for (char ch : letters) colors.push_back(static_cast<Color>(ch - 'a'));
  return SockOrdering(std::move(colors));
}

bool decide_sortable(const SockOrdering& s) { return decide(s).is_sortable(); }

}  // namespace

std::span<const SporadicPattern> sporadic_table() { return kSporadic; }

std::string_view family_name(Family f) {
  switch (f) {
    case Family::kA: return "A";
    case Family::kB: return "B";
    case Family::kBPrime: return "B'";
    case Family::kC: return "C";
  }
  return "?";
}

int family_min_n(Family f) { return f == Family::kA ? 2 : 3; }

std::size_t family_length(Family f, int n) {
  const auto m = static_cast<std::size_t>(n);
  switch (f) {
    case Family::kA: return 2 * m + 3;
    case Family::kB:
    case Family::kBPrime: return 2 * m + 4;
    case Family::kC: return 2 * m + 5;
  }
  return 0;
}

FamilyInstance generate_family(Family f, int n) {
  if (n < family_min_n(f)) {
    throw std::out_of_range("family " + std::string(family_name(f)) + " needs n >= " +
                            std::to_string(family_min_n(f)));
  }
  // Template symbols: a_i -> i, then x, y, z.
  const auto un = static_cast<Color>(n);
  const Color x = un, y = un + 1, z = un + 2;
  auto a = [](int i) { return static_cast<Color>(i); };
  std::vector<Color> raw;
  switch (f) {
    case Family::kA: raw = {x, a(0), y, a(n - 1), x}; break;
    case Family::kB: raw = {a(0), x, y, a(n - 1), x, y}; break;
    case Family::kBPrime: raw = {a(0), y, x, a(n - 1), x, y}; break;
    case Family::kC: raw = {a(0), x, a(n - 1), y, z, y, x}; break;
  }
  for (int i = n - 2; i >= 0; --i) {
    raw.push_back(a(i));
    raw.push_back(a(i + 1));
  }
  return FamilyInstance{f, n, canonicalize(raw)};
}

std::string PatternId::name() const {
  if (sporadic) {
    const auto& p = kSporadic.at(sporadic_index);
    return "Type " + std::string(p.type) + ": " + std::string(p.letters);
  }
  return "Type " + std::string(family_name(family)) + " (n=" + std::to_string(n) +
         "): " + format_ordering(ordering());
}

CanonicalOrdering PatternId::ordering() const {
  if (sporadic) return canonicalize(from_letters(kSporadic.at(sporadic_index).letters));
  return generate_family(family, n).ordering;
}

bool is_minimal_nonsortable(const SockOrdering& s, const SortabilityFn& sortable) {
  if (sortable(s)) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto smaller = canonicalize(reduce_adjacent(s.without(i)));
    if (!sortable(smaller)) return false;
  }
  return true;
}

bool is_minimal_nonsortable(const SockOrdering& s) { return is_minimal_nonsortable(s, decide_sortable); }

std::optional<PatternMatch> match_minimal_pattern(const SockOrdering& s) {
  if (!s.two_bounded()) throw std::invalid_argument("match_minimal_pattern: input is not 2-bounded");

  for (std::size_t i = 0; i < kSporadic.size(); ++i) {
    const auto needle = from_letters(kSporadic[i].letters);
    if (auto e = contains_pattern(s, needle)) {
      return PatternMatch{PatternId{true, i, Family::kA, 0}, std::move(*e)};
    }
  }
  // Type A is the shortest family at every n.
  for (int n = 2; family_length(Family::kA, n) <= s.size(); ++n) {
    for (Family f : kAllFamilies) {
      if (n < family_min_n(f) || family_length(f, n) > s.size()) continue;
      const auto inst = generate_family(f, n);
      if (auto e = contains_pattern(s, inst.ordering)) {
        return PatternMatch{PatternId{false, 0, f, n}, std::move(*e)};
      }
    }
  }
  return std::nullopt;
}

namespace {

class CanonicalWalker {
 public:
  CanonicalWalker(std::size_t length, const EnumerationOptions& options,
                  const std::function<void(const CanonicalOrdering&)>& visit)
      : length_(length), options_(options), visit_(visit), counts_(length + 1, 0) {
    word_.reserve(length);
  }

  void run() { extend(0); }

 private:
  void extend(Color used) {
    if (word_.size() == length_) {
      visit_(canonicalize(std::span<const Color>(word_)));
      return;
    }
    const Color limit = static_cast<Color>(std::min<std::size_t>(used + 1, options_.max_colors));
    for (Color c = 0; c < limit; ++c) {
      if (!word_.empty() && word_.back() == c) continue;
      if (options_.two_bounded && counts_[c] >= 2) continue;
      word_.push_back(c);
      ++counts_[c];
      extend(c == used ? used + 1 : used);
      --counts_[c];
      word_.pop_back();
    }
  }

  std::size_t length_;
  const EnumerationOptions& options_;
  const std::function<void(const CanonicalOrdering&)>& visit_;
  std::vector<std::size_t> counts_;
  std::vector<Color> word_;
};

}  // namespace

void for_each_canonical(std::size_t length, const EnumerationOptions& options,
                        const std::function<void(const CanonicalOrdering&)>& visit) {
  if (length > options.max_length) {
    throw std::invalid_argument("enumeration length " + std::to_string(length) + " exceeds the bound " +
                                std::to_string(options.max_length));
  }
  CanonicalWalker(length, options, visit).run();
}

std::vector<CanonicalOrdering> enumerate_canonical(std::size_t length, bool two_bounded,
                                                   std::size_t max_length) {
  std::vector<CanonicalOrdering> out;
  EnumerationOptions options;
  options.two_bounded = two_bounded;
  options.max_length = max_length;
  for_each_canonical(length, options, [&](const CanonicalOrdering& c) { out.push_back(c); });
  return out;
}

std::vector<NamedOrdering> expected_patterns(std::size_t max_length) {
  std::vector<NamedOrdering> out;
  for (std::size_t i = 0; i < kSporadic.size(); ++i) {
    if (kSporadic[i].letters.size() > max_length) continue;
    const PatternId id{true, i, Family::kA, 0};
    out.push_back({id.name(), id.ordering()});
  }
  for (Family f : kAllFamilies) {
    for (int n = family_min_n(f); family_length(f, n) <= max_length; ++n) {
      const PatternId id{false, 0, f, n};
      out.push_back({id.name(), id.ordering()});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.ordering < r.ordering; });
  return out;
}

ClassificationReport verify_classification(std::size_t max_length, unsigned shards) {
  if (max_length > kDefaultEnumerationBound) {
    throw std::invalid_argument("verify_classification: max length " + std::to_string(max_length) +
                                " exceeds " + std::to_string(kDefaultEnumerationBound));
  }
  shards = std::max(1u, shards);

  ClassificationReport report;
  report.max_length = max_length;
  report.expected = expected_patterns(max_length);

  struct ShardResult {
    std::vector<LengthSummary> per_length;
    std::vector<CanonicalOrdering> found;
  };
  std::vector<ShardResult> results(shards);

  auto work = [max_length, shards](unsigned shard, ShardResult& out) {
    EnumerationOptions options;
    options.two_bounded = true;
    for (std::size_t len = 1; len <= max_length; ++len) {
      LengthSummary summary;
      summary.length = len;
      std::size_t index = 0;
      for_each_canonical(len, options, [&](const CanonicalOrdering& c) {
        if (index++ % shards != shard) return;
        ++summary.enumerated;
        if (decide(c).is_sortable()) return;
        ++summary.not_sortable;
        if (is_minimal_nonsortable(c)) {
          ++summary.minimal;
          out.found.push_back(c);
        }
      });
      out.per_length.push_back(summary);
    }
  };

  if (shards == 1) {
    work(0, results[0]);
  } else {
    std::vector<std::jthread> workers;
    for (unsigned s = 0; s < shards; ++s) workers.emplace_back(work, s, std::ref(results[s]));
  }

  report.per_length.resize(max_length);
  std::vector<CanonicalOrdering> found;
  for (const auto& r : results) {
    for (std::size_t i = 0; i < r.per_length.size(); ++i) {
      auto& dst = report.per_length[i];
      dst.length = r.per_length[i].length;
      dst.enumerated += r.per_length[i].enumerated;
      dst.not_sortable += r.per_length[i].not_sortable;
      dst.minimal += r.per_length[i].minimal;
    }
    found.insert(found.end(), r.found.begin(), r.found.end());
  }
  std::sort(found.begin(), found.end());

  std::map<CanonicalOrdering, std::string> names;
  for (const auto& e : report.expected) names.emplace(e.ordering, e.name);
  for (const auto& c : found) {
    auto it = names.find(c);
    report.found.push_back({it == names.end() ? std::string() : it->second, c});
    if (it == names.end()) report.unexpected.push_back(report.found.back());
  }
  for (const auto& e : report.expected) {
    if (!std::binary_search(found.begin(), found.end(), e.ordering)) report.missing.push_back(e);
  }
  return report;
}

}  // namespace footsort
