#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "footsort/pattern.hpp"
#include "footsort/sock_ordering.hpp"

namespace footsort {

// ---------------------------------------------------------------------------
// The minimal non-foot-sortable 2-bounded orderings: 14 fixed ones and four
// infinite families.

struct SporadicPattern {
  std::string_view type;  // "I", "I'", "II" or "III"
  std::string_view letters;
};

// The 14 fixed critical orderings, grouped by type, in canonical letters.
std::span<const SporadicPattern> sporadic_table();

enum class Family { kA, kB, kBPrime, kC };
inline constexpr std::array<Family, 4> kAllFamilies = {Family::kA, Family::kB, Family::kBPrime, Family::kC};

std::string_view family_name(Family f);  // "A", "B", "B'", "C"
int family_min_n(Family f);
std::size_t family_length(Family f, int n);

struct FamilyInstance {
  Family family;
  int n;
  CanonicalOrdering ordering;
};

// Instantiates a family template. Throws std::out_of_range for n below the
// family's minimum.
FamilyInstance generate_family(Family f, int n);

// Identifies one minimal pattern.
struct PatternId {
  bool sporadic = true;
  std::size_t sporadic_index = 0;  // into sporadic_table()
  Family family = Family::kA;
  int n = 0;

  std::string name() const;  // "Type I: abcdbacd", "Type A (n=2): abcdabd"
  CanonicalOrdering ordering() const;

  friend bool operator==(const PatternId&, const PatternId&) = default;
};

struct PatternMatch {
  PatternId pattern;
  Embedding embedding;
};

using SortabilityFn = std::function<bool(const SockOrdering&)>;

// Not sortable, while deleting any single sock makes it sortable. Each
// deletion is re-reduced and re-canonicalised before being decided.
bool is_minimal_nonsortable(const SockOrdering& s, const SortabilityFn& sortable);
bool is_minimal_nonsortable(const SockOrdering& s);  // uses decide()

// First minimal pattern contained in `s`: the sporadic table in order, then
// family instances by increasing n (A, B, B', C at each n) up to |s|.
// Throws std::invalid_argument unless `s` is 2-bounded.
std::optional<PatternMatch> match_minimal_pattern(const SockOrdering& s);

// ---------------------------------------------------------------------------
// Enumeration of canonical reduced orderings.

inline constexpr std::size_t kDefaultEnumerationBound = 13;

struct EnumerationOptions {
  bool two_bounded = true;
  std::size_t max_colors = std::numeric_limits<std::size_t>::max();
  std::size_t max_length = kDefaultEnumerationBound;
};

// Visits every reduced restricted-growth sequence of `length`, once each, in
// lexicographic order. Throws std::invalid_argument if length > max_length.
void for_each_canonical(std::size_t length, const EnumerationOptions& options,
                        const std::function<void(const CanonicalOrdering&)>& visit);

std::vector<CanonicalOrdering> enumerate_canonical(std::size_t length, bool two_bounded,
                                                   std::size_t max_length = kDefaultEnumerationBound);

// ---------------------------------------------------------------------------
// Exhaustive check of the classification up to a length.

struct LengthSummary {
  std::size_t length = 0;
  std::size_t enumerated = 0;
  std::size_t not_sortable = 0;
  std::size_t minimal = 0;
};

struct NamedOrdering {
  std::string name;  // pattern name, empty when not an expected pattern
  CanonicalOrdering ordering;
};

struct ClassificationReport {
  std::size_t max_length = 0;
  std::vector<LengthSummary> per_length;
  std::vector<NamedOrdering> found;     // minimal orderings from enumeration
  std::vector<NamedOrdering> expected;  // table and family instances
  std::vector<NamedOrdering> missing;     // expected but not found
  std::vector<NamedOrdering> unexpected;  // found but not expected

  bool matches() const { return missing.empty() && unexpected.empty(); }
};

// Expected minimal patterns of length <= max_length, sorted canonically.
std::vector<NamedOrdering> expected_patterns(std::size_t max_length);

// Enumerates every canonical reduced 2-bounded ordering of length
// <= max_length, collects those that are minimal non-sortable and compares
// against expected_patterns(). Work is split round-robin over `shards`
// threads. Throws std::invalid_argument if max_length > 13.
ClassificationReport verify_classification(std::size_t max_length, unsigned shards = 1);

}  // namespace footsort
