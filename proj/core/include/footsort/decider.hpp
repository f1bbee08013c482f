#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "footsort/sock_ordering.hpp"
#include "footsort/sorting_state.hpp"

namespace footsort {

// Colors removed by reductions, in the order they were removed (these are
// the smallest colors of the certificate, ascending).
struct ReductionTrace {
  std::vector<Color> reduced_colors;
  bool sortable = false;
};

// Which rule chose the next minimum.
enum class Branch {
  kCase1,               // earliest minimal lonely letter precedes the first a
  kCase2,               // no minimal lonely letter up to the second a; reduce a
  kCase2NotMinimal,     // as above but a is not minimal: unsortable
  kCase2Exception,      // exactly one letter between the first two a's
  kCase3NotMinimal,     // b between the a's, a not minimal: reduce b
  kCase3Adjacent,       // b right after the first a: reduce b
  kCase3Reduce,         // several unlonely letters between the a's: reduce a
  kCase3Exception,      // exactly one unlonely letter z between the a's
};
inline constexpr int kBranchCount = 8;

// Instrumentation for one decide() call.
struct DecideReport {
  std::size_t n = 0;
  std::uint64_t map_ops = 0;  // ordered-map operations, all indexes together
  std::uint64_t deletions = 0;
  std::uint64_t reductions = 0;
  std::uint64_t iterations = 0;
  std::uint64_t branch_counts[kBranchCount] = {};

  std::uint64_t count(Branch b) const { return branch_counts[static_cast<int>(b)]; }
};

struct DecideOptions {
  // Run SortingState::check_invariants() after every step (O(N log N) each).
  bool check_invariants = false;
  // Judge minimality by comparing a's first position against the raw prefix
  // end, exactly as the textbook procedure is written. This misclassifies the
  // live letter right before a deleted prefix end (e.g. rejects "abcdacd"),
  // so it exists only for comparison.
  bool literal_minimality_test = false;
};

// Raised if a produced certificate fails validation. Indicates a defect.
class CertificateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class StepResult { kContinue, kSortable, kNotSortable };

// One iteration of the main loop: picks a letter per the case analysis,
// reduces it, and checks the resulting prefix order is still a partial
// order. Returns kSortable once no color has two live socks.
StepResult decide_step(SortingState& state, ReductionTrace& trace, DecideReport* report = nullptr,
                       const DecideOptions& options = {});

// Certificate from a finished sortable run: reduced colors in reduction
// order, then the remaining (all lonely) colors in reverse list order.
// Validated against `input` before returning; throws CertificateError.
TotalOrderCertificate extract_certificate(const SockOrdering& input, const ReductionTrace& trace,
                                          const SortingState& final_state);

// Decides foot-sortability in O(N log N).
Verdict decide(const SockOrdering& s, DecideReport* report = nullptr, const DecideOptions& options = {});

}  // namespace footsort
