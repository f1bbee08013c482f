#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>

#include "footsort/sock_ordering.hpp"

// Brute-force ground truth. Nothing here shares code with the fast decider.
namespace footsort::oracle {

// Raised when an instance exceeds a brute-force guard.
class GuardExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kMaxOrderAlphabet = 8;
inline constexpr std::size_t kMaxSimulationLength = 24;

// True iff no colors a < b < c (under `order`) occur in `s` as a subsequence
// b, c, a. Runs in O(N log N) with a single left-to-right sweep.
// Throws std::invalid_argument if `order` is not a permutation of s's alphabet.
bool check_with_order(const SockOrdering& s, const TotalOrderCertificate& order);

// Same predicate decided one triple at a time from per-color occurrence
// lists. O(k^3 log N); used to cross-check the sweep.
bool check_with_order_by_triples(const SockOrdering& s, const TotalOrderCertificate& order);

// Tries every total order of the alphabet in lexicographic order of the
// ascending sequence; returns the first that passes.
// Throws GuardExceeded when the alphabet exceeds kMaxOrderAlphabet.
Verdict oracle_by_orders(const SockOrdering& s);

// Depth-first search over push/pop interleavings of a single stack, with
// memoisation of dead states. True iff some run emits every color as one
// contiguous block. Throws GuardExceeded when N exceeds kMaxSimulationLength.
bool oracle_by_simulation(const SockOrdering& s);

// A permutation of 1..n is stack-sortable iff it avoids b, c, a with
// a < b < c. Throws std::invalid_argument if `p` is not a permutation of 1..n.
bool is_stack_sortable_permutation(std::span<const int> p);

}  // namespace footsort::oracle
