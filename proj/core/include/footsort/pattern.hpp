#pragma once

#include <optional>
#include <vector>

#include "footsort/sock_ordering.hpp"

namespace footsort {

// An occurrence of a needle inside a haystack: needle[j] sits at haystack
// position `positions[j]`, and needle color c is realised by haystack color
// `needle_to_haystack[c]`.
struct Embedding {
  std::vector<Position> positions;
  std::vector<Color> needle_to_haystack;
};

// Finds a subsequence of `haystack` that maps onto `needle` under a color
// bijection. Backtracks over new needle colors only; an already-bound color
// is matched at its earliest admissible occurrence, which never loses a
// solution.
std::optional<Embedding> contains_pattern(const SockOrdering& haystack, const SockOrdering& needle);

}  // namespace footsort
