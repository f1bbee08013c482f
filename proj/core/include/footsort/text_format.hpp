#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "footsort/sock_ordering.hpp"

namespace footsort {

// Text form of a sock ordering. Two spellings are accepted:
//   * a single token of letters/digits, where a-z, A-Z, 0-9 stand for
//     ids 0..61 (so "abcab" is [0,1,2,0,1]);
//   * whitespace-separated decimal ids ("0 1 2 0 1").
// Input containing whitespace between tokens is read as ids; a lone token is
// read as letters. Ids are compacted to [0, alphabet) preserving their order,
// and the original spelling of each id is kept in `labels`.
struct ParsedOrdering {
  SockOrdering ordering;
  std::vector<std::string> labels;  // labels[color] = original token
};

ParsedOrdering parse_ordering(std::string_view text);

// Letter for an id in [0, 62).
char letter_for(Color c);

// Letters when every id fits the 62-letter alphabet, otherwise ids joined by spaces.
std::string format_ordering(const SockOrdering& s);
std::string format_colors(std::span<const Color> colors);
// Uses the caller's labels; concatenates single-character labels, else space-joins.
std::string format_colors(std::span<const Color> colors, const std::vector<std::string>& labels);

}  // namespace footsort
