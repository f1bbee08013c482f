#include "footsort/pattern.hpp"

#include <algorithm>

namespace footsort {
namespace {

constexpr Color kUnbound = ~Color{0};

class EmbeddingSearch {
 public:
  EmbeddingSearch(const SockOrdering& haystack, const SockOrdering& needle)
      : hay_(haystack), needle_(needle),
        occurrences_(haystack.color_bound()),
        needle_remaining_(needle.size()),
        forward_(needle.color_bound(), kUnbound),
        backward_(haystack.color_bound(), kUnbound),
        positions_(needle.size(), 0) {
    for (std::size_t i = 0; i < hay_.size(); ++i) {
      occurrences_[hay_[i]].push_back(static_cast<Position>(i));
    }
    // needle_remaining_[j] = occurrences of needle[j]'s color at index >= j.
    std::vector<std::size_t> count(needle.color_bound(), 0);
    for (std::size_t j = needle.size(); j-- > 0;) {
      needle_remaining_[j] = ++count[needle[j]];
    }
  }

  bool run() { return extend(0, 0); }

  Embedding result() const { return {positions_, forward_}; }

 private:
  // Haystack occurrences of `h` at positions >= from.
  std::size_t occurrences_from(Color h, Position from) const {
    const auto& occ = occurrences_[h];
    return static_cast<std::size_t>(occ.end() - std::lower_bound(occ.begin(), occ.end(), from));
  }

  bool extend(std::size_t j, Position from) {
    if (j == needle_.size()) return true;
    const auto hay_size = static_cast<Position>(hay_.size());
    const auto left = static_cast<Position>(needle_.size() - j);
    if (hay_size - from < left) return false;

    const Color c = needle_[j];
    if (forward_[c] != kUnbound) {
      const auto& occ = occurrences_[forward_[c]];
      auto it = std::lower_bound(occ.begin(), occ.end(), from);
      if (it == occ.end()) return false;
      positions_[j] = *it;
      return extend(j + 1, *it + 1);
    }

    for (Position i = from; i <= hay_size - left; ++i) {
      const Color h = hay_[static_cast<std::size_t>(i)];
      if (backward_[h] != kUnbound) continue;
      if (occurrences_from(h, i) < needle_remaining_[j]) continue;
      forward_[c] = h;
      backward_[h] = c;
      positions_[j] = i;
      if (extend(j + 1, i + 1)) return true;
      forward_[c] = kUnbound;
      backward_[h] = kUnbound;
    }
    return false;
  }

  const SockOrdering& hay_;
  const SockOrdering& needle_;
  std::vector<std::vector<Position>> occurrences_;
  std::vector<std::size_t> needle_remaining_;
  std::vector<Color> forward_;
  std::vector<Color> backward_;
  std::vector<Position> positions_;
};

}  // namespace

std::optional<Embedding> contains_pattern(const SockOrdering& haystack, const SockOrdering& needle) {
  if (needle.size() > haystack.size()) return std::nullopt;
  EmbeddingSearch search(haystack, needle);
  if (!search.run()) return std::nullopt;
  return search.result();
}

}  // namespace footsort
