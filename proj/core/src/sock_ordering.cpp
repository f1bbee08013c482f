#include "footsort/sock_ordering.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace footsort {

SockOrdering::SockOrdering(std::vector<Color> colors) : colors_(std::move(colors)) {
  const std::size_t n = colors_.size();
  std::vector<std::uint8_t> seen;
  for (Color c : colors_) {
    if (c >= n) {
      throw std::invalid_argument("color id " + std::to_string(c) +
                                  " out of range for ordering of length " + std::to_string(n));
    }
    if (c >= seen.size()) seen.resize(c + 1, 0);
    if (seen[c] == 0) ++alphabet_size_;
    if (seen[c] < 3) ++seen[c];
    if (seen[c] > 2) two_bounded_ = false;
  }
  color_bound_ = seen.size();
}

SockOrdering::SockOrdering(std::initializer_list<Color> colors)
    : SockOrdering(std::vector<Color>(colors)) {}

bool SockOrdering::reduced() const {
  return std::adjacent_find(colors_.begin(), colors_.end()) == colors_.end();
}

std::vector<Color> SockOrdering::alphabet() const {
  std::vector<bool> seen(color_bound_, false);
  std::vector<Color> out;
  out.reserve(alphabet_size_);
  for (Color c : colors_) {
    if (!seen[c]) {
      seen[c] = true;
      out.push_back(c);
    }
  }
  return out;
}

SockOrdering SockOrdering::without(std::size_t index) const {
  if (index >= colors_.size()) throw std::out_of_range("SockOrdering::without");
  const Color removed = colors_[index];
  std::vector<Color> out;
  out.reserve(colors_.size() - 1);
  bool still_present = false;
  for (std::size_t i = 0; i < colors_.size(); ++i) {
    if (i == index) continue;
    out.push_back(colors_[i]);
    still_present |= colors_[i] == removed;
  }
  // Keep ids dense when the last sock of a color disappears.
  if (!still_present) {
    for (Color& c : out) {
      if (c > removed) --c;
    }
  }
  return SockOrdering(std::move(out));
}

SockOrdering reduce_adjacent(const SockOrdering& s) {
  std::vector<Color> out;
  out.reserve(s.size());
  for (Color c : s) {
    if (out.empty() || out.back() != c) out.push_back(c);
  }
  return SockOrdering(std::move(out));
}

CanonicalOrdering canonicalize(std::span<const Color> colors) {
  std::vector<Color> label;
  std::vector<Color> out;
  out.reserve(colors.size());
  constexpr Color kUnset = ~Color{0};
  Color next = 0;
  for (Color c : colors) {
    if (c >= label.size()) label.resize(static_cast<std::size_t>(c) + 1, kUnset);
    if (label[c] == kUnset) label[c] = next++;
    out.push_back(label[c]);
  }
  return CanonicalOrdering(SockOrdering(std::move(out)));
}

CanonicalOrdering canonicalize(const SockOrdering& s) { return canonicalize(s.colors()); }

}  // namespace footsort
