#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace footsort {

using Color = std::uint32_t;
using Position = std::int32_t;

// A sequence of sock colors. Color ids are dense: every id lies in [0, size()).
class SockOrdering {
 public:
  SockOrdering() = default;
  explicit SockOrdering(std::vector<Color> colors);
  SockOrdering(std::initializer_list<Color> colors);

  std::span<const Color> colors() const { return colors_; }
  std::size_t size() const { return colors_.size(); }
  bool empty() const { return colors_.empty(); }
  Color operator[](std::size_t i) const { return colors_[i]; }

  auto begin() const { return colors_.begin(); }
  auto end() const { return colors_.end(); }

  // One past the largest color id in use (0 when empty).
  std::size_t color_bound() const { return color_bound_; }
  // Number of distinct colors.
  std::size_t alphabet_size() const { return alphabet_size_; }
  // Every color occurs at most twice.
  bool two_bounded() const { return two_bounded_; }
  // No two adjacent entries are equal.
  bool reduced() const;

  // Distinct colors in order of first occurrence.
  std::vector<Color> alphabet() const;

  // Copy with the sock at `index` removed. Ids are not relabelled.
  SockOrdering without(std::size_t index) const;

  friend bool operator==(const SockOrdering& a, const SockOrdering& b) {
    return a.colors_ == b.colors_;
  }
  friend auto operator<=>(const SockOrdering& a, const SockOrdering& b) {
    return a.colors_ <=> b.colors_;
  }

 private:
  std::vector<Color> colors_;
  std::size_t color_bound_ = 0;
  std::size_t alphabet_size_ = 0;
  bool two_bounded_ = true;
};

// Restricted-growth labelling: first occurrences appear as 0, 1, 2, ...
// Two orderings of the same length are patterns of each other iff their
// canonical forms coincide.
class CanonicalOrdering {
 public:
  CanonicalOrdering() = default;

  const SockOrdering& ordering() const { return ordering_; }
  operator const SockOrdering&() const { return ordering_; }
  std::span<const Color> colors() const { return ordering_.colors(); }
  std::size_t size() const { return ordering_.size(); }

  friend bool operator==(const CanonicalOrdering&, const CanonicalOrdering&) = default;
  friend auto operator<=>(const CanonicalOrdering& a, const CanonicalOrdering& b) {
    return a.ordering_ <=> b.ordering_;
  }

 private:
  friend CanonicalOrdering canonicalize(const SockOrdering& s);
  friend CanonicalOrdering canonicalize(std::span<const Color> colors);
  explicit CanonicalOrdering(SockOrdering s) : ordering_(std::move(s)) {}
  SockOrdering ordering_;
};

// Collapses each maximal run of equal colors to a single sock.
SockOrdering reduce_adjacent(const SockOrdering& s);

CanonicalOrdering canonicalize(const SockOrdering& s);
// Accepts arbitrary (non-dense) color values.
CanonicalOrdering canonicalize(std::span<const Color> colors);

// A total order on the alphabet, smallest color first.
struct TotalOrderCertificate {
  std::vector<Color> ascending;

  friend bool operator==(const TotalOrderCertificate&, const TotalOrderCertificate&) = default;
};

class Verdict {
 public:
  static Verdict sortable(TotalOrderCertificate certificate) {
    return Verdict(std::move(certificate));
  }
  static Verdict not_sortable() { return Verdict(); }

  bool is_sortable() const { return certificate_.has_value(); }
  explicit operator bool() const { return is_sortable(); }
  // Precondition: is_sortable().
  const TotalOrderCertificate& certificate() const { return *certificate_; }

 private:
  Verdict() = default;
  explicit Verdict(TotalOrderCertificate c) : certificate_(std::move(c)) {}
  std::optional<TotalOrderCertificate> certificate_;
};

}  // namespace footsort
