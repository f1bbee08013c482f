#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iterator>
#include <map>
#include <optional>
#include <type_traits>

#include <ext/pb_ds/assoc_container.hpp>
#include <ext/pb_ds/tree_policy.hpp>

#include "footsort/sock_ordering.hpp"

namespace footsort {

using NodeHandle = std::int32_t;
inline constexpr NodeHandle kNoNode = -1;

struct IndexEntry {
  Position position;
  NodeHandle node;

  friend bool operator==(const IndexEntry&, const IndexEntry&) = default;
};

// Ordered map position -> list node, counting every operation against a
// shared counter. The ranked variant sits on an order-statistics red-black
// tree so that interval counts are logarithmic as well.
template <bool Ranked>
class PositionIndex {
  using Tree = std::conditional_t<
      Ranked,
      __gnu_pbds::tree<Position, NodeHandle, std::less<Position>, __gnu_pbds::rb_tree_tag,
                       __gnu_pbds::tree_order_statistics_node_update>,
      std::map<Position, NodeHandle>>;

 public:
  explicit PositionIndex(std::uint64_t* ops = nullptr) : ops_(ops) {}

  void insert(Position p, NodeHandle node) {
    tick();
    tree_.insert({p, node});
  }
  void erase(Position p) {
    tick();
    tree_.erase(p);
  }

  std::size_t size() const { return tree_.size(); }
  bool empty() const { return tree_.empty(); }
  bool contains(Position p) const {
    tick();
    return tree_.find(p) != tree_.end();
  }

  std::optional<IndexEntry> front() const {
    tick();
    if (tree_.empty()) return std::nullopt;
    return entry(tree_.begin());
  }
  std::optional<IndexEntry> back() const {
    tick();
    if (tree_.empty()) return std::nullopt;
    return entry(std::prev(tree_.end()));
  }
  // k-th smallest entry for small k (0-based); walks k steps from the front.
  std::optional<IndexEntry> nth_small(std::size_t k) const {
    tick();
    if (k >= tree_.size()) return std::nullopt;
    auto it = tree_.begin();
    std::advance(it, static_cast<std::ptrdiff_t>(k));
    return entry(it);
  }
  // Smallest key >= p.
  std::optional<IndexEntry> at_least(Position p) const {
    tick();
    auto it = tree_.lower_bound(p);
    if (it == tree_.end()) return std::nullopt;
    return entry(it);
  }
  // Smallest key > p.
  std::optional<IndexEntry> after(Position p) const {
    tick();
    auto it = tree_.upper_bound(p);
    if (it == tree_.end()) return std::nullopt;
    return entry(it);
  }
  // Largest key <= p.
  std::optional<IndexEntry> at_most(Position p) const {
    tick();
    auto it = tree_.upper_bound(p);
    if (it == tree_.begin()) return std::nullopt;
    return entry(std::prev(it));
  }

  // Number of keys in the open interval (lo, hi).
  std::size_t count_between(Position lo, Position hi) const
    requires Ranked
  {
    tick();
    if (hi <= lo + 1) return 0;
    return tree_.order_of_key(hi) - tree_.order_of_key(lo + 1);
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (const auto& [p, n] : tree_) fn(IndexEntry{p, n});
  }

 private:
  template <class It>
  static IndexEntry entry(It it) {
    return {it->first, it->second};
  }
  void tick() const {
    if (ops_) ++*ops_;
  }

  Tree tree_;
  std::uint64_t* ops_;
};

using ColorIndex = PositionIndex<false>;
using RankedIndex = PositionIndex<true>;

}  // namespace footsort
