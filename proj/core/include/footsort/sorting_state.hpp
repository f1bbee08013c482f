#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "footsort/position_index.hpp"
#include "footsort/sock_ordering.hpp"

namespace footsort {

// The simple partial order induced by a prefix of the current string: x >= y
// iff x, y occur as a subsequence of the live socks at positions <= the
// prefix end. An empty optional is the trivial order.
struct SimpleOrder {
  std::optional<Position> dist_min_pos;
};

struct ListNode {
  Color color = 0;
  Position position = 0;
  NodeHandle prev = kNoNode;
  NodeHandle next = kNoNode;
  bool live = false;
};

// Live structures of the decider. Nodes sit in a slab owned by the state and
// are addressed by stable handles; the ordered indexes store handles.
//
//   pos(c)   positions of color c
//   all      every live position (ranked)
//   lonely   positions of colors with exactly one live sock (ranked)
//   second   second-smallest position of each color with >= 2 live socks
//
// The linked list is kept reduced: no two adjacent nodes share a color.
class SortingState {
 public:
  // Builds the list and indexes in one pass, dropping adjacent repeats.
  explicit SortingState(const SockOrdering& s);

  SortingState(const SortingState&) = delete;
  SortingState& operator=(const SortingState&) = delete;

  // Unlinks `h` and repairs every index. If the neighbours of `h` then share
  // a color the later one is deleted as well. Precondition: `h` is live.
  void delete_node(NodeHandle h);

  // Moves the prefix end to the last live position of `a`, then deletes
  // every sock of `a`. Precondition: `a` has a live sock.
  void reduce_color(Color a);

  const ListNode& node(NodeHandle h) const { return nodes_[static_cast<std::size_t>(h)]; }
  NodeHandle head() const { return head_; }
  NodeHandle next(NodeHandle h) const { return node(h).next; }
  NodeHandle prev(NodeHandle h) const { return node(h).prev; }
  std::size_t live_size() const { return all_.size(); }
  std::size_t color_bound() const { return pos_.size(); }

  const SimpleOrder& order() const { return order_; }
  // The live sock that ends the prefix, i.e. the distinguished minimal letter.
  std::optional<IndexEntry> distinguished() const;

  const ColorIndex& pos(Color c) const { return pos_[c]; }
  const RankedIndex& all() const { return all_; }
  const RankedIndex& lonely() const { return lonely_; }
  const ColorIndex& second() const { return second_; }

  // (color, position) of each live node in list order.
  std::vector<std::pair<Color, Position>> list() const;
  std::vector<Color> list_colors() const;

  std::uint64_t map_ops() const { return map_ops_; }
  std::uint64_t deletions() const { return deletions_; }

  // Full O(N log N) consistency sweep; throws std::logic_error on violation.
  void check_invariants() const;

 private:
  std::vector<ListNode> nodes_;
  NodeHandle head_ = kNoNode;
  SimpleOrder order_;
  std::uint64_t map_ops_ = 0;
  std::uint64_t deletions_ = 0;
  std::vector<ColorIndex> pos_;
  RankedIndex all_;
  RankedIndex lonely_;
  ColorIndex second_;
};

}  // namespace footsort
