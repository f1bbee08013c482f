#include "footsort/sorting_state.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace footsort {

SortingState::SortingState(const SockOrdering& s)
    : pos_(s.color_bound(), ColorIndex(&map_ops_)),
      all_(&map_ops_),
      lonely_(&map_ops_),
      second_(&map_ops_) {
  if (!s.empty()) order_.dist_min_pos = 0;
  nodes_.reserve(s.size());
  NodeHandle tail = kNoNode;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Color c = s[i];
    if (tail != kNoNode && nodes_[static_cast<std::size_t>(tail)].color == c) continue;

    const auto h = static_cast<NodeHandle>(nodes_.size());
    const auto p = static_cast<Position>(i);
    nodes_.push_back(ListNode{c, p, tail, kNoNode, true});
    if (tail == kNoNode) {
      head_ = h;
    } else {
      nodes_[static_cast<std::size_t>(tail)].next = h;
    }
    tail = h;

    pos_[c].insert(p, h);
    all_.insert(p, h);
    if (pos_[c].size() == 1) {
      lonely_.insert(p, h);
    } else if (pos_[c].size() == 2) {
      lonely_.erase(pos_[c].front()->position);
      second_.insert(p, h);
    }
  }
}

void SortingState::delete_node(NodeHandle h) {
  while (h != kNoNode) {
    ListNode& n = nodes_[static_cast<std::size_t>(h)];
    const Color color = n.color;
    const Position cur = n.position;
    ColorIndex& mine = pos_[color];

    if (mine.size() == 1) {
      lonely_.erase(cur);
    } else {
      const auto first = mine.nth_small(0);
      const auto second = mine.nth_small(1);
      if (cur == first->position || cur == second->position) {
        second_.erase(second->position);
        if (mine.size() >= 3) {
          const auto third = mine.nth_small(2);
          second_.insert(third->position, third->node);
        } else {
          const auto& other = cur == first->position ? *second : *first;
          lonely_.insert(other.position, other.node);
        }
      }
    }
    mine.erase(cur);
    all_.erase(cur);

    const NodeHandle before = n.prev;
    const NodeHandle after = n.next;
    if (before != kNoNode) nodes_[static_cast<std::size_t>(before)].next = after;
    if (after != kNoNode) nodes_[static_cast<std::size_t>(after)].prev = before;
    if (head_ == h) head_ = after;
    n.live = false;
    n.prev = n.next = kNoNode;
    ++deletions_;

    h = kNoNode;
    if (before != kNoNode && after != kNoNode &&
        nodes_[static_cast<std::size_t>(before)].color == nodes_[static_cast<std::size_t>(after)].color) {
      h = after;
    }
  }
}

void SortingState::reduce_color(Color a) {
  order_.dist_min_pos = pos_[a].back()->position;
  while (!pos_[a].empty()) delete_node(pos_[a].front()->node);
}

std::optional<IndexEntry> SortingState::distinguished() const {
  if (!order_.dist_min_pos) return std::nullopt;
  return all_.at_most(*order_.dist_min_pos);
}

std::vector<std::pair<Color, Position>> SortingState::list() const {
  std::vector<std::pair<Color, Position>> out;
  for (NodeHandle h = head_; h != kNoNode; h = next(h)) out.emplace_back(node(h).color, node(h).position);
  return out;
}

std::vector<Color> SortingState::list_colors() const {
  std::vector<Color> out;
  for (NodeHandle h = head_; h != kNoNode; h = next(h)) out.push_back(node(h).color);
  return out;
}

void SortingState::check_invariants() const {
  auto fail = [](const std::string& what) { throw std::logic_error("SortingState invariant: " + what); };

  std::map<Position, NodeHandle> walked;
  std::vector<std::vector<std::pair<Position, NodeHandle>>> by_color(pos_.size());
  NodeHandle prev_h = kNoNode;
  for (NodeHandle h = head_; h != kNoNode; h = next(h)) {
    const ListNode& n = node(h);
    if (!n.live) fail("dead node linked");
    if (n.prev != prev_h) fail("broken back link");
    if (prev_h != kNoNode) {
      if (node(prev_h).color == n.color) fail("list not reduced");
      if (node(prev_h).position >= n.position) fail("positions not increasing");
    }
    walked.emplace(n.position, h);
    by_color[n.color].emplace_back(n.position, h);
    prev_h = h;
  }

  std::size_t all_count = 0;
  all_.for_each([&](IndexEntry e) {
    ++all_count;
    auto it = walked.find(e.position);
    if (it == walked.end() || it->second != e.node) fail("all index disagrees with list");
  });
  if (all_count != walked.size()) fail("all index size");

  std::map<Position, NodeHandle> expect_lonely;
  std::map<Position, NodeHandle> expect_second;
  for (std::size_t c = 0; c < pos_.size(); ++c) {
    const auto& live = by_color[c];
    std::size_t k = 0;
    pos_[c].for_each([&](IndexEntry e) {
      if (k >= live.size() || live[k].first != e.position || live[k].second != e.node) {
        fail("pos index of color " + std::to_string(c) + " disagrees with list");
      }
      ++k;
    });
    if (k != live.size()) fail("pos index size of color " + std::to_string(c));
    if (live.size() == 1) expect_lonely.emplace(live[0]);
    if (live.size() >= 2) expect_second.emplace(live[1]);
  }

  auto same = [&](const auto& index, const std::map<Position, NodeHandle>& want, const char* name) {
    std::size_t k = 0;
    index.for_each([&](IndexEntry e) {
      auto it = want.find(e.position);
      if (it == want.end() || it->second != e.node) fail(std::string(name) + " holds a stray entry");
      ++k;
    });
    if (k != want.size()) fail(std::string(name) + " is missing entries");
  };
  same(lonely_, expect_lonely, "lonely index");
  same(second_, expect_second, "second index");
}

}  // namespace footsort
