#include "footsort/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

namespace footsort::oracle {
namespace {

constexpr std::size_t kNoRank = std::numeric_limits<std::size_t>::max();

// rank[color] for colors of `s`; validates that `order` is exactly s's alphabet.
std::vector<std::size_t> ranks_for(const SockOrdering& s, const TotalOrderCertificate& order) {
  std::vector<std::size_t> rank(s.color_bound(), kNoRank);
  for (std::size_t i = 0; i < order.ascending.size(); ++i) {
    const Color c = order.ascending[i];
    if (c >= rank.size()) throw std::invalid_argument("order names a color absent from the ordering");
    if (rank[c] != kNoRank) throw std::invalid_argument("order repeats a color");
    rank[c] = i;
  }
  for (Color c : s) {
    if (rank[c] == kNoRank) throw std::invalid_argument("order does not cover the alphabet");
  }
  if (order.ascending.size() != s.alphabet_size()) {
    throw std::invalid_argument("order names a color absent from the ordering");
  }
  return rank;
}

}  // namespace

bool check_with_order(const SockOrdering& s, const TotalOrderCertificate& order) {
  const auto rank = ranks_for(s, order);
  const std::size_t n = s.size();
  if (n < 3) return true;

  // suffix_min[j] = smallest rank among positions >= j.
  std::vector<std::size_t> suffix_min(n + 1, kNoRank);
  for (std::size_t j = n; j-- > 0;) suffix_min[j] = std::min(suffix_min[j + 1], rank[s[j]]);

  // For each middle position j (the "c"), the best "b" is the largest earlier
  // rank still below rank(c); a violation needs a later rank below that.
  std::set<std::size_t> seen;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const std::size_t rc = rank[s[j]];
    auto it = seen.lower_bound(rc);
    if (it != seen.begin()) {
      const std::size_t rb = *std::prev(it);
      if (suffix_min[j + 1] < rb) return false;
    }
    seen.insert(rc);
  }
  return true;
}

bool check_with_order_by_triples(const SockOrdering& s, const TotalOrderCertificate& order) {
  (void)ranks_for(s, order);
  std::vector<std::vector<Position>> occ(s.color_bound());
  for (std::size_t i = 0; i < s.size(); ++i) occ[s[i]].push_back(static_cast<Position>(i));

  const auto& asc = order.ascending;
  for (std::size_t ia = 0; ia < asc.size(); ++ia) {
    for (std::size_t ib = ia + 1; ib < asc.size(); ++ib) {
      for (std::size_t ic = ib + 1; ic < asc.size(); ++ic) {
        const auto& a = occ[asc[ia]];
        const auto& b = occ[asc[ib]];
        const auto& c = occ[asc[ic]];
        // earliest b, then earliest c after it, then any a after that
        auto c_it = std::upper_bound(c.begin(), c.end(), b.front());
        if (c_it != c.end() && a.back() > *c_it) return false;
      }
    }
  }
  return true;
}

Verdict oracle_by_orders(const SockOrdering& s) {
  std::vector<Color> letters = s.alphabet();
  const std::size_t k = letters.size();
  if (k > kMaxOrderAlphabet) {
    throw GuardExceeded("oracle_by_orders: alphabet of " + std::to_string(k) +
                        " colors exceeds the limit of " + std::to_string(kMaxOrderAlphabet));
  }
  std::sort(letters.begin(), letters.end());
  std::vector<std::size_t> index(s.color_bound(), 0);
  for (std::size_t i = 0; i < k; ++i) index[letters[i]] = i;

  // after[b][c]: letters occurring after the first c that follows the first b.
  std::vector<std::uint32_t> suffix(s.size() + 1, 0);
  for (std::size_t i = s.size(); i-- > 0;) suffix[i] = suffix[i + 1] | (1u << index[s[i]]);
  std::vector<Position> first(k, -1);
  for (std::size_t i = s.size(); i-- > 0;) first[index[s[i]]] = static_cast<Position>(i);
  std::vector<std::uint32_t> after(k * k, 0);
  for (std::size_t b = 0; b < k; ++b) {
    for (std::size_t pos = static_cast<std::size_t>(first[b]) + 1; pos < s.size(); ++pos) {
      const std::size_t c = index[s[pos]];
      if (c == b || after[b * k + c] != 0) continue;
      after[b * k + c] = suffix[pos + 1] & ~((1u << b) | (1u << c));
      if (after[b * k + c] == 0) after[b * k + c] = 0x80000000u;  // seen, nothing after
    }
  }
  for (auto& m : after) m &= 0x7fffffffu;

  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint32_t> below(k);
  do {
    // perm lists indices ascending; below[x] = letters ranked under x.
    std::uint32_t acc = 0;
    for (std::size_t r = 0; r < k; ++r) {
      below[perm[r]] = acc;
      acc |= 1u << perm[r];
    }
    bool ok = true;
    for (std::size_t rb = 0; rb < k && ok; ++rb) {
      const std::size_t b = perm[rb];
      for (std::size_t rc = rb + 1; rc < k; ++rc) {
        if (after[b * k + perm[rc]] & below[b]) {
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      TotalOrderCertificate cert;
      for (std::size_t x : perm) cert.ascending.push_back(letters[x]);
      return Verdict::sortable(std::move(cert));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Verdict::not_sortable();
}

namespace {

class StackMachine {
 public:
  explicit StackMachine(const CanonicalOrdering& s) : input_(s.colors().begin(), s.colors().end()) {
    const std::size_t colors = s.ordering().color_bound();
    remaining_.assign(colors, 0);
    for (Color c : input_) ++remaining_[c];
  }

  bool solve() { return search(0, kNone, 0); }

 private:
  static constexpr int kNone = -1;

  // remaining_[c] counts socks of c not yet emitted (in input or on the stack).
  bool search(std::size_t next, int current, std::uint32_t closed) {
    if (next == input_.size() && stack_.empty()) return true;

    std::string key;
    key.reserve(stack_.size() + 6);
    key.push_back(static_cast<char>(next));
    key.push_back(static_cast<char>(current + 1));
    key.append(reinterpret_cast<const char*>(&closed), sizeof closed);
    key.append(stack_.begin(), stack_.end());
    if (dead_.contains(key)) return false;

    if (next < input_.size()) {
      stack_.push_back(static_cast<char>(input_[next]));
      const bool ok = search(next + 1, current, closed);
      stack_.pop_back();
      if (ok) return true;
    }

    if (!stack_.empty()) {
      const int top = static_cast<unsigned char>(stack_.back());
      bool allowed = true;
      int next_current = current;
      std::uint32_t next_closed = closed;
      if (top != current) {
        if (closed & (1u << top)) {
          allowed = false;
        } else if (current != kNone) {
          // Switching seals `current`; any of its socks still pending are stranded.
          allowed = remaining_[static_cast<std::size_t>(current)] == 0;
          next_closed |= 1u << current;
        }
        next_current = top;
      }
      if (allowed) {
        stack_.pop_back();
        --remaining_[static_cast<std::size_t>(top)];
        const bool ok = search(next, next_current, next_closed);
        ++remaining_[static_cast<std::size_t>(top)];
        stack_.push_back(static_cast<char>(top));
        if (ok) return true;
      }
    }

    dead_.insert(std::move(key));
    return false;
  }

  std::vector<Color> input_;
  std::vector<std::size_t> remaining_;
  std::string stack_;
  std::unordered_set<std::string> dead_;
};

}  // namespace

bool oracle_by_simulation(const SockOrdering& s) {
  if (s.size() > kMaxSimulationLength) {
    throw GuardExceeded("oracle_by_simulation: length " + std::to_string(s.size()) +
                        " exceeds the limit of " + std::to_string(kMaxSimulationLength));
  }
  StackMachine machine(canonicalize(s));
  return machine.solve();
}

bool is_stack_sortable_permutation(std::span<const int> p) {
  const std::size_t n = p.size();
  std::vector<bool> seen(n, false);
  std::vector<Color> colors;
  colors.reserve(n);
  for (int v : p) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v - 1)]) {
      throw std::invalid_argument("is_stack_sortable_permutation: not a permutation of 1..n");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
    colors.push_back(static_cast<Color>(v - 1));
  }
  TotalOrderCertificate natural;
  natural.ascending.resize(n);
  std::iota(natural.ascending.begin(), natural.ascending.end(), Color{0});
  return check_with_order(SockOrdering(std::move(colors)), natural);
}

}  // namespace footsort::oracle
