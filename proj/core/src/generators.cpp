#include "footsort/generators.hpp"

#include <algorithm>
#include <vector>

namespace footsort::gen {
namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace

SockOrdering random_ordering(Rng& rng, std::size_t n, std::size_t alphabet) {
  alphabet = std::max<std::size_t>(alphabet, 1);
  std::vector<Color> colors(n);
  for (auto& c : colors) c = static_cast<Color>(uniform(rng, 0, alphabet - 1));
  return canonicalize(colors).ordering();
}

SockOrdering random_two_bounded(Rng& rng, std::size_t n) {
  const std::size_t doubled = uniform(rng, 0, n / 2);
  std::vector<Color> colors;
  colors.reserve(n);
  Color next = 0;
  for (std::size_t i = 0; i < doubled; ++i, ++next) {
    colors.push_back(next);
    colors.push_back(next);
  }
  while (colors.size() < n) colors.push_back(next++);
  std::shuffle(colors.begin(), colors.end(), rng);
  return canonicalize(colors).ordering();
}

SockOrdering random_sortable(Rng& rng, std::size_t n, std::size_t max_multiplicity) {
  max_multiplicity = std::max<std::size_t>(max_multiplicity, 1);
  // Sorted output, largest block first: running a stack on this reversed
  // sequence and reversing the result inverts a sorting run.
  std::vector<Color> blocks;
  blocks.reserve(n);
  for (Color c = 0; blocks.size() < n; ++c) {
    const std::size_t k = std::min(uniform(rng, 1, max_multiplicity), n - blocks.size());
    blocks.insert(blocks.end(), k, c);
  }
  std::reverse(blocks.begin(), blocks.end());

  std::vector<Color> stack;
  std::vector<Color> out;
  out.reserve(n);
  std::size_t next = 0;
  std::bernoulli_distribution push(0.5);
  while (out.size() < n) {
    if (next < n && (stack.empty() || push(rng))) {
      stack.push_back(blocks[next++]);
    } else {
      out.push_back(stack.back());
      stack.pop_back();
    }
  }
  std::reverse(out.begin(), out.end());
  return canonicalize(out).ordering();
}

SockOrdering chain(std::size_t n) {
  std::vector<Color> colors;
  colors.reserve(n);
  if (n > 0) colors.push_back(0);
  for (Color i = 1; colors.size() < n; ++i) {
    colors.push_back(i);
    if (colors.size() < n) colors.push_back(i - 1);
  }
  return SockOrdering(std::move(colors));
}

}  // namespace footsort::gen
