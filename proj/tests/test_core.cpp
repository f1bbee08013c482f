#include <doctest.h>

#include <random>
#include <stdexcept>

#include "footsort/generators.hpp"
#include "footsort/pattern.hpp"
#include "footsort/sock_ordering.hpp"
#include "footsort/text_format.hpp"
#include "support.hpp"

using namespace footsort;
using footsort::test::colors_of;
using footsort::test::S;

TEST_CASE("ordering basics") {
  const SockOrdering s{0, 1, 0, 2, 1};
  CHECK(s.size() == 5);
  CHECK(s.alphabet_size() == 3);
  CHECK(s.two_bounded());
  CHECK(s.reduced());
  CHECK(s.alphabet() == std::vector<Color>{0, 1, 2});
  CHECK_FALSE(SockOrdering{0, 0, 0}.two_bounded());
  CHECK_FALSE(SockOrdering{0, 0, 1}.reduced());
  CHECK_THROWS_AS(SockOrdering({0, 5}), std::invalid_argument);
  CHECK(SockOrdering{}.empty());
}

TEST_CASE("without keeps ids dense") {
  const SockOrdering s = S("abcab");
  CHECK(colors_of(s.without(2)) == std::vector<Color>{0, 1, 0, 1});
  CHECK(colors_of(s.without(0)) == std::vector<Color>{1, 2, 0, 1});
  CHECK(colors_of(S("abc").without(0)) == std::vector<Color>{0, 1});
  CHECK_THROWS_AS(s.without(5), std::out_of_range);
}

TEST_CASE("reduce_adjacent") {
  CHECK(colors_of(reduce_adjacent(S("aabbba"))) == std::vector<Color>{0, 1, 0});
  CHECK(colors_of(reduce_adjacent(S("abab"))) == std::vector<Color>{0, 1, 0, 1});
  CHECK(reduce_adjacent(SockOrdering{}).empty());
}

TEST_CASE("canonicalize relabels by first occurrence") {
  const std::vector<Color> raw{2, 2, 7};
  CHECK(colors_of(canonicalize(raw)) == std::vector<Color>{0, 0, 1});
  const std::vector<Color> raw2{3, 1, 3, 0};
  CHECK(colors_of(canonicalize(raw2)) == std::vector<Color>{0, 1, 0, 2});
  CHECK(canonicalize(S("cab")) == canonicalize(S("abc")));
}

TEST_CASE("reduce and canonicalize are idempotent") {
  gen::Rng rng(7);
  for (int t = 0; t < 300; ++t) {
    const auto s = gen::random_ordering(rng, 1 + t % 15, 1 + t % 5);
    const auto r = reduce_adjacent(s);
    CHECK(r.reduced());
    CHECK(reduce_adjacent(r) == r);
    const auto c = canonicalize(s);
    CHECK(canonicalize(c.ordering()) == c);
  }
}

TEST_CASE("text format round trip") {
  const auto p = parse_ordering("abcab");
  CHECK(colors_of(p.ordering) == std::vector<Color>{0, 1, 2, 0, 1});
  CHECK(format_ordering(p.ordering) == "abcab");

  const auto q = parse_ordering("10 30 10 20");
  CHECK(colors_of(q.ordering) == std::vector<Color>{0, 2, 0, 1});
  CHECK(q.labels == std::vector<std::string>{"10", "20", "30"});
  CHECK(format_colors(q.ordering.colors(), q.labels) == "10 30 10 20");

  CHECK(parse_ordering("  \n").ordering.empty());
  CHECK_THROWS(parse_ordering("a-b"));
  CHECK(letter_for(26) == 'A');
}

TEST_CASE("contains_pattern") {
  CHECK(contains_pattern(S("abab"), S("aabb")) == std::nullopt);
  CHECK(contains_pattern(S("aabb"), S("abab")) == std::nullopt);
  CHECK(contains_pattern(S("abab"), S("abab")).has_value());

  const auto e = contains_pattern(S("xcabcyab"), S("abab"));
  REQUIRE(e.has_value());
  CHECK(e->positions.size() == 4);
  for (std::size_t j = 1; j < e->positions.size(); ++j) CHECK(e->positions[j - 1] < e->positions[j]);

  // A color bijection: two needle colors never share a haystack color.
  CHECK(contains_pattern(S("aaaa"), S("ab")) == std::nullopt);
  CHECK(contains_pattern(S("abc"), SockOrdering{}).has_value());
}

TEST_CASE("pattern containment: embedding is checked, reflexive, transitive") {
  gen::Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const auto big = gen::random_ordering(rng, 10, 4);
    CHECK(contains_pattern(big, big).has_value());

    auto mid = big.without(std::uniform_int_distribution<std::size_t>(0, 9)(rng));
    auto small = mid.without(std::uniform_int_distribution<std::size_t>(0, 8)(rng));
    CHECK(contains_pattern(big, mid).has_value());
    CHECK(contains_pattern(mid, small).has_value());
    const auto e = contains_pattern(big, small);
    REQUIRE(e.has_value());
    for (std::size_t j = 0; j < small.size(); ++j) {
      CHECK(big[static_cast<std::size_t>(e->positions[j])] == e->needle_to_haystack[small[j]]);
    }
  }
}
