#include <doctest.h>

#include "footsort/classifier.hpp"
#include "footsort/decider.hpp"
#include "footsort/generators.hpp"
#include "footsort/oracle.hpp"
#include "footsort/sorting_state.hpp"
#include "support.hpp"

using namespace footsort;
using footsort::test::S;

namespace {

std::vector<Position> keys(const ColorIndex& idx) {
  std::vector<Position> out;
  idx.for_each([&](const IndexEntry& e) { out.push_back(e.position); });
  return out;
}

std::vector<Position> keys(const RankedIndex& idx) {
  std::vector<Position> out;
  idx.for_each([&](const IndexEntry& e) { out.push_back(e.position); });
  return out;
}

NodeHandle handle_at(const SortingState& st, Position p) { return st.all().at_least(p)->node; }

using Pairs = std::vector<std::pair<Color, Position>>;

}  // namespace

TEST_CASE("preprocess") {
  SUBCASE("adjacent repeats collapse") {
    SortingState st(S("aab"));
    CHECK(st.list() == Pairs{{0, 0}, {1, 2}});
    CHECK(keys(st.lonely()) == std::vector<Position>{0, 2});
    CHECK(st.second().empty());
    st.check_invariants();
  }
  SUBCASE("abab") {
    SortingState st(S("abab"));
    CHECK(keys(st.second()) == std::vector<Position>{2, 3});
    CHECK(st.lonely().empty());
    CHECK(st.all().size() == 4);
    CHECK(st.order().dist_min_pos == 0);
  }
  SUBCASE("empty") {
    SortingState st(SockOrdering{});
    CHECK(st.live_size() == 0);
    CHECK_FALSE(st.order().dist_min_pos.has_value());
    CHECK(decide(SockOrdering{}).is_sortable());
    CHECK(decide(SockOrdering{}).certificate().ascending.empty());
  }
}

TEST_CASE("delete_node") {
  SUBCASE("aba: deleting b cascades") {
    SortingState st(S("aba"));
    st.delete_node(handle_at(st, 1));
    CHECK(st.list() == Pairs{{0, 0}});
    CHECK(keys(st.lonely()) == std::vector<Position>{0});
    CHECK(st.deletions() == 2);
    st.check_invariants();
  }
  SUBCASE("abcabc: first a") {
    SortingState st(S("abcabc"));
    st.delete_node(handle_at(st, 0));
    CHECK(keys(st.lonely()) == std::vector<Position>{3});
    CHECK(keys(st.second()) == std::vector<Position>{4, 5});
    st.check_invariants();
  }
  SUBCASE("abab: first a") {
    SortingState st(S("abab"));
    st.delete_node(handle_at(st, 0));
    CHECK(keys(st.lonely()) == std::vector<Position>{2});
    CHECK(keys(st.second()) == std::vector<Position>{3});
    st.check_invariants();
  }
  SUBCASE("third occurrence becomes second") {
    SortingState st(S("abacab"));
    st.delete_node(handle_at(st, 0));
    CHECK(keys(st.second()) == std::vector<Position>{4, 5});
    st.check_invariants();
  }
}

TEST_CASE("reduce_color") {
  SUBCASE("aba") {
    SortingState st(S("aba"));
    st.reduce_color(0);
    CHECK(st.list_colors() == std::vector<Color>{1});
    CHECK(st.order().dist_min_pos == 2);
  }
  SUBCASE("abcabc") {
    SortingState st(S("abcabc"));
    st.reduce_color(0);
    CHECK(st.list_colors() == std::vector<Color>{1, 2, 1, 2});
    CHECK(st.lonely().empty());
    CHECK(st.order().dist_min_pos == 3);
    st.check_invariants();
  }
  SUBCASE("ab") {
    SortingState st(S("ab"));
    st.reduce_color(1);
    CHECK(st.list_colors() == std::vector<Color>{0});
    CHECK(st.order().dist_min_pos == 1);
  }
}

TEST_CASE("decide examples") {
  CHECK_FALSE(decide(S("abcdbacd")).is_sortable());
  CHECK(decide(S("abab")).is_sortable());
  CHECK(decide(S("aabb")).is_sortable());

  const auto v = decide(S("abcab"));
  REQUIRE(v.is_sortable());
  CHECK(v.certificate().ascending == test::order_of("cba").ascending);
  CHECK(oracle::check_with_order(S("abcab"), v.certificate()));

  const auto ab = decide(S("ab"));
  REQUIRE(ab.is_sortable());
  CHECK(ab.certificate().ascending == test::order_of("ba").ascending);

  for (const auto& p : sporadic_table()) CHECK_FALSE(decide(S(p.letters)).is_sortable());
}

TEST_CASE("abcdacd: floor of the prefix end decides minimality") {
  const auto s = S("abcdacd");
  CHECK(oracle::oracle_by_orders(s).is_sortable());
  CHECK(decide(s).is_sortable());
  DecideOptions literal;
  literal.literal_minimality_test = true;
  CHECK_FALSE(decide(s, nullptr, literal).is_sortable());
}

TEST_CASE("step-by-step invariants and branch coverage") {
  DecideReport total;
  DecideOptions options;
  options.check_invariants = true;
  EnumerationOptions eo;
  eo.two_bounded = false;
  eo.max_colors = 5;
  for (std::size_t len = 1; len <= 9; ++len) {
    for_each_canonical(len, eo, [&](const CanonicalOrdering& c) {
      SortingState st(c);
      ReductionTrace trace;
      StepResult r = StepResult::kContinue;
      while (r == StepResult::kContinue) {
        r = decide_step(st, trace, &total, options);
        st.check_invariants();
      }
      const bool expected = oracle::oracle_by_orders(c).is_sortable();
      REQUIRE((r == StepResult::kSortable) == expected);
      if (r == StepResult::kSortable) {
        trace.sortable = true;
        CHECK(oracle::check_with_order(c, extract_certificate(c, trace, st)));
      }
    });
  }
  for (int b = 0; b < kBranchCount; ++b) {
    CAPTURE(b);
    CHECK(total.branch_counts[b] > 0);
  }
}

TEST_CASE("decide is invariant under collapsing repeats") {
  gen::Rng rng(21);
  for (int t = 0; t < 2000; ++t) {
    const auto s = gen::random_ordering(rng, 2 + t % 18, 2 + t % 6);
    const auto v = decide(s);
    CHECK(v.is_sortable() == decide(reduce_adjacent(s)).is_sortable());
    if (v) CHECK(oracle::check_with_order(s, v.certificate()));
  }
}

TEST_CASE("generated sortable inputs are sortable") {
  gen::Rng rng(4);
  for (int t = 0; t < 200; ++t) {
    const auto s = gen::random_sortable(rng, 50 + t, 1 + t % 6);
    const auto v = decide(s);
    REQUIRE(v.is_sortable());
    CHECK(oracle::check_with_order(s, v.certificate()));
  }
  CHECK(decide(gen::chain(1001)).is_sortable());
}

TEST_CASE("report counts") {
  DecideReport r;
  decide(S("abcdbacd"), &r);
  CHECK(r.n == 8);
  CHECK(r.map_ops > 0);
  CHECK(r.iterations >= 1);
  CHECK(r.reductions >= 1);
}
