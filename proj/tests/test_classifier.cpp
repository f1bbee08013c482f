#include <doctest.h>

#include <set>

#include "family_certificates.hpp"
#include "footsort/classifier.hpp"
#include "footsort/decider.hpp"
#include "footsort/generators.hpp"
#include "footsort/oracle.hpp"
#include "footsort/text_format.hpp"
#include "support.hpp"

using namespace footsort;
using footsort::test::S;

namespace {

// Brute force over all words in {0..L-1}^L: restricted growth, no equal
// neighbours, optionally at most two of each letter.
std::size_t count_words(std::size_t len, bool two_bounded) {
  std::size_t total = 0;
  std::vector<Color> w(len, 0);
  while (true) {
    bool ok = true;
    Color top = 0;
    std::vector<int> seen(len + 1, 0);
    for (std::size_t i = 0; i < len && ok; ++i) {
      if (w[i] > top || (i == 0 && w[i] != 0)) ok = false;
      if (i > 0 && w[i] == w[i - 1]) ok = false;
      if (++seen[w[i]] > 2 && two_bounded) ok = false;
      if (w[i] == top) ++top;
    }
    total += ok;
    std::size_t k = 0;
    while (k < len && ++w[k] == len) w[k++] = 0;
    if (k == len) break;
  }
  return total;
}

bool sortable_by_orders(const SockOrdering& s) { return oracle::oracle_by_orders(s).is_sortable(); }

}  // namespace

TEST_CASE("sporadic table") {
  const auto table = sporadic_table();
  REQUIRE(table.size() == 14);
  std::set<CanonicalOrdering> distinct;
  for (const auto& p : table) {
    const auto s = S(p.letters);
    CHECK(s.two_bounded());
    CHECK(s.reduced());
    CHECK(canonicalize(s).ordering() == s);
    distinct.insert(canonicalize(s));
  }
  CHECK(distinct.size() == 14);
}

TEST_CASE("family generators") {
  CHECK(format_ordering(generate_family(Family::kA, 2).ordering) == "abcdabd");
  for (Family f : kAllFamilies) {
    CHECK_THROWS_AS(generate_family(f, family_min_n(f) - 1), std::out_of_range);
    for (int n = family_min_n(f); n <= 8; ++n) {
      const auto inst = generate_family(f, n);
      CHECK(inst.ordering.size() == family_length(f, n));
      CHECK(inst.ordering.ordering().two_bounded());
      CHECK(inst.ordering.ordering().reduced());
    }
  }
  CHECK(family_name(Family::kBPrime) == "B'");
}

TEST_CASE("family deletion certificates") {
  for (Family f : kAllFamilies) {
    for (int n = family_min_n(f); n <= 6; ++n) {
      // The template is the same word the generator produces.
      const auto t = test::family_template(f, n);
      CHECK(canonicalize(t.word) == generate_family(f, n).ordering);
      const auto failures = test::check_family_certificates(f, n);
      for (const auto& msg : failures) FAIL_CHECK(msg);
    }
  }
}

TEST_CASE("minimality") {
  CHECK(is_minimal_nonsortable(S("abcdabd")));
  CHECK(is_minimal_nonsortable(S("abcdabd"), sortable_by_orders));
  CHECK_FALSE(is_minimal_nonsortable(S("abcab")));
  // Contains abcdbacd with an extra sock, so not minimal.
  CHECK_FALSE(decide(S("eabcdbacd")).is_sortable());
  CHECK_FALSE(is_minimal_nonsortable(S("eabcdbacde")));
}

TEST_CASE("match_minimal_pattern") {
  const auto m = match_minimal_pattern(S("eabcdbacde"));
  REQUIRE(m.has_value());
  CHECK(m->pattern.name() == "Type I: abcdbacd");
  CHECK(m->embedding.positions.size() == 8);

  CHECK_FALSE(match_minimal_pattern(S("abcab")).has_value());
  CHECK_THROWS_AS(match_minimal_pattern(S("aaa")), std::invalid_argument);

  const auto fam = match_minimal_pattern(generate_family(Family::kC, 4).ordering);
  REQUIRE(fam.has_value());
  CHECK(fam->pattern.name() == "Type C (n=4): " + format_ordering(generate_family(Family::kC, 4).ordering));
}

TEST_CASE("enumeration counts match brute force") {
  CHECK(enumerate_canonical(3, true).size() == 2);
  CHECK(enumerate_canonical(4, true).size() == 5);
  for (std::size_t len = 1; len <= 7; ++len) {
    CAPTURE(len);
    CHECK(enumerate_canonical(len, true).size() == count_words(len, true));
    CHECK(enumerate_canonical(len, false).size() == count_words(len, false));
  }
  CHECK_THROWS_AS(enumerate_canonical(14, true), std::invalid_argument);
}

TEST_CASE("enumeration order and form") {
  const auto v = enumerate_canonical(6, true);
  for (std::size_t i = 1; i < v.size(); ++i) CHECK(v[i - 1] < v[i]);
  for (const auto& c : v) {
    CHECK(c.ordering().reduced());
    CHECK(canonicalize(c.ordering()) == c);
  }
}

TEST_CASE("expected set sizes") {
  CHECK(expected_patterns(7).size() == 1);
  CHECK(expected_patterns(11).size() == 20);
  CHECK(expected_patterns(13).size() == 24);
}

TEST_CASE("verify_classification small and sharded") {
  const auto r1 = verify_classification(9, 1);
  const auto r3 = verify_classification(9, 3);
  CHECK(r1.matches());
  CHECK(r3.matches());
  CHECK(r1.found.size() == 15);
  REQUIRE(r1.per_length.size() == r3.per_length.size());
  for (std::size_t i = 0; i < r1.per_length.size(); ++i) {
    CHECK(r1.per_length[i].enumerated == r3.per_length[i].enumerated);
    CHECK(r1.per_length[i].not_sortable == r3.per_length[i].not_sortable);
    CHECK(r1.per_length[i].minimal == r3.per_length[i].minimal);
  }
  CHECK_THROWS_AS(verify_classification(14, 1), std::invalid_argument);
}

TEST_CASE("random 2-bounded: non-sortable iff a listed pattern occurs") {
  gen::Rng rng(17);
  for (int t = 0; t < 500; ++t) {
    const auto s = gen::random_two_bounded(rng, 4 + t % 20);
    CHECK(decide(s).is_sortable() != match_minimal_pattern(s).has_value());
  }
}
