#pragma once

// Hand-written certificates for single-sock deletions from the family
// instances. Symbols: a_i = i, x = n, y = n + 1, z = n + 2. Each group lists
// template positions; deleting any one of them must leave an ordering that
// the given ascending order (restricted to surviving colors) sorts.

#include <string>
#include <vector>

#include "footsort/classifier.hpp"
#include "footsort/oracle.hpp"

namespace footsort::test {

struct DeletionGroup {
  std::vector<std::size_t> positions;
  std::vector<Color> ascending;
};

struct FamilyTemplate {
  std::vector<Color> word;
  std::vector<DeletionGroup> groups;
};

inline FamilyTemplate family_template(Family f, int n) {
  const auto un = static_cast<Color>(n);
  const Color x = un, y = un + 1, z = un + 2;
  auto a = [](int i) { return static_cast<Color>(i); };
  // a_{hi} < a_{hi-1} < ... < a_{lo}
  auto down = [&](int hi, int lo) {
    std::vector<Color> v;
    for (int i = hi; i >= lo; --i) v.push_back(a(i));
    return v;
  };
  auto cat = [](std::initializer_list<std::vector<Color>> parts) {
    std::vector<Color> v;
    for (const auto& p : parts) v.insert(v.end(), p.begin(), p.end());
    return v;
  };

  FamilyTemplate t;
  std::size_t head = 0;
  switch (f) {
    case Family::kA:
      t.word = {x, a(0), y, a(n - 1), x};
      t.groups = {{{0, 1}, cat({{y, x}, down(n - 1, 0)})},
                  {{2}, cat({{x}, down(n - 1, 0)})},
                  {{3, 4}, cat({{x, y}, down(n - 1, 0)})}};
      head = 5;
      break;
    case Family::kB:
    case Family::kBPrime: {
      const bool prime = f == Family::kBPrime;
      t.word = prime ? std::vector<Color>{a(0), y, x, a(n - 1), x, y} : std::vector<Color>{a(0), x, y, a(n - 1), x, y};
      const std::size_t first_x = prime ? 2 : 1;
      const std::size_t first_y = prime ? 1 : 2;
      t.groups = {{{0}, cat({{x}, down(n - 1, 0), {y}})},
                  {{first_y, 4}, cat({{x, y}, down(n - 1, 0)})},
                  {{5, first_x, 3}, cat({{y, x}, down(n - 1, 0)})}};
      head = 6;
      break;
    }
    case Family::kC:
      t.word = {a(0), x, a(n - 1), y, z, y, x};
      t.groups = {{{0}, cat({{z, y}, down(n - 1, 0), {x}})},
                  {{1, 2}, cat({{z, y, x}, down(n - 1, 0)})},
                  {{3, 4}, cat({{x, y, z}, down(n - 1, 0)})},
                  {{5, 6}, cat({{x, z, y}, down(n - 1, 0)})}};
      head = 7;
      break;
  }

  for (int i = n - 2; i >= 0; --i) {
    t.word.push_back(a(i));
    t.word.push_back(a(i + 1));
    const std::size_t p = head + 2 * static_cast<std::size_t>(n - 2 - i);
    std::vector<Color> asc;
    switch (f) {
      case Family::kA:
      case Family::kB:
      case Family::kBPrime: asc = cat({{x}, down(n - 1, i + 1), {y}, down(i, 0)}); break;
      case Family::kC: asc = cat({{z, y}, down(n - 1, i + 1), {x}, down(i, 0)}); break;
    }
    t.groups.push_back({{p, p + 1}, asc});
  }
  return t;
}

// Returns a description of every deletion whose certificate fails, empty when
// all validate. Also fails if the groups do not cover every position once.
inline std::vector<std::string> check_family_certificates(Family f, int n) {
  const FamilyTemplate t = family_template(f, n);
  std::vector<std::string> failures;
  std::vector<int> covered(t.word.size(), 0);

  for (const auto& g : t.groups) {
    for (std::size_t del : g.positions) {
      ++covered.at(del);
      std::vector<Color> rest;
      for (std::size_t i = 0; i < t.word.size(); ++i) {
        if (i != del) rest.push_back(t.word[i]);
      }
      // Relabel surviving symbols densely by first occurrence.
      std::vector<Color> label(static_cast<std::size_t>(n) + 3, ~Color{0});
      Color next = 0;
      std::vector<Color> word;
      for (Color c : rest) {
        if (label[c] == ~Color{0}) label[c] = next++;
        word.push_back(label[c]);
      }
      TotalOrderCertificate order;
      for (Color c : g.ascending) {
        if (label[c] != ~Color{0}) order.ascending.push_back(label[c]);
      }
      bool ok = false;
      try {
        ok = oracle::check_with_order(SockOrdering(word), order);
      } catch (const std::exception&) {
        ok = false;
      }
      if (!ok) {
        failures.push_back("type " + std::string(family_name(f)) + " n=" + std::to_string(n) + " delete position " +
                           std::to_string(del));
      }
    }
  }
  for (std::size_t i = 0; i < covered.size(); ++i) {
    if (covered[i] != 1) {
      failures.push_back("type " + std::string(family_name(f)) + " n=" + std::to_string(n) + " position " +
                         std::to_string(i) + " covered " + std::to_string(covered[i]) + " times");
    }
  }
  return failures;
}

}  // namespace footsort::test
