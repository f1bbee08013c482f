#pragma once

#include <cstddef>
#include <random>

#include "footsort/sock_ordering.hpp"

// Instance generators for tests and benchmarks. All results are canonical
// (dense ids by first occurrence). Deterministic for a given engine state.
namespace footsort::gen {

using Rng = std::mt19937_64;

// n socks with colors drawn uniformly from `alphabet` colors.
SockOrdering random_ordering(Rng& rng, std::size_t n, std::size_t alphabet);

// n socks, every color used once or twice; the number of doubled colors is
// uniform in [0, n/2].
SockOrdering random_two_bounded(Rng& rng, std::size_t n);

// A foot-sortable ordering of n socks, built by running a random stack
// backwards from the sorted output. Each color gets 1..max_multiplicity socks.
SockOrdering random_sortable(Rng& rng, std::size_t n, std::size_t max_multiplicity = 2);

// a0 a1 a0 a2 a1 a3 a2 ... truncated to n socks.
SockOrdering chain(std::size_t n);

}  // namespace footsort::gen
