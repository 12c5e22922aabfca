#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "mfl/boundary_index.hpp"
#include "mfl/linalg.hpp"
#include "mfl/rational.hpp"

namespace mfl::test {

// Seed for every randomized test; set from --seed=N or MFL_SEED and printed
// once at startup.
std::uint64_t seed();

// Generator for one test, salted so tests do not share streams.
std::mt19937_64 rng(std::uint64_t salt);

// A raw representative (tau, I).
using Rep = std::pair<int, IndexSet>;

// Classes of T_{g,n} computed from scratch: every legal representative,
// merged with its complement by union-find. Each class is the set of its
// representatives.
std::vector<std::set<Rep>> brute_classes(int g, int n);

// Brute-force index of a representative into brute_classes, or -1.
struct BruteIndex {
  BruteIndex(int g, int n);

  int g;
  int n;
  std::vector<std::set<Rep>> classes;
  std::map<Rep, int> of;

  int find(int tau, IndexSet points) const;
};

// Rank by fraction-free Bareiss elimination on integer rows obtained by
// clearing denominators.
std::size_t bareiss_rank(const linalg::Matrix& m);

// Random integer in [lo, hi] as a rational.
Rational random_rational(std::mt19937_64& gen, int lo, int hi);

}  // namespace mfl::test
