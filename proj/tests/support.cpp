#include "support.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <cstring>
#include <iostream>
#include <numeric>
#include <string>

namespace mfl::test {

namespace {

std::uint64_t g_seed = 20240607;

}  // namespace

std::uint64_t seed() { return g_seed; }

std::mt19937_64 rng(std::uint64_t salt) {
  std::seed_seq seq{static_cast<std::uint32_t>(g_seed), static_cast<std::uint32_t>(g_seed >> 32),
                    static_cast<std::uint32_t>(salt)};
  return std::mt19937_64(seq);
}

std::vector<std::set<Rep>> brute_classes(int g, int n) {
  std::vector<Rep> reps;
  const IndexSet all = n == 0 ? 0u : (IndexSet{1} << n) - 1u;
  for (int tau = 0; tau <= g; ++tau) {
    for (IndexSet i = 0; i <= all; ++i) {
      if ((tau == 0 && i == 0) || (tau == g && i == all)) continue;
      reps.emplace_back(tau, i);
    }
  }
  std::vector<std::size_t> parent(reps.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::map<Rep, std::size_t> index;
  for (std::size_t k = 0; k < reps.size(); ++k) index[reps[k]] = k;
  for (std::size_t k = 0; k < reps.size(); ++k) {
    const Rep mate{g - reps[k].first, all & ~reps[k].second};
    parent[root(k)] = root(index.at(mate));
  }
  std::map<std::size_t, std::set<Rep>> groups;
  for (std::size_t k = 0; k < reps.size(); ++k) groups[root(k)].insert(reps[k]);
  std::vector<std::set<Rep>> out;
  for (auto& [r, s] : groups) out.push_back(std::move(s));
  return out;
}

BruteIndex::BruteIndex(int g_, int n_) : g(g_), n(n_), classes(brute_classes(g_, n_)) {
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (const auto& r : classes[c]) of[r] = static_cast<int>(c);
  }
}

int BruteIndex::find(int tau, IndexSet points) const {
  auto it = of.find({tau, points});
  return it == of.end() ? -1 : it->second;
}

std::size_t bareiss_rank(const linalg::Matrix& m) {
  std::vector<std::vector<mpz_class>> a;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class lcm = 1;
    for (const auto& q : m.row(r)) lcm = ::lcm(lcm, mpz_class(q.get_den()));
    std::vector<mpz_class> row;
    for (const auto& q : m.row(r)) row.push_back(mpz_class(q.get_num() * (lcm / q.get_den())));
    a.push_back(std::move(row));
  }
  const std::size_t rows = a.size();
  const std::size_t cols = m.cols();
  std::size_t rank = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]) / prev;
      }
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

Rational random_rational(std::mt19937_64& gen, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  return Rational(d(gen));
}

}  // namespace mfl::test

int main(int argc, char** argv) {
  std::uint64_t seed = 20240607;
  if (const char* env = std::getenv("MFL_SEED")) seed = std::stoull(env);
  std::vector<char*> rest;
  for (int i = 0; i < argc; ++i) {
    if (std::strncmp(argv[i], "--seed=", 7) == 0) {
      seed = std::stoull(argv[i] + 7);
    } else {
      rest.push_back(argv[i]);
    }
  }
  mfl::test::g_seed = seed;
  bool listing = false;
  for (char* a : rest) listing = listing || std::strcmp(a, "--gtest_list_tests") == 0;
  if (!listing) std::cout << "seed: " << seed << std::endl;
  int rest_argc = static_cast<int>(rest.size());
  testing::InitGoogleTest(&rest_argc, rest.data());
  return RUN_ALL_TESTS();
}
