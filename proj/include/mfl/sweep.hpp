#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mfl/boundary_index.hpp"

namespace mfl {

enum class TypesetMode { FullOnly, AllAdmissible, Sampled };

struct SweepConfig {
  int g_min = 0;
  int g_max = 8;
  int n_max = 6;
  TypesetMode mode = TypesetMode::FullOnly;
  std::size_t sample_k = 32;  // Sampled, and AllAdmissible above the cap
  bool parallel = true;
  std::uint64_t seed = 20240607;
  std::uint64_t cap = 4096;  // admissible-set enumeration and lattice size
};

// Keys used to group checks; one per acceptance criterion plus extras.
namespace check {
inline constexpr const char* kFaceDim = "face_dim_closed_form";
inline constexpr const char* kPicard710 = "picard_7_10";
inline constexpr const char* kProjection = "projection_formula";
inline constexpr const char* kConstants = "universal_constants";
inline constexpr const char* kDescent = "descent_weights";
inline constexpr const char* kQFactorial = "qfactorial_table";
inline constexpr const char* kFlip = "flip_verdicts";
inline constexpr const char* kRanks = "rank_consistency";
inline constexpr const char* kClosure = "closure_lattice";
inline constexpr const char* kOther = "other";
}  // namespace check

struct SweepIssue {
  std::string key;
  int g = 0;
  int n = 0;
  std::string typeset;
  std::string message;
};

struct SweepResult {
  std::map<std::string, std::size_t> checks;  // assertions evaluated per key
  std::vector<SweepIssue> failures;           // asserted invariants that broke
  std::vector<SweepIssue> findings;           // reported, not asserted

  bool ok() const { return failures.empty(); }
  std::size_t failures_for(const std::string& key) const;
  void merge(SweepResult other);
};

// Distinct admissible subsets, i.e. unions of minimal subsets, when
// 2^(#minimal) <= cap; otherwise {} and the caller samples.
std::vector<TypeSet> all_admissible(const HyperbolicPair& p, std::uint64_t cap);

// Up to k admissible subsets drawn from random ray masks, plus {} and T^adm.
std::vector<TypeSet> sample_admissible(const HyperbolicPair& p, std::size_t k, std::uint64_t seed);

// The typesets the config selects for p.
std::vector<TypeSet> sweep_typesets(const HyperbolicPair& p, const SweepConfig& cfg);

// All checks for one pair.
SweepResult verify_pair(const HyperbolicPair& p, const SweepConfig& cfg);

// Every hyperbolic (g, n) in range; results merged in (g, n) order.
SweepResult verify(const SweepConfig& cfg);

std::string format_issue(const SweepIssue& i);

}  // namespace mfl
