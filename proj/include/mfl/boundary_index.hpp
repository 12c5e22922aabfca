#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mfl {

// Subset of the marked points {1..n}; bit i-1 stands for point i.
using IndexSet = std::uint32_t;

inline constexpr int kDefaultMaxPoints = 16;
inline constexpr int kHardMaxPoints = 30;

// (g, n) with 2g - 2 + n > 0.
class HyperbolicPair {
 public:
  // Throws NotHyperbolic, or OutOfRange when n exceeds max_points.
  HyperbolicPair(int g, int n, int max_points = kDefaultMaxPoints);

  int g() const { return g_; }
  int n() const { return n_; }
  IndexSet all_points() const { return n_ == 0 ? 0u : ((IndexSet{1} << n_) - 1u); }
  bool is(int g, int n) const { return g_ == g && n_ == n; }

  friend bool operator==(const HyperbolicPair&, const HyperbolicPair&) = default;

 private:
  int g_;
  int n_;
};

// An element of the boundary index set: either irr or the class [tau, I] of
// (tau, I) under (tau, I) ~ (g - tau, I^c). Pair classes always hold the
// canonical representative, so member-wise equality is class equality. The
// ordering puts irr first, then pairs by (tau, bitmask).
class BridgeClass {
 public:
  static BridgeClass irr() { return BridgeClass(); }

  bool is_irr() const { return tau_ < 0; }
  int tau() const { return tau_; }
  IndexSet points() const { return points_; }

  friend auto operator<=>(const BridgeClass&, const BridgeClass&) = default;

 private:
  BridgeClass() = default;
  BridgeClass(int tau, IndexSet points) : tau_(tau), points_(points) {}

  int tau_ = -1;
  IndexSet points_ = 0;

  friend std::optional<BridgeClass> class_of(const HyperbolicPair&, int, IndexSet);
};

// True when (tau, I) is a legal representative: 0 <= tau <= g, I inside [n],
// and (tau, I) is neither (0, {}) nor (g, [n]).
bool is_valid_representative(const HyperbolicPair& p, int tau, IndexSet points);

// The class of (tau, I), or nullopt when (tau, I) is not a legal representative.
std::optional<BridgeClass> class_of(const HyperbolicPair& p, int tau, IndexSet points);

// Throws OutOfRange if tau or I lie outside the pair's range and
// ExcludedClass for (0, {}) and (g, [n]).
BridgeClass canonicalize(const HyperbolicPair& p, int tau, IndexSet points);

// Both representatives (tau, I) and (g - tau, I^c) of a pair class.
std::pair<std::pair<int, IndexSet>, std::pair<int, IndexSet>> representatives(
    const HyperbolicPair& p, const BridgeClass& c);

// [1, {}], the elliptic tail class; nullopt when g = 0.
std::optional<BridgeClass> tail_class(const HyperbolicPair& p);

// The marked point i such that c = [0, {i}], if any.
std::optional<int> point_of(const HyperbolicPair& p, const BridgeClass& c);

// True for the classes [1, {j}] (including [1, {}] when it coincides).
bool is_one_point_class(const HyperbolicPair& p, const BridgeClass& c);

// The classes of (tau - 1, I) and (tau + 1, I) that exist. Does not depend on
// which representative is used.
std::vector<BridgeClass> neighbors(const HyperbolicPair& p, const BridgeClass& c);

// irr first, then every pair class once, ordered by (tau, bitmask).
std::vector<BridgeClass> enumerate_classes(const HyperbolicPair& p);

// A subset T of the boundary index set.
struct TypeSet {
  bool irr = false;
  std::set<BridgeClass> classes;  // pair classes only

  bool contains(const BridgeClass& c) const;
  void insert(const BridgeClass& c);
  void erase(const BridgeClass& c);
  bool empty() const { return !irr && classes.empty(); }
  std::size_t size() const { return classes.size() + (irr ? 1 : 0); }
  bool subset_of(const TypeSet& other) const;

  friend bool operator==(const TypeSet&, const TypeSet&) = default;
  friend auto operator<=>(const TypeSet&, const TypeSet&) = default;
};

TypeSet set_union(const TypeSet& a, const TypeSet& b);

// The whole index set T_{g,n}.
TypeSet full_typeset(const HyperbolicPair& p);

// Type of an elliptic bridge (or tacnode): {irr} or {[tau,I], [tau+1,I]}.
// The two classes are stored sorted and may coincide.
class PairType {
 public:
  static PairType irr() { return PairType(); }
  static PairType bridge(const BridgeClass& a, const BridgeClass& b);

  bool is_irr() const { return irr_; }
  const BridgeClass& lower() const { return lower_; }
  const BridgeClass& upper() const { return upper_; }
  bool contained_in(const TypeSet& t) const;
  TypeSet as_typeset() const;

  friend auto operator<=>(const PairType&, const PairType&) = default;

 private:
  PairType() = default;

  bool irr_ = true;
  BridgeClass lower_ = BridgeClass::irr();
  BridgeClass upper_ = BridgeClass::irr();
};

// {class(tau, I), class(tau + 1, I)} when both exist and neither is [1, {}].
std::optional<PairType> bridge_type_at(const HyperbolicPair& p, int tau, IndexSet points);

// Whether t is one of the minimal subsets of T_{g,n}.
bool is_valid_bridge_type(const HyperbolicPair& p, const PairType& t);

// Every minimal subset once: {irr} when g >= 2, then the bridge pairs, sorted.
std::vector<PairType> minimal_subsets(const HyperbolicPair& p);

// Minimal subsets of T_{g,n} contained in t.
std::vector<PairType> minimal_subsets_in(const HyperbolicPair& p, const TypeSet& t);

bool is_admissible(const HyperbolicPair& p, const TypeSet& t);

// T^adm: drop [1,{}] (and irr when g <= 1), then drop in one pass every pair
// class with no neighbour left.
TypeSet adm_closure(const HyperbolicPair& p, const TypeSet& t);

// The pairs {[0,{i}], [1,{i}]}; empty for (1,1), (2,1) and g = 0.
std::vector<PairType> divisorial_pairs(const HyperbolicPair& p);

bool is_divisorial_pair(const HyperbolicPair& p, const PairType& t);

// T^div: union of the divisorial pairs contained in t.
TypeSet divisorial_part(const HyperbolicPair& p, const TypeSet& t);

enum class Containment { Equal, TinS, SinT, Incomparable };

std::string_view to_string(Containment c);

// How the stack for T sits relative to the stack for S.
Containment compare_typesets(const HyperbolicPair& p, const TypeSet& t, const TypeSet& s);

// "irr" or "tau:{i1,i2,...}" using the canonical representative.
std::string format_class(const BridgeClass& c);

// Comma-separated items in class order; the empty set formats as "".
std::string format_typeset(const TypeSet& t);

// Inverse of format_typeset. Items are "irr" or "tau:{i,...}"; the whole text
// may also be empty or "{}". Whitespace between tokens is ignored.
TypeSet parse_typeset(const HyperbolicPair& p, std::string_view text);

// Parses a single "irr" or "tau:{...}" item.
BridgeClass parse_class(const HyperbolicPair& p, std::string_view text);

// Parses "tau:{...}" into its raw (tau, I) without canonicalizing; used to
// name a representative, e.g. the start of a rosary.
std::pair<int, IndexSet> parse_representative(const HyperbolicPair& p, std::string_view text);

std::string format_pair_type(const PairType& t);

}  // namespace mfl
