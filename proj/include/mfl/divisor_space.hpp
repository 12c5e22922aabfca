#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mfl/boundary_index.hpp"
#include "mfl/linalg.hpp"
#include "mfl/rational.hpp"

namespace mfl {

enum class SpaceKind { Ulci, Bar, PS, T, TPlus };

// Which rational Picard group a divisor class lives in. Ulci and Bar share
// the free presentation; PS and T(T) kill delta_{1,{}}; TPlus(T) also kills
// delta_{1,{i}} for every divisorial pair inside T.
struct SpaceId {
  SpaceKind kind = SpaceKind::PS;
  TypeSet typeset;

  static SpaceId ulci() { return {SpaceKind::Ulci, {}}; }
  static SpaceId bar() { return {SpaceKind::Bar, {}}; }
  static SpaceId ps() { return {SpaceKind::PS, {}}; }
  static SpaceId t(TypeSet t) { return {SpaceKind::T, std::move(t)}; }
  static SpaceId tplus(TypeSet t) { return {SpaceKind::TPlus, std::move(t)}; }

  friend bool operator==(const SpaceId&, const SpaceId&) = default;
};

std::string to_string(const SpaceId& s);

// a*lambda + b_irr*delta_irr + sum b_c*delta_c. Only nonzero pair
// coefficients are stored, keyed by canonical class.
struct DivisorClass {
  SpaceId space;
  Rational lambda;
  Rational irr;
  std::map<BridgeClass, Rational> coeffs;

  // Coefficient of delta_c; c = irr gives b_irr.
  Rational coeff(const BridgeClass& c) const;
  void set(const BridgeClass& c, const Rational& value);
  void add(const BridgeClass& c, const Rational& value);
  bool is_zero() const;

  DivisorClass& operator+=(const DivisorClass& o);
  DivisorClass& operator-=(const DivisorClass& o);
  DivisorClass& operator*=(const Rational& s);

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

DivisorClass operator+(DivisorClass a, const DivisorClass& b);
DivisorClass operator-(DivisorClass a, const DivisorClass& b);
DivisorClass operator*(const Rational& s, DivisorClass a);

enum class GeneratorKind { Lambda, DeltaIrr, Delta };

struct Generator {
  GeneratorKind kind;
  BridgeClass cls;  // meaningful for Delta only
};

std::string to_string(const Generator& gen);

// Generators lambda, delta_irr, delta_c (class order) modulo killed
// generators and the low-genus relations. For g = 0 the relations are not
// encoded and rank queries refuse.
class Presentation {
 public:
  Presentation(const HyperbolicPair& p, const SpaceId& s);

  const HyperbolicPair& pair() const { return pair_; }
  const SpaceId& space() const { return space_; }
  const std::vector<Generator>& generators() const { return generators_; }
  const std::vector<std::size_t>& killed() const { return killed_; }
  const linalg::Matrix& relations() const { return relations_; }

  std::size_t size() const { return generators_.size(); }
  std::size_t index_of(const BridgeClass& c) const;
  bool is_killed(const BridgeClass& c) const;

  linalg::Vector to_vector(const DivisorClass& d) const;
  DivisorClass from_vector(const linalg::Vector& v) const;
  DivisorClass generator_class(std::size_t index) const;

  // Echelon form of the killed unit rows stacked on the relations.
  const linalg::Echelon& quotient() const { return quotient_; }

  // Generators whose reduced classes form a basis of the quotient.
  std::vector<std::size_t> basis() const { return quotient_.free_columns(); }

  std::size_t rank() const;
  DivisorClass reduce(const DivisorClass& d) const;

 private:
  HyperbolicPair pair_;
  SpaceId space_;
  std::vector<Generator> generators_;
  std::map<BridgeClass, std::size_t> index_;
  std::vector<std::size_t> killed_;
  linalg::Matrix relations_;
  linalg::Echelon quotient_;
};

Presentation presentation(const HyperbolicPair& p, const SpaceId& s);

// Dimension of the rational Picard group of s. Throws GenusZeroUnsupported.
std::size_t rank(const HyperbolicPair& p, const SpaceId& s);

// Canonical coset representative: killed and pivot coordinates are zero.
DivisorClass reduce(const HyperbolicPair& p, const SpaceId& s, const DivisorClass& d);

bool classes_equal(const HyperbolicPair& p, const SpaceId& s, const DivisorClass& a,
                   const DivisorClass& b);

// Re-homes d on space s, zeroing the coefficients s kills. No relation is
// applied.
DivisorClass restrict_to(const HyperbolicPair& p, const DivisorClass& d, const SpaceId& s);

// Named line bundles. delta(i,I) and psi(i) take a class / a marked point.
struct ClassName {
  enum class Kind { Lambda, DeltaIrr, Delta, PsiPoint, Psi, DeltaTotal, DeltaHat, K, KPlusPsi, N };
  Kind kind = Kind::Lambda;
  BridgeClass cls = BridgeClass::irr();
  int point = 0;
};

// Accepts lambda, delta_irr, delta(tau:{...}), psi(i), psi, delta,
// delta_hat, K, K+psi (or K_plus_psi), N. Throws UnknownName.
ClassName parse_class_name(const HyperbolicPair& p, std::string_view text);

// The named class on s with killed coefficients zeroed; relations are not
// applied, so e.g. K+psi keeps a = 13 and every delta coefficient -2.
DivisorClass named_class(const HyperbolicPair& p, const SpaceId& s, const ClassName& name);
DivisorClass named_class(const HyperbolicPair& p, const SpaceId& s, std::string_view name);

// Upsilon^* from PS to Bar: lambda -> lambda + delta_{1,{}},
// delta_irr -> delta_irr + 12 delta_{1,{}}, other deltas fixed.
// Throws WrongSpace unless d lives on PS.
DivisorClass pullback_upsilon(const HyperbolicPair& p, const DivisorClass& d);

}  // namespace mfl
