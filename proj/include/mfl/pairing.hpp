#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mfl/boundary_index.hpp"
#include "mfl/divisor_space.hpp"
#include "mfl/rational.hpp"

namespace mfl {

// C(t) on the pseudostable space, its lift C~(t) to M_{g,n}-bar, and the
// tacnodal curve D(t) on the T+ space.
struct CurveClass {
  enum class Kind { Bridge, BridgeUpstairs, Tacnodal };
  Kind kind = Kind::Bridge;
  PairType type = PairType::irr();
};

// Length-3 rosary types. A triple records the classes of (tau, I),
// (tau+1, I), (tau+2, I) for one representative; the reverse triple comes
// from the complementary representative and has the opposite weight.
class RosaryType {
 public:
  static RosaryType irr() { return RosaryType(); }
  static RosaryType triple(const BridgeClass& c0, const BridgeClass& c1, const BridgeClass& c2);

  bool is_irr() const { return irr_; }
  const BridgeClass& start() const { return c0_; }
  const BridgeClass& middle() const { return c1_; }
  const BridgeClass& end() const { return c2_; }
  TypeSet as_typeset() const;

  friend auto operator<=>(const RosaryType&, const RosaryType&) = default;

 private:
  RosaryType() = default;

  bool irr_ = true;
  BridgeClass c0_ = BridgeClass::irr();
  BridgeClass c1_ = BridgeClass::irr();
  BridgeClass c2_ = BridgeClass::irr();
};

// The triple starting at (tau, I), or nullopt if one of the three
// representatives is not legal.
std::optional<RosaryType> rosary_at(const HyperbolicPair& p, int tau, IndexSet points);

// Every triple type, deduplicated, in (start, middle, end) order.
std::vector<RosaryType> rosary_types(const HyperbolicPair& p);

// Triple types whose endpoints avoid [1,{}] and every [1,{j}] and whose
// three classes all lie in t: the ones constraining T+ descent.
std::vector<RosaryType> constraining_rosaries(const HyperbolicPair& p, const TypeSet& t);

// Bridge type valid as a tacnodal type: no class [1,{}] or [1,{j}]; irr
// still needs g >= 2.
bool is_valid_tacnodal_type(const HyperbolicPair& p, const PairType& t);

// C(t).L with L on PS or T(.): a + 10 b_irr, or a + 12 b_irr - b_lower - b_upper.
// Throws InvalidCurveType, WrongSpace, IllPosedPairing.
Rational pair_bridge(const HyperbolicPair& p, const PairType& t, const DivisorClass& l);

// C~(t).L~ with L~ on Bar: -2 b_irr + b_{1,{}}, or -b_lower - b_upper + b_{1,{}}.
Rational pair_bridge_upstairs(const HyperbolicPair& p, const PairType& t, const DivisorClass& l);

// D(t).L with L on TPlus(.): -a - 10 b_irr, or -a - 12 b_irr + b_lower + b_upper.
// Throws ForbiddenTacnodalType.
Rational pair_tacnodal(const HyperbolicPair& p, const PairType& t, const DivisorClass& l);

// Weight of L against the rosary one-parameter subgroup: 0 for irr,
// b_end - b_start for a triple.
Rational rosary_weight(const HyperbolicPair& p, const RosaryType& r, const DivisorClass& l);

// Text forms: C:irr, C:tau:{...}, Ctilde:..., D:..., where tau:{...} names
// the representative (tau, I) of the lower class of the bridge.
CurveClass parse_curve(const HyperbolicPair& p, std::string_view text);

// R:irr or R:tau:{...}, the triple starting at (tau, I).
RosaryType parse_rosary(const HyperbolicPair& p, std::string_view text);

// Evaluates a C:/Ctilde:/D:/R: spec against l.
Rational pair_text(const HyperbolicPair& p, std::string_view curve, const DivisorClass& l);

std::string format_rosary(const RosaryType& r);

}  // namespace mfl
