#include "mfl/pairing.hpp"

#include <set>

#include "mfl/error.hpp"

namespace mfl {

RosaryType RosaryType::triple(const BridgeClass& c0, const BridgeClass& c1, const BridgeClass& c2) {
  RosaryType r;
  r.irr_ = false;
  r.c0_ = c0;
  r.c1_ = c1;
  r.c2_ = c2;
  return r;
}

TypeSet RosaryType::as_typeset() const {
  TypeSet t;
  if (irr_) {
    t.irr = true;
  } else {
    t.insert(c0_);
    t.insert(c1_);
    t.insert(c2_);
  }
  return t;
}

std::optional<RosaryType> rosary_at(const HyperbolicPair& p, int tau, IndexSet points) {
  auto c0 = class_of(p, tau, points);
  auto c1 = class_of(p, tau + 1, points);
  auto c2 = class_of(p, tau + 2, points);
  if (!c0 || !c1 || !c2) return std::nullopt;
  return RosaryType::triple(*c0, *c1, *c2);
}

std::vector<RosaryType> rosary_types(const HyperbolicPair& p) {
  std::set<RosaryType> seen;
  for (int tau = 0; tau + 2 <= p.g(); ++tau) {
    for (IndexSet s = 0; s <= p.all_points(); ++s) {
      if (auto r = rosary_at(p, tau, s)) seen.insert(*r);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<RosaryType> constraining_rosaries(const HyperbolicPair& p, const TypeSet& t) {
  std::vector<RosaryType> out;
  for (const auto& r : rosary_types(p)) {
    if (is_one_point_class(p, r.start()) || is_one_point_class(p, r.end())) continue;
    if (r.as_typeset().subset_of(t)) out.push_back(r);
  }
  return out;
}

bool is_valid_tacnodal_type(const HyperbolicPair& p, const PairType& t) {
  if (!is_valid_bridge_type(p, t)) return false;
  if (t.is_irr()) return true;
  return !is_one_point_class(p, t.lower()) && !is_one_point_class(p, t.upper());
}

namespace {

void require_bridge_type(const HyperbolicPair& p, const PairType& t) {
  if (!is_valid_bridge_type(p, t)) {
    throw Error(ErrorKind::InvalidCurveType, format_pair_type(t) + " is not an elliptic bridge type");
  }
}

// a + 10 b_irr or a + 12 b_irr - b_lower - b_upper, read straight off l.
Rational bridge_formula(const PairType& t, const DivisorClass& l) {
  if (t.is_irr()) return l.lambda + 10 * l.irr;
  return l.lambda + 12 * l.irr - l.coeff(t.lower()) - l.coeff(t.upper());
}

// The formulas are stated on representatives; in genus one and two they are
// only meaningful if every relation row pairs to zero.
void require_well_defined(const HyperbolicPair& p, const PairType& t, const SpaceId& s) {
  if (p.g() > 2) return;
  const Presentation pres(p, s);
  for (std::size_t r = 0; r < pres.relations().rows(); ++r) {
    auto row = pres.relations().row(r);
    if (sgn(bridge_formula(t, pres.from_vector(linalg::Vector(row.begin(), row.end())))) != 0) {
      throw Error(ErrorKind::IllPosedPairing,
                  "relation row " + std::to_string(r) + " pairs nonzero with " + format_pair_type(t));
    }
  }
}

}  // namespace

Rational pair_bridge(const HyperbolicPair& p, const PairType& t, const DivisorClass& l) {
  require_bridge_type(p, t);
  if (l.space.kind != SpaceKind::PS && l.space.kind != SpaceKind::T) {
    throw Error(ErrorKind::WrongSpace, "bridge curves pair with classes on ps or t, got " + to_string(l.space));
  }
  require_well_defined(p, t, l.space);
  return bridge_formula(t, l);
}

Rational pair_bridge_upstairs(const HyperbolicPair& p, const PairType& t, const DivisorClass& l) {
  require_bridge_type(p, t);
  if (l.space.kind != SpaceKind::Bar) {
    throw Error(ErrorKind::WrongSpace, "lifted bridge curves pair with classes on bar, got " + to_string(l.space));
  }
  const Rational tail = l.coeff(*tail_class(p));
  if (t.is_irr()) return -2 * l.irr + tail;
  return -l.coeff(t.lower()) - l.coeff(t.upper()) + tail;
}

Rational pair_tacnodal(const HyperbolicPair& p, const PairType& t, const DivisorClass& l) {
  if (!is_valid_tacnodal_type(p, t)) {
    throw Error(ErrorKind::ForbiddenTacnodalType, format_pair_type(t) + " is not a tacnodal type");
  }
  if (l.space.kind != SpaceKind::TPlus) {
    throw Error(ErrorKind::WrongSpace, "tacnodal curves pair with classes on tplus, got " + to_string(l.space));
  }
  require_well_defined(p, t, l.space);
  return -bridge_formula(t, l);
}

Rational rosary_weight(const HyperbolicPair&, const RosaryType& r, const DivisorClass& l) {
  if (r.is_irr()) return 0;
  return l.coeff(r.end()) - l.coeff(r.start());
}

namespace {

PairType parse_bridge_spec(const HyperbolicPair& p, std::string_view body) {
  if (body == "irr") return PairType::irr();
  const auto [tau, points] = parse_representative(p, body);
  canonicalize(p, tau, points);
  auto bt = bridge_type_at(p, tau, points);
  if (!bt) {
    throw Error(ErrorKind::InvalidCurveType, "no elliptic bridge starts at " + std::string(body));
  }
  return *bt;
}

}  // namespace

CurveClass parse_curve(const HyperbolicPair& p, std::string_view text) {
  CurveClass curve;
  std::string_view body;
  if (text.substr(0, 7) == "Ctilde:") {
    curve.kind = CurveClass::Kind::BridgeUpstairs;
    body = text.substr(7);
  } else if (text.substr(0, 2) == "C:") {
    curve.kind = CurveClass::Kind::Bridge;
    body = text.substr(2);
  } else if (text.substr(0, 2) == "D:") {
    curve.kind = CurveClass::Kind::Tacnodal;
    body = text.substr(2);
  } else {
    throw SyntaxError(0, "curve must start with C:, Ctilde: or D:");
  }
  curve.type = parse_bridge_spec(p, body);
  if (curve.type.is_irr() && p.g() < 2) {
    throw Error(ErrorKind::InvalidCurveType, "irr bridge curves need g >= 2");
  }
  return curve;
}

RosaryType parse_rosary(const HyperbolicPair& p, std::string_view text) {
  if (text.substr(0, 2) != "R:") throw SyntaxError(0, "rosary must start with R:");
  const auto body = text.substr(2);
  if (body == "irr") return RosaryType::irr();
  const auto [tau, points] = parse_representative(p, body);
  canonicalize(p, tau, points);
  auto r = rosary_at(p, tau, points);
  if (!r) throw Error(ErrorKind::InvalidCurveType, "no length-3 rosary starts at " + std::string(body));
  return *r;
}

Rational pair_text(const HyperbolicPair& p, std::string_view curve, const DivisorClass& l) {
  if (curve.substr(0, 2) == "R:") return rosary_weight(p, parse_rosary(p, curve), l);
  const CurveClass c = parse_curve(p, curve);
  switch (c.kind) {
    case CurveClass::Kind::Bridge: return pair_bridge(p, c.type, l);
    case CurveClass::Kind::BridgeUpstairs: return pair_bridge_upstairs(p, c.type, l);
    case CurveClass::Kind::Tacnodal: return pair_tacnodal(p, c.type, l);
  }
  return 0;
}

std::string format_rosary(const RosaryType& r) {
  if (r.is_irr()) return "R:irr";
  return "R:(" + format_class(r.start()) + "," + format_class(r.middle()) + "," +
         format_class(r.end()) + ")";
}

}  // namespace mfl
