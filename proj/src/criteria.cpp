#include "mfl/criteria.hpp"

#include "mfl/error.hpp"

namespace mfl {

std::string_view to_string(Tri t) {
  switch (t) {
    case Tri::Yes: return "Yes";
    case Tri::No: return "No";
    case Tri::NotApplicable: return "NotApplicable";
  }
  return "?";
}

std::string_view to_string(ExceptionalComponent::Kind k) {
  return k == ExceptionalComponent::Kind::EllBridgeLocus ? "Ell" : "Tac";
}

std::string_view to_string(HkModel m) {
  switch (m) {
    case HkModel::Mbar: return "Mbar";
    case HkModel::PS: return "PS";
    case HkModel::TFull: return "TFull";
    case HkModel::TFullPlus: return "TFullPlus";
    case HkModel::BelowRange: return "BelowRange";
  }
  return "?";
}

bool is_degenerate_pair(const HyperbolicPair& p) { return p.is(2, 0) || p.is(1, 2); }

namespace {

const char* kCite20 =
    "(g,n) = (2,0): the pseudostable stack is not separated and the T+ stack is only locally "
    "closed, so the contraction and flip statements do not apply";
const char* kCite12 =
    "(g,n) = (1,2): M^T is a point once T^adm is nonempty and the T+ stack is empty, so the "
    "contraction and flip statements degenerate";

std::optional<Verdict> degenerate(const HyperbolicPair& p) {
  if (p.is(2, 0)) return Verdict{Tri::NotApplicable, kCite20};
  if (p.is(1, 2)) return Verdict{Tri::NotApplicable, kCite12};
  return std::nullopt;
}

Verdict verdict(bool yes, std::string cite) { return {yes ? Tri::Yes : Tri::No, std::move(cite)}; }

bool endpoints_constrain(const RosaryType& r) { return r.start() != r.end(); }

}  // namespace

TPlusCompatibility tplus_compatible(const HyperbolicPair& p, const TypeSet& t, const DivisorClass& l) {
  const DivisorClass on_plus = restrict_to(p, l, SpaceId::tplus(t));
  TPlusCompatibility out;
  for (const auto& r : constraining_rosaries(p, t)) {
    if (!endpoints_constrain(r)) continue;
    const Rational w = rosary_weight(p, r, on_plus);
    if (sgn(w) != 0) {
      out.ok = false;
      out.witness = r;
      out.weight = w;
      break;
    }
  }
  return out;
}

std::vector<linalg::Vector> tplus_constraints(const Presentation& tplus, const TypeSet& t) {
  std::vector<linalg::Vector> rows;
  for (const auto& r : constraining_rosaries(tplus.pair(), t)) {
    if (!endpoints_constrain(r)) continue;
    linalg::Vector f(tplus.size());
    f[tplus.index_of(r.end())] += 1;
    f[tplus.index_of(r.start())] -= 1;
    rows.push_back(std::move(f));
  }
  return rows;
}

std::optional<long long> closed_rank_t(const HyperbolicPair& p) {
  const long long g = p.g();
  const long long n = p.n();
  if (g < 1) return std::nullopt;
  if (n == 0) {
    if (g < 3) return std::nullopt;
    return g % 2 == 1 ? 1 : 2;
  }
  return (1LL << (n - 1)) + 1 - (g == 2 ? 1 : 0) - (g == 1 ? n + 1 : 0);
}

std::optional<long long> closed_rank_tplus(const HyperbolicPair& p) {
  const long long g = p.g();
  const long long n = p.n();
  if (g < 1 || is_degenerate_pair(p)) return std::nullopt;
  if (n == 0) {
    if (g < 3) return std::nullopt;
    return g % 2 == 1 ? 3 - (g == 3 ? 1 : 0) : 4 - (g == 4 ? 1 : 0);
  }
  return (1LL << n) + 2 - (g == 2 ? n + 2 : 0) - (g == 1 ? 2 * n + 2 : 0);
}

std::optional<long long> closed_relative_tplus(const HyperbolicPair& p) {
  const long long g = p.g();
  const long long n = p.n();
  if (g < 1 || is_degenerate_pair(p)) return std::nullopt;
  if (n == 0) {
    if (g < 3) return std::nullopt;
    return g % 2 == 1 ? 2 - (g == 3 ? 1 : 0) : 2 - (g == 4 ? 1 : 0);
  }
  return (1LL << (n - 1)) + 1 - (g == 2 ? n + 1 : 0) - (g == 1 ? n + 1 : 0);
}

namespace {

std::optional<bool> agree(const std::optional<long long>& closed, std::size_t direct, bool full) {
  if (!full || !closed) return std::nullopt;
  return *closed == static_cast<long long>(direct);
}

}  // namespace

std::optional<bool> PicardReport::agrees_rank_t() const { return agree(closed_rank_t, rank_t, full); }
std::optional<bool> PicardReport::agrees_rank_tplus() const { return agree(closed_rank_tplus, rank_tplus, full); }
std::optional<bool> PicardReport::agrees_relative_tplus() const {
  return agree(closed_relative_tplus, rank_tplus - rank_t, full);
}
std::optional<bool> PicardReport::agrees_face_dim() const { return agree(closed_face_dim, face_dim, full); }

PicardReport picard_number_report(const HyperbolicPair& p, const TypeSet& t) {
  PicardReport rep;
  const FaceDescriptor face = face_of(p, t);
  rep.rank_ps = rank(p, SpaceId::ps());
  rep.rank_t = face.perp_dim;
  rep.face_dim = face.dim;

  const Presentation plus(p, SpaceId::tplus(t));
  rep.rank_tplus_presentation = plus.rank();
  const auto compatible = annihilator(plus, tplus_constraints(plus, t));
  rep.rank_tplus = compatible.size();

  // Tacnodal curves pair with the T+-compatible classes; their span there
  // is the relative Picard number of f_T^+.
  const auto basis = plus.basis();
  linalg::Matrix pairings(compatible.size());
  for (const auto& ray : face.rays) {
    if (!is_valid_tacnodal_type(p, ray)) continue;
    ++rep.tacnodal_count;
    const linalg::Vector f = restrict_functional(plus, bridge_functional(plus, ray));
    linalg::Vector row;
    for (const auto& c : compatible) {
      const linalg::Vector v = plus.to_vector(c);
      Rational value;
      for (std::size_t i = 0; i < basis.size(); ++i) value += f[i] * v[basis[i]];
      row.push_back(-value);
    }
    pairings.append_row(std::move(row));
  }
  rep.tacnodal_span = linalg::rank(pairings);

  rep.full = face.adm == adm_closure(p, full_typeset(p));
  rep.closed_rank_t = closed_rank_t(p);
  rep.closed_rank_tplus = closed_rank_tplus(p);
  rep.closed_relative_tplus = closed_relative_tplus(p);
  rep.closed_face_dim = static_cast<long long>(face_dim_closed_form(p));
  return rep;
}

Verdict is_fT_small(const HyperbolicPair& p, const TypeSet& t) {
  if (auto d = degenerate(p)) return *d;
  const bool small = divisorial_part(p, adm_closure(p, t)).empty();
  return verdict(small, small ? "T^adm contains no pair {[0,{i}],[1,{i}]}"
                              : "T^adm contains a pair {[0,{i}],[1,{i}]}, so f_T contracts the divisor Delta_{1,{i}}");
}

std::optional<std::vector<ExceptionalComponent>> exceptional_loci_fT(const HyperbolicPair& p, const TypeSet& t) {
  if (is_degenerate_pair(p)) return std::nullopt;
  std::vector<ExceptionalComponent> out;
  for (const auto& r : minimal_subsets_in(p, adm_closure(p, t))) {
    ExceptionalComponent c;
    c.kind = ExceptionalComponent::Kind::EllBridgeLocus;
    c.type = r;
    c.is_divisor = is_divisorial_pair(p, r);
    c.codim = c.is_divisor ? 1 : 2;
    out.push_back(c);
  }
  return out;
}

std::optional<std::vector<ExceptionalComponent>> exceptional_loci_fTplus(const HyperbolicPair& p,
                                                                        const TypeSet& t) {
  if (is_degenerate_pair(p)) return std::nullopt;
  std::vector<ExceptionalComponent> out;
  for (const auto& r : minimal_subsets_in(p, adm_closure(p, t))) {
    if (!is_valid_tacnodal_type(p, r)) continue;
    ExceptionalComponent c;
    c.kind = ExceptionalComponent::Kind::TacnodeLocus;
    c.type = r;
    out.push_back(c);
  }
  return out;
}

namespace {

Verdict adm_equals_div(const HyperbolicPair& p, const TypeSet& t, const char* yes, const char* no) {
  const bool eq = adm_closure(p, t) == divisorial_part(p, t);
  return verdict(eq, eq ? yes : no);
}

}  // namespace

Verdict is_fTplus_iso(const HyperbolicPair& p, const TypeSet& t) {
  if (auto d = degenerate(p)) return *d;
  return adm_equals_div(p, t, "T^adm = T^div", "T^adm differs from T^div");
}

Verdict q_factorial_MT(const HyperbolicPair& p, const TypeSet& t) {
  if (p.is(2, 0)) return {Tri::NotApplicable, kCite20};
  return adm_equals_div(p, t, "T^adm = T^div", "T^adm differs from T^div");
}

Verdict q_gorenstein_MT(const HyperbolicPair& p, const TypeSet& t) { return q_factorial_MT(p, t); }

Verdict q_factorial_MTplus(const HyperbolicPair& p, const TypeSet& t) {
  if (auto d = degenerate(p)) return *d;
  for (const auto& r : constraining_rosaries(p, t)) {
    if (endpoints_constrain(r)) {
      return verdict(false, "T contains the triple " + format_rosary(r) +
                                " with distinct endpoints outside [1,{}] and [1,{j}]");
    }
  }
  return verdict(true, "T contains no triple with distinct endpoints outside [1,{}] and [1,{j}]");
}

Verdict q_gorenstein_MTplus(const HyperbolicPair& p, const TypeSet& t) {
  if (auto d = degenerate(p)) return *d;
  if (p.is(3, 1) || p.is(3, 2) || p.is(2, 2)) {
    return verdict(true, "(g,n) is one of (3,1), (3,2), (2,2), where the point triples impose no condition");
  }
  for (int j = 1; j <= p.n(); ++j) {
    const IndexSet bit = IndexSet{1} << (j - 1);
    if (auto r = rosary_at(p, 0, bit); r && r->as_typeset().subset_of(t)) {
      return verdict(false, "T contains the triple {[0,{j}],[1,{j}],[2,{j}]} for j = " + std::to_string(j));
    }
  }
  return verdict(true, "T contains no triple {[0,{j}],[1,{j}],[2,{j}]}");
}

FlipVerdict flip_verdict(const HyperbolicPair& p, const TypeSet& t, const DivisorClass& l) {
  if (l.space.kind != SpaceKind::PS) {
    throw Error(ErrorKind::WrongSpace, "flip verdicts take a class on ps, got " + to_string(l.space));
  }
  FlipVerdict out;
  for (const auto& r : minimal_subsets_in(p, adm_closure(p, t))) {
    const Rational v = pair_bridge(p, r, l);
    if (sgn(v) >= 0) {
      out.fT_antiample = false;
      out.antiample_witness = r;
      out.antiample_value = v;
      break;
    }
  }
  const auto compat = tplus_compatible(p, t, l);
  out.restriction_tplus_compatible = compat.ok;
  out.compatibility_witness = compat.witness;

  if (auto d = degenerate(p)) {
    out.is_L_flip = *d;
  } else if (!out.fT_antiample) {
    out.is_L_flip = verdict(false, "L is not f_T-antiample: C" + format_pair_type(*out.antiample_witness) +
                                       ".L = " + to_string(out.antiample_value));
  } else if (!compat.ok) {
    out.is_L_flip = verdict(false, "the restriction of L is not T+-compatible at " + format_rosary(*compat.witness));
  } else {
    out.is_L_flip = verdict(true, "L is f_T-antiample and its restriction is T+-compatible");
  }
  return out;
}

HkModel hk_model(const Rational& alpha) {
  if (alpha > 1 || sgn(alpha) < 0) {
    throw Error(ErrorKind::OutOfRange, "alpha " + to_string(alpha) + " outside [0,1]");
  }
  if (alpha > Rational(9, 11)) return HkModel::Mbar;
  if (alpha > Rational(7, 10)) return HkModel::PS;
  if (alpha == Rational(7, 10)) return HkModel::TFull;
  if (alpha > Rational(2, 3)) return HkModel::TFullPlus;
  return HkModel::BelowRange;
}

FullReport full_report(const HyperbolicPair& p, const TypeSet& t) {
  FullReport rep(p);
  rep.typeset = t;
  rep.adm = adm_closure(p, t);
  rep.tdiv = divisorial_part(p, t);
  rep.rays = minimal_subsets_in(p, rep.adm);
  rep.face_dim = rep.rays.size();
  if (p.g() >= 1) {
    rep.picard = picard_number_report(p, t);
  } else {
    rep.notes.push_back("g = 0: the Picard relations are not encoded, so no ranks are reported");
  }
  rep.fT_small = is_fT_small(p, t);
  rep.fT_exceptional = exceptional_loci_fT(p, t);
  rep.fTplus_iso = is_fTplus_iso(p, t);
  rep.fTplus_exceptional = exceptional_loci_fTplus(p, t);
  rep.qfact_MT = q_factorial_MT(p, t);
  rep.qgor_MT = q_gorenstein_MT(p, t);
  rep.qfact_MTplus = q_factorial_MTplus(p, t);
  rep.qgor_MTplus = q_gorenstein_MTplus(p, t);
  rep.kflip_ok = flip_verdict(p, t, named_class(p, SpaceId::ps(), ClassName{ClassName::Kind::K})).is_L_flip;
  rep.kpsi_flip_ok = flip_verdict(p, t, named_class(p, SpaceId::ps(), ClassName{ClassName::Kind::KPlusPsi})).is_L_flip;

  if (p.is(1, 1)) rep.notes.push_back("M^ps_{1,1} excluded: the pseudostable stack M^ps_{1,1} is empty");
  if (p.is(2, 0)) rep.notes.push_back(kCite20);
  if (p.is(1, 2)) rep.notes.push_back(kCite12);
  if (p.is(1, 2) || p.is(2, 1) || p.is(3, 0)) {
    rep.notes.push_back(
        "the canonical class of the coarse space differs from 13 lambda - 2 delta + psi by the ramification "
        "divisor of the map from the stack");
  }
  return rep;
}

}  // namespace mfl
