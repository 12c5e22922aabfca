#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mfl/boundary_index.hpp"
#include "mfl/divisor_space.hpp"
#include "mfl/faces.hpp"
#include "mfl/pairing.hpp"
#include "mfl/rational.hpp"

namespace mfl {

enum class Tri { Yes, No, NotApplicable };

std::string_view to_string(Tri t);

struct Verdict {
  Tri value = Tri::NotApplicable;
  std::string cite;

  bool yes() const { return value == Tri::Yes; }
};

// (2,0) and (1,2), where the contraction and flip statements degenerate.
bool is_degenerate_pair(const HyperbolicPair& p);

struct TPlusCompatibility {
  bool ok = true;
  std::optional<RosaryType> witness;
  Rational weight;  // b_end - b_start at the witness
};

// b_start = b_end for every triple of constraining_rosaries(p, t) with
// distinct endpoints. l is re-homed on TPlus(t) first, so killed
// coefficients read as zero.
TPlusCompatibility tplus_compatible(const HyperbolicPair& p, const TypeSet& t, const DivisorClass& l);

// Same test: l descends to M^{T+} exactly when it is T+-compatible.
inline TPlusCompatibility descends(const HyperbolicPair& p, const TypeSet& t, const DivisorClass& l) {
  return tplus_compatible(p, t, l);
}

// Linear constraints defining the T+-compatible subspace, as functionals on
// the TPlus(t) generators.
std::vector<linalg::Vector> tplus_constraints(const Presentation& tplus, const TypeSet& t);

// Closed forms for T = T_{g,n}; nullopt where the formula is not stated.
std::optional<long long> closed_rank_t(const HyperbolicPair& p);
std::optional<long long> closed_rank_tplus(const HyperbolicPair& p);
std::optional<long long> closed_relative_tplus(const HyperbolicPair& p);

struct PicardReport {
  std::size_t rank_ps = 0;
  std::size_t rank_t = 0;
  std::size_t rank_tplus = 0;
  std::size_t rank_tplus_presentation = 0;  // before T+ constraints
  std::size_t face_dim = 0;
  std::size_t tacnodal_count = 0;  // rays that are valid tacnodal types
  std::size_t tacnodal_span = 0;   // rank of those curves on Pic(M^{T+})
  bool full = false;               // T^adm = T_{g,n}^adm, where the closed forms apply
  std::optional<long long> closed_rank_t;
  std::optional<long long> closed_rank_tplus;
  std::optional<long long> closed_relative_tplus;
  std::optional<long long> closed_face_dim;

  std::optional<bool> agrees_rank_t() const;
  std::optional<bool> agrees_rank_tplus() const;
  std::optional<bool> agrees_relative_tplus() const;
  std::optional<bool> agrees_face_dim() const;
};

// Throws GenusZeroUnsupported.
PicardReport picard_number_report(const HyperbolicPair& p, const TypeSet& t);

struct ExceptionalComponent {
  enum class Kind { EllBridgeLocus, TacnodeLocus };
  Kind kind = Kind::EllBridgeLocus;
  PairType type = PairType::irr();
  int codim = 2;
  bool is_divisor = false;
};

std::string_view to_string(ExceptionalComponent::Kind k);

Verdict is_fT_small(const HyperbolicPair& p, const TypeSet& t);

// nullopt on the degenerate pairs.
std::optional<std::vector<ExceptionalComponent>> exceptional_loci_fT(const HyperbolicPair& p, const TypeSet& t);
std::optional<std::vector<ExceptionalComponent>> exceptional_loci_fTplus(const HyperbolicPair& p,
                                                                        const TypeSet& t);

Verdict is_fTplus_iso(const HyperbolicPair& p, const TypeSet& t);
Verdict q_factorial_MT(const HyperbolicPair& p, const TypeSet& t);
Verdict q_gorenstein_MT(const HyperbolicPair& p, const TypeSet& t);
Verdict q_factorial_MTplus(const HyperbolicPair& p, const TypeSet& t);
Verdict q_gorenstein_MTplus(const HyperbolicPair& p, const TypeSet& t);

struct FlipVerdict {
  bool fT_antiample = true;
  std::optional<PairType> antiample_witness;  // first ray with C.L >= 0
  Rational antiample_value;
  bool restriction_tplus_compatible = true;
  std::optional<RosaryType> compatibility_witness;
  Verdict is_L_flip;
};

// l on PS.
FlipVerdict flip_verdict(const HyperbolicPair& p, const TypeSet& t, const DivisorClass& l);

enum class HkModel { Mbar, PS, TFull, TFullPlus, BelowRange };

std::string_view to_string(HkModel m);

// Throws OutOfRange outside [0, 1].
HkModel hk_model(const Rational& alpha);

struct FullReport {
  explicit FullReport(const HyperbolicPair& p) : pair(p) {}

  HyperbolicPair pair;
  TypeSet typeset;
  TypeSet adm;
  TypeSet tdiv;
  std::size_t face_dim = 0;
  std::vector<PairType> rays;
  std::optional<PicardReport> picard;  // absent for g = 0
  Verdict fT_small;
  std::optional<std::vector<ExceptionalComponent>> fT_exceptional;
  Verdict fTplus_iso;
  std::optional<std::vector<ExceptionalComponent>> fTplus_exceptional;
  Verdict qfact_MT;
  Verdict qgor_MT;
  Verdict qfact_MTplus;
  Verdict qgor_MTplus;
  Verdict kflip_ok;
  Verdict kpsi_flip_ok;
  std::vector<std::string> notes;
};

FullReport full_report(const HyperbolicPair& p, const TypeSet& t);

}  // namespace mfl
