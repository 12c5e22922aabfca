#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "mfl/boundary_index.hpp"
#include "mfl/divisor_space.hpp"
#include "mfl/linalg.hpp"
#include "mfl/rational.hpp"

namespace mfl {

// The face F_T of the Mori cone of M^ps spanned by the bridge curves whose
// type lies in T, together with its annihilator in Pic(M^ps)_Q.
struct FaceDescriptor {
  TypeSet typeset;
  TypeSet adm;
  std::vector<PairType> rays;
  std::size_t dim = 0;
  std::size_t perp_dim = 0;
  std::vector<DivisorClass> perp_basis;  // on PS
};

// Pairing with C(t) as a row over the presentation's generators.
linalg::Vector bridge_functional(const Presentation& pres, const PairType& t);

// A functional on the generators restricted to the quotient basis columns.
// Throws IllPosedPairing unless it vanishes on every killed generator and
// relation.
linalg::Vector restrict_functional(const Presentation& pres, const linalg::Vector& f);

// Basis of the common kernel of the given functionals inside the quotient,
// as classes on the presentation's space.
std::vector<DivisorClass> annihilator(const Presentation& pres,
                                      const std::vector<linalg::Vector>& functionals);

// Throws GenusZeroUnsupported for g = 0.
FaceDescriptor face_of(const HyperbolicPair& p, const TypeSet& t);

struct Compatibility {
  bool ok = true;
  std::optional<PairType> witness;
  Rational value;  // C(witness).L when !ok
};

// L.C(r) = 0 for every ray r of F_T; L on PS or T(.).
Compatibility t_compatible(const HyperbolicPair& p, const TypeSet& t, const DivisorClass& l);

std::size_t face_dim_closed_form(const HyperbolicPair& p);

struct IndependenceReport {
  std::size_t minimal_count = 0;
  std::size_t rank = 0;
  std::size_t rank_ps = 0;
  bool independent() const { return rank == minimal_count; }
};

IndependenceReport independence_report(const HyperbolicPair& p);

// One node per subset of the rays of the full face, keyed by a bitmask over
// minimal_subsets(p). t_face marks the nodes whose union U has exactly these
// rays, i.e. the cone is F_U.
struct LatticeNode {
  std::uint64_t mask = 0;
  TypeSet typeset;
  std::size_t dim = 0;
  std::size_t perp_dim = 0;
  bool t_face = true;
};

struct FaceLattice {
  std::vector<PairType> rays;
  std::vector<LatticeNode> nodes;  // indexed by mask
  std::vector<std::pair<std::uint64_t, std::uint64_t>> covers;  // (lower, upper)
};

inline constexpr std::uint64_t kDefaultLatticeCap = 4096;

// Reads MFL_CAP, falling back to kDefaultLatticeCap.
std::uint64_t lattice_cap_from_env();

// Throws CapExceeded when 2^(number of minimal subsets) > cap.
FaceLattice face_lattice(const HyperbolicPair& p, std::uint64_t cap = kDefaultLatticeCap);

}  // namespace mfl
