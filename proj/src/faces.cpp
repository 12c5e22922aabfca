#include "mfl/faces.hpp"

#include <bit>
#include <cstdlib>
#include <limits>
#include <string>

#include "mfl/error.hpp"
#include "mfl/pairing.hpp"

namespace mfl {

linalg::Vector bridge_functional(const Presentation& pres, const PairType& t) {
  linalg::Vector f(pres.size());
  f[0] = 1;
  if (t.is_irr()) {
    f[1] = 10;
  } else {
    f[1] = 12;
    f[pres.index_of(t.lower())] -= 1;
    f[pres.index_of(t.upper())] -= 1;
  }
  return f;
}

linalg::Vector restrict_functional(const Presentation& pres, const linalg::Vector& f) {
  const auto& reduced = pres.quotient().reduced;
  for (std::size_t r = 0; r < reduced.rows(); ++r) {
    Rational value;
    auto row = reduced.row(r);
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (sgn(row[k]) != 0) value += row[k] * f[k];
    }
    if (sgn(value) != 0) {
      throw Error(ErrorKind::IllPosedPairing,
                  "functional does not vanish on the relations of " + to_string(pres.space()));
    }
  }
  linalg::Vector out;
  for (std::size_t k : pres.basis()) out.push_back(f[k]);
  return out;
}

std::vector<DivisorClass> annihilator(const Presentation& pres,
                                      const std::vector<linalg::Vector>& functionals) {
  const auto basis = pres.basis();
  linalg::Matrix m(basis.size());
  for (const auto& f : functionals) m.append_row(restrict_functional(pres, f));
  std::vector<DivisorClass> out;
  for (const auto& x : linalg::null_space(m)) {
    linalg::Vector v(pres.size());
    for (std::size_t i = 0; i < basis.size(); ++i) v[basis[i]] = x[i];
    out.push_back(pres.from_vector(v));
  }
  return out;
}

FaceDescriptor face_of(const HyperbolicPair& p, const TypeSet& t) {
  if (p.g() == 0) {
    throw Error(ErrorKind::GenusZeroUnsupported, "faces need the Picard relations, which are not encoded for g = 0");
  }
  FaceDescriptor face;
  face.typeset = t;
  face.adm = adm_closure(p, t);
  face.rays = minimal_subsets_in(p, face.adm);
  face.dim = face.rays.size();

  const Presentation pres(p, SpaceId::ps());
  std::vector<linalg::Vector> rows;
  for (const auto& r : face.rays) rows.push_back(bridge_functional(pres, r));
  face.perp_basis = annihilator(pres, rows);
  face.perp_dim = face.perp_basis.size();
  return face;
}

Compatibility t_compatible(const HyperbolicPair& p, const TypeSet& t, const DivisorClass& l) {
  Compatibility out;
  for (const auto& r : minimal_subsets_in(p, adm_closure(p, t))) {
    const Rational v = pair_bridge(p, r, l);
    if (sgn(v) != 0) {
      out.ok = false;
      out.witness = r;
      out.value = v;
      break;
    }
  }
  return out;
}

std::size_t face_dim_closed_form(const HyperbolicPair& p) {
  const int g = p.g();
  const int n = p.n();
  if (g == 0) return 0;
  if (g == 2 && n == 0) return 1;
  if (n == 0) return g % 2 == 1 ? (g - 1) / 2 : g / 2 - 1;
  return static_cast<std::size_t>(g) * (std::size_t{1} << (n - 1)) - 1;
}

IndependenceReport independence_report(const HyperbolicPair& p) {
  const Presentation pres(p, SpaceId::ps());
  IndependenceReport rep;
  rep.rank_ps = pres.rank();
  const auto rays = minimal_subsets(p);
  rep.minimal_count = rays.size();
  linalg::Matrix m(pres.basis().size());
  for (const auto& r : rays) m.append_row(restrict_functional(pres, bridge_functional(pres, r)));
  rep.rank = linalg::rank(m);
  return rep;
}

std::uint64_t lattice_cap_from_env() {
  if (const char* env = std::getenv("MFL_CAP")) {
    try {
      const unsigned long long v = std::stoull(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return kDefaultLatticeCap;
}

FaceLattice face_lattice(const HyperbolicPair& p, std::uint64_t cap) {
  if (p.g() == 0) {
    throw Error(ErrorKind::GenusZeroUnsupported, "the lattice annotations need Picard ranks, unavailable for g = 0");
  }
  FaceLattice lat;
  lat.rays = minimal_subsets(p);
  const std::size_t m = lat.rays.size();
  const std::uint64_t required =
      m >= 64 ? std::numeric_limits<std::uint64_t>::max() : (std::uint64_t{1} << m);
  if (required > cap) throw CapExceeded(required, cap);

  const Presentation pres(p, SpaceId::ps());
  const std::size_t rank_ps = pres.rank();
  std::vector<linalg::Vector> restricted;
  for (const auto& r : lat.rays) restricted.push_back(restrict_functional(pres, bridge_functional(pres, r)));

  lat.nodes.resize(required);
  for (std::uint64_t mask = 0; mask < required; ++mask) {
    LatticeNode& node = lat.nodes[mask];
    node.mask = mask;
    linalg::Matrix rows(pres.basis().size());
    for (std::size_t i = 0; i < m; ++i) {
      if (!(mask >> i & 1)) continue;
      node.typeset = set_union(node.typeset, lat.rays[i].as_typeset());
      rows.append_row(restricted[i]);
    }
    node.dim = static_cast<std::size_t>(std::popcount(mask));
    node.perp_dim = rank_ps - linalg::rank(rows);
    node.t_face = minimal_subsets_in(p, node.typeset).size() == node.dim;
    for (std::size_t i = 0; i < m; ++i) {
      if (!(mask >> i & 1)) lat.covers.emplace_back(mask, mask | (std::uint64_t{1} << i));
    }
  }
  return lat;
}

}  // namespace mfl
