#pragma once

#include <cstddef>
#include <string>

#include "mfl/boundary_index.hpp"
#include "mfl/faces.hpp"

namespace mfl {

inline constexpr std::size_t kDotAnnotationLimit = 64;

// Graphviz digraph of the face lattice, edges along covers. Nodes are
// labelled "T^adm | dim | perp_dim"; past kDotAnnotationLimit nodes only the
// mask is printed. Nodes that are not T-faces are dashed.
std::string lattice_to_dot(const HyperbolicPair& p, const FaceLattice& lat);

}  // namespace mfl
