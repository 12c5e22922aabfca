#include "mfl/dot.hpp"

#include <sstream>

namespace mfl {

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\' || c == '{' || c == '}' || c == '|' || c == '<' || c == '>') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string lattice_to_dot(const HyperbolicPair& p, const FaceLattice& lat) {
  const bool annotate = lat.nodes.size() <= kDotAnnotationLimit;
  std::ostringstream os;
  os << "digraph lattice_" << p.g() << "_" << p.n() << " {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=record];\n";
  for (const auto& n : lat.nodes) {
    os << "  n" << n.mask << " [label=\"";
    if (annotate) {
      const std::string set = format_typeset(n.typeset);
      os << escape(set.empty() ? "{}" : set) << " | " << n.dim << " | " << n.perp_dim;
    } else {
      os << n.mask;
    }
    os << "\"";
    if (!n.t_face) os << ", style=dashed";
    os << "];\n";
  }
  for (const auto& [lo, hi] : lat.covers) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace mfl
