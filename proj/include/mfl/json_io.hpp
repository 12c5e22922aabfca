#pragma once

#include <json.hpp>

#include "mfl/boundary_index.hpp"
#include "mfl/criteria.hpp"
#include "mfl/divisor_space.hpp"
#include "mfl/faces.hpp"

namespace mfl {

using Json = nlohmann::ordered_json;

// {"irr": bool, "pairs": [[tau, [i, ...]], ...]}
Json typeset_to_json(const TypeSet& t);
TypeSet typeset_from_json(const HyperbolicPair& p, const Json& j);

// {"lambda": "p/q", "irr": "p/q", "classes": {"tau:{...}": "p/q"}}
Json divisor_to_json(const DivisorClass& d);
DivisorClass divisor_from_json(const HyperbolicPair& p, const SpaceId& s, const Json& j);

Json pair_type_to_json(const PairType& t);
Json verdict_to_json(const Verdict& v);
Json face_to_json(const FaceDescriptor& f);
Json picard_to_json(const PicardReport& r);
Json presentation_to_json(const Presentation& pres);

// Schema "report/1".
Json report_to_json(const FullReport& r);

// Schema "lattice/1".
Json lattice_to_json(const HyperbolicPair& p, const FaceLattice& lat);

}  // namespace mfl
