#include "mfl/json_io.hpp"

#include "mfl/error.hpp"

namespace mfl {

namespace {

Json class_to_json(const BridgeClass& c) {
  Json points = Json::array();
  for (int i = 0; i < 32; ++i) {
    if (c.points() >> i & 1u) points.push_back(i + 1);
  }
  return Json::array({c.tau(), points});
}

Json optional_count(const std::optional<long long>& v) { return v ? Json(*v) : Json(nullptr); }
Json optional_flag(const std::optional<bool>& v) { return v ? Json(*v) : Json(nullptr); }

Json loci_to_json(const std::optional<std::vector<ExceptionalComponent>>& loci) {
  if (!loci) return nullptr;
  Json out = Json::array();
  for (const auto& c : *loci) {
    out.push_back({{"kind", std::string(to_string(c.kind))},
                   {"type", pair_type_to_json(c.type)},
                   {"codim", c.codim},
                   {"is_divisor", c.is_divisor}});
  }
  return out;
}

}  // namespace

Json typeset_to_json(const TypeSet& t) {
  Json pairs = Json::array();
  for (const auto& c : t.classes) pairs.push_back(class_to_json(c));
  return {{"irr", t.irr}, {"pairs", pairs}};
}

TypeSet typeset_from_json(const HyperbolicPair& p, const Json& j) {
  TypeSet t;
  try {
    t.irr = j.at("irr").get<bool>();
    for (const auto& item : j.at("pairs")) {
      IndexSet points = 0;
      for (const auto& i : item.at(1)) {
        const int k = i.get<int>();
        if (k < 1 || k > p.n()) throw Error(ErrorKind::OutOfRange, "point " + std::to_string(k) + " out of range");
        points |= IndexSet{1} << (k - 1);
      }
      t.insert(canonicalize(p, item.at(0).get<int>(), points));
    }
  } catch (const nlohmann::json::exception& e) {
    throw SyntaxError(0, std::string("malformed typeset JSON: ") + e.what());
  }
  return t;
}

Json divisor_to_json(const DivisorClass& d) {
  Json classes = Json::object();
  for (const auto& [c, v] : d.coeffs) classes[format_class(c)] = to_string(v);
  return {{"lambda", to_string(d.lambda)}, {"irr", to_string(d.irr)}, {"classes", classes}};
}

DivisorClass divisor_from_json(const HyperbolicPair& p, const SpaceId& s, const Json& j) {
  DivisorClass d;
  d.space = s;
  try {
    if (j.contains("lambda")) d.lambda = parse_rational(j.at("lambda").get<std::string>());
    if (j.contains("irr")) d.irr = parse_rational(j.at("irr").get<std::string>());
    if (j.contains("classes")) {
      for (const auto& [key, value] : j.at("classes").items()) {
        d.add(parse_class(p, key), parse_rational(value.get<std::string>()));
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw SyntaxError(0, std::string("malformed divisor JSON: ") + e.what());
  }
  return restrict_to(p, d, s);
}

Json pair_type_to_json(const PairType& t) {
  if (t.is_irr()) return "irr";
  return Json::array({format_class(t.lower()), format_class(t.upper())});
}

Json verdict_to_json(const Verdict& v) {
  return {{"verdict", std::string(to_string(v.value))}, {"cite", v.cite}};
}

Json face_to_json(const FaceDescriptor& f) {
  Json rays = Json::array();
  for (const auto& r : f.rays) rays.push_back(pair_type_to_json(r));
  Json perp = Json::array();
  for (const auto& d : f.perp_basis) perp.push_back(divisor_to_json(d));
  return {{"typeset", typeset_to_json(f.typeset)},
          {"adm", typeset_to_json(f.adm)},
          {"rays", rays},
          {"dim", f.dim},
          {"perp_dim", f.perp_dim},
          {"perp_basis", perp}};
}

Json picard_to_json(const PicardReport& r) {
  return {{"rank_ps", r.rank_ps},
          {"rank_t", r.rank_t},
          {"rank_tplus", r.rank_tplus},
          {"rank_tplus_presentation", r.rank_tplus_presentation},
          {"face_dim", r.face_dim},
          {"tacnodal_count", r.tacnodal_count},
          {"tacnodal_span", r.tacnodal_span},
          {"full", r.full},
          {"closed_forms",
           {{"rank_t", optional_count(r.closed_rank_t)},
            {"rank_tplus", optional_count(r.closed_rank_tplus)},
            {"relative_tplus", optional_count(r.closed_relative_tplus)},
            {"face_dim", optional_count(r.closed_face_dim)}}},
          {"agreement",
           {{"rank_t", optional_flag(r.agrees_rank_t())},
            {"rank_tplus", optional_flag(r.agrees_rank_tplus())},
            {"relative_tplus", optional_flag(r.agrees_relative_tplus())},
            {"face_dim", optional_flag(r.agrees_face_dim())}}}};
}

Json presentation_to_json(const Presentation& pres) {
  Json gens = Json::array();
  for (const auto& g : pres.generators()) gens.push_back(to_string(g));
  Json killed = Json::array();
  for (std::size_t k : pres.killed()) killed.push_back(to_string(pres.generators()[k]));
  Json relations = Json::array();
  for (std::size_t r = 0; r < pres.relations().rows(); ++r) {
    Json row = Json::array();
    for (const auto& q : pres.relations().row(r)) row.push_back(to_string(q));
    relations.push_back(row);
  }
  Json out = {{"space", to_string(pres.space())},
              {"generators", gens},
              {"killed", killed},
              {"relations", relations}};
  if (pres.pair().g() >= 1) {
    out["rank"] = pres.rank();
  } else {
    out["rank"] = nullptr;
  }
  return out;
}

Json report_to_json(const FullReport& r) {
  Json rays = Json::array();
  for (const auto& t : r.rays) rays.push_back(pair_type_to_json(t));
  Json notes = Json::array();
  for (const auto& n : r.notes) notes.push_back(n);
  return {{"schema", "report/1"},
          {"pair", {{"g", r.pair.g()}, {"n", r.pair.n()}}},
          {"typeset", typeset_to_json(r.typeset)},
          {"adm", typeset_to_json(r.adm)},
          {"tdiv", typeset_to_json(r.tdiv)},
          {"face_dim", r.face_dim},
          {"rays", rays},
          {"picard", r.picard ? picard_to_json(*r.picard) : Json(nullptr)},
          {"fT_small", verdict_to_json(r.fT_small)},
          {"fT_exceptional", loci_to_json(r.fT_exceptional)},
          {"fTplus_iso", verdict_to_json(r.fTplus_iso)},
          {"fTplus_exceptional", loci_to_json(r.fTplus_exceptional)},
          {"qfact_MT", verdict_to_json(r.qfact_MT)},
          {"qgor_MT", verdict_to_json(r.qgor_MT)},
          {"qfact_MTplus", verdict_to_json(r.qfact_MTplus)},
          {"qgor_MTplus", verdict_to_json(r.qgor_MTplus)},
          {"kflip_ok", verdict_to_json(r.kflip_ok)},
          {"kpsi_flip_ok", verdict_to_json(r.kpsi_flip_ok)},
          {"applicability_notes", notes}};
}

Json lattice_to_json(const HyperbolicPair& p, const FaceLattice& lat) {
  Json rays = Json::array();
  for (const auto& r : lat.rays) rays.push_back(pair_type_to_json(r));
  Json nodes = Json::array();
  for (const auto& n : lat.nodes) {
    nodes.push_back({{"mask", n.mask},
                     {"typeset", format_typeset(n.typeset)},
                     {"dim", n.dim},
                     {"perp_dim", n.perp_dim},
                     {"t_face", n.t_face}});
  }
  Json covers = Json::array();
  for (const auto& [lo, hi] : lat.covers) covers.push_back(Json::array({lo, hi}));
  return {{"schema", "lattice/1"},
          {"pair", {{"g", p.g()}, {"n", p.n()}}},
          {"rays", rays},
          {"nodes", nodes},
          {"covers", covers}};
}

}  // namespace mfl
