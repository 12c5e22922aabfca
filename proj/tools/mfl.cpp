// mfl: command-line front end for the moduli flip library.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "mfl/boundary_index.hpp"
#include "mfl/criteria.hpp"
#include "mfl/divisor_space.hpp"
#include "mfl/dot.hpp"
#include "mfl/error.hpp"
#include "mfl/faces.hpp"
#include "mfl/json_io.hpp"
#include "mfl/pairing.hpp"
#include "mfl/sweep.hpp"

namespace {

using namespace mfl;

struct PairArgs {
  int g = 0;
  int n = 0;
  int max_points = kDefaultMaxPoints;

  HyperbolicPair pair() const { return HyperbolicPair(g, n, max_points); }
};

void add_pair_options(CLI::App* cmd, PairArgs& a) {
  cmd->add_option("--g", a.g, "genus")->required()->check(CLI::NonNegativeNumber);
  cmd->add_option("--n", a.n, "number of marked points")->required()->check(CLI::NonNegativeNumber);
  cmd->add_option("--max-points", a.max_points, "largest n accepted")->check(CLI::Range(1, kHardMaxPoints));
}

TypeSet typeset_arg(const HyperbolicPair& p, const std::string& spec) {
  if (spec == "full") return full_typeset(p);
  if (!spec.empty() && spec.front() == '@') {
    std::ifstream in(spec.substr(1));
    if (!in) throw Error(ErrorKind::SyntaxError, "cannot read " + spec.substr(1));
    return typeset_from_json(p, Json::parse(in));
  }
  return parse_typeset(p, spec);
}

DivisorClass divisor_arg(const HyperbolicPair& p, const SpaceId& s, const std::string& spec) {
  if (!spec.empty() && spec.front() == '{') {
    Json j;
    try {
      j = Json::parse(spec);
    } catch (const nlohmann::json::exception& e) {
      throw SyntaxError(0, std::string("divisor JSON: ") + e.what());
    }
    return divisor_from_json(p, s, j);
  }
  return named_class(p, s, spec);
}

SpaceId space_arg(const std::string& name, const TypeSet& t) {
  if (name == "ps") return SpaceId::ps();
  if (name == "bar") return SpaceId::bar();
  if (name == "ulci") return SpaceId::ulci();
  if (name == "t") return SpaceId::t(t);
  if (name == "tplus") return SpaceId::tplus(t);
  throw Error(ErrorKind::UnknownName, "unknown space '" + name + "'");
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string show_typeset(const TypeSet& t) {
  const std::string s = format_typeset(t);
  return s.empty() ? "{}" : s;
}

std::string show_divisor(const DivisorClass& d) {
  std::ostringstream os;
  os << to_string(d.lambda) << " lambda + " << to_string(d.irr) << " delta_irr";
  for (const auto& [c, v] : d.coeffs) os << " + " << to_string(v) << " delta(" << format_class(c) << ")";
  return os.str();
}

void print_verdict(const char* name, const Verdict& v) {
  std::cout << name << ": " << to_string(v.value) << " (" << v.cite << ")\n";
}

void print_loci(const char* name, const std::optional<std::vector<ExceptionalComponent>>& loci) {
  std::cout << name << ":";
  if (!loci) {
    std::cout << " n/a\n";
    return;
  }
  if (loci->empty()) std::cout << " none";
  std::cout << "\n";
  for (const auto& c : *loci) {
    std::cout << "  " << to_string(c.kind) << format_pair_type(c.type) << " codim " << c.codim
              << (c.is_divisor ? " divisor" : "") << "\n";
  }
}

void print_report(const FullReport& r) {
  std::cout << "pair: (" << r.pair.g() << "," << r.pair.n() << ")\n";
  std::cout << "T: " << show_typeset(r.typeset) << "\n";
  std::cout << "T^adm: " << show_typeset(r.adm) << "\n";
  std::cout << "T^div: " << show_typeset(r.tdiv) << "\n";
  std::cout << "face_dim: " << r.face_dim << "\n";
  if (r.picard) {
    const auto& pic = *r.picard;
    std::cout << "rank_ps: " << pic.rank_ps << "\n";
    std::cout << "rank_t: " << pic.rank_t << "\n";
    std::cout << "rank_tplus: " << pic.rank_tplus << "\n";
    std::cout << "tacnodal: " << pic.tacnodal_count << " types, span " << pic.tacnodal_span << "\n";
    auto closed = [](const char* name, const std::optional<long long>& v, std::optional<bool> agrees) {
      if (!v || !agrees) return;
      std::cout << "closed_" << name << ": " << *v << (*agrees ? " (agrees)" : " (differs)") << "\n";
    };
    closed("rank_t", pic.closed_rank_t, pic.agrees_rank_t());
    closed("rank_tplus", pic.closed_rank_tplus, pic.agrees_rank_tplus());
    closed("relative_tplus", pic.closed_relative_tplus, pic.agrees_relative_tplus());
  }
  print_verdict("fT_small", r.fT_small);
  print_loci("fT_exceptional", r.fT_exceptional);
  print_verdict("fTplus_iso", r.fTplus_iso);
  print_loci("fTplus_exceptional", r.fTplus_exceptional);
  print_verdict("qfact_MT", r.qfact_MT);
  print_verdict("qgor_MT", r.qgor_MT);
  print_verdict("qfact_MTplus", r.qfact_MTplus);
  print_verdict("qgor_MTplus", r.qgor_MTplus);
  print_verdict("kflip_ok", r.kflip_ok);
  print_verdict("kpsi_flip_ok", r.kpsi_flip_ok);
  for (const auto& n : r.notes) std::cout << "note: " << n << "\n";
}

SweepConfig load_config(const std::string& path) {
  SweepConfig cfg;
  if (path.empty()) return cfg;
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::SyntaxError, "cannot read config " + path);
  Json j;
  try {
    j = Json::parse(in);
    cfg.g_min = j.value("g_min", cfg.g_min);
    cfg.g_max = j.value("g_max", cfg.g_max);
    cfg.n_max = j.value("n_max", cfg.n_max);
    cfg.sample_k = j.value("sample_k", cfg.sample_k);
    cfg.parallel = j.value("parallel", cfg.parallel);
    cfg.seed = j.value("seed", cfg.seed);
    cfg.cap = j.value("cap", cfg.cap);
    const std::string mode = j.value("mode", std::string("full"));
    if (mode == "full") {
      cfg.mode = TypesetMode::FullOnly;
    } else if (mode == "all") {
      cfg.mode = TypesetMode::AllAdmissible;
    } else if (mode == "sampled") {
      cfg.mode = TypesetMode::Sampled;
    } else {
      throw Error(ErrorKind::UnknownName, "unknown mode '" + mode + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw SyntaxError(0, std::string("config: ") + e.what());
  }
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boundary combinatorics, Picard groups and flip criteria for pseudostable moduli"};
  app.require_subcommand(1);

  PairArgs pa;
  bool json = false;
  std::string tspec;
  std::string space = "ps";
  std::string curve;
  std::string divisor;
  std::string dot_path;
  std::string alpha;
  std::string config_path;
  std::uint64_t seed = 0;
  std::uint64_t cap = lattice_cap_from_env();

  auto* classes = app.add_subcommand("classes", "list T_{g,n}");
  add_pair_options(classes, pa);
  classes->add_flag("--json", json);

  auto* minimal = app.add_subcommand("minimal", "list the minimal subsets");
  add_pair_options(minimal, pa);
  minimal->add_flag("--json", json);

  auto* adm = app.add_subcommand("adm", "admissible closure T^adm");
  add_pair_options(adm, pa);
  adm->add_option("--T", tspec, "typeset, e.g. 'irr,0:{1},1:{1}' or full")->required();
  adm->add_flag("--json", json);

  auto* tdiv = app.add_subcommand("tdiv", "divisorial part T^div");
  add_pair_options(tdiv, pa);
  tdiv->add_option("--T", tspec, "typeset")->required();
  tdiv->add_flag("--json", json);

  auto* picard = app.add_subcommand("picard", "presentation and rank of a Picard group");
  add_pair_options(picard, pa);
  picard->add_option("--space", space, "ps, bar, ulci, t or tplus")->check(CLI::IsMember({"ps", "bar", "ulci", "t", "tplus"}));
  picard->add_option("--T", tspec, "typeset for t and tplus (default full)");
  picard->add_flag("--json", json);

  auto* pair = app.add_subcommand("pair", "intersect a curve with a divisor class");
  add_pair_options(pair, pa);
  pair->add_option("--curve", curve, "C:irr, C:tau:{..}, Ctilde:.., D:.., R:..")->required();
  pair->add_option("--divisor", divisor, "preset name or divisor JSON")->required();
  pair->add_option("--T", tspec, "typeset for D: and R: curves (default full)");

  auto* face = app.add_subcommand("face", "the T-face of the Mori cone");
  add_pair_options(face, pa);
  face->add_option("--T", tspec, "typeset")->required();
  face->add_flag("--json", json);

  auto* lattice = app.add_subcommand("lattice", "lattice of faces spanned by bridge rays");
  add_pair_options(lattice, pa);
  lattice->add_option("--dot", dot_path, "write Graphviz output here ('-' for stdout)");
  lattice->add_option("--cap", cap, "largest node count (MFL_CAP)");
  lattice->add_flag("--json", json);

  auto* check = app.add_subcommand("check", "full report for (g, n, T)");
  add_pair_options(check, pa);
  check->add_option("--T", tspec, "typeset")->required();
  check->add_flag("--json", json);

  auto* hk = app.add_subcommand("hk", "log canonical model for alpha");
  hk->add_option("--alpha", alpha, "rational p/q")->required();

  auto* verify_cmd = app.add_subcommand("verify", "run the invariant sweep");
  verify_cmd->add_option("--config", config_path, "JSON sweep config");
  verify_cmd->add_option("--seed", seed, "seed for sampled typesets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return e.get_exit_code() == 0 ? code : 2;
  }

  try {
    if (*classes) {
      const auto p = pa.pair();
      Json out = Json::array();
      for (const auto& c : enumerate_classes(p)) {
        if (json) {
          out.push_back(format_class(c));
        } else {
          std::cout << format_class(c) << "\n";
        }
      }
      if (json) print(out);
    } else if (*minimal) {
      const auto p = pa.pair();
      Json out = Json::array();
      for (const auto& t : minimal_subsets(p)) {
        if (json) {
          out.push_back(pair_type_to_json(t));
        } else {
          std::cout << format_pair_type(t) << "\n";
        }
      }
      if (json) print(out);
    } else if (*adm || *tdiv) {
      const auto p = pa.pair();
      const TypeSet t = typeset_arg(p, tspec);
      const TypeSet r = *adm ? adm_closure(p, t) : divisorial_part(p, t);
      if (json) {
        print(typeset_to_json(r));
      } else {
        std::cout << show_typeset(r) << "\n";
      }
    } else if (*picard) {
      const auto p = pa.pair();
      const TypeSet t = tspec.empty() ? full_typeset(p) : typeset_arg(p, tspec);
      const Presentation pres(p, space_arg(space, t));
      if (json) {
        print(presentation_to_json(pres));
      } else {
        std::cout << "space: " << to_string(pres.space()) << "\n";
        std::cout << "generators:";
        for (const auto& g : pres.generators()) std::cout << " " << to_string(g);
        std::cout << "\nkilled:";
        for (std::size_t k : pres.killed()) std::cout << " " << to_string(pres.generators()[k]);
        std::cout << "\nrelations: " << pres.relations().rows() << "\n";
        for (std::size_t r = 0; r < pres.relations().rows(); ++r) {
          std::cout << "  " << show_divisor(pres.from_vector(linalg::Vector(pres.relations().row(r).begin(),
                                                                            pres.relations().row(r).end())))
                    << " = 0\n";
        }
        std::cout << "rank: " << pres.rank() << "\n";
      }
    } else if (*pair) {
      const auto p = pa.pair();
      SpaceId s = SpaceId::ps();
      if (curve.rfind("Ctilde:", 0) == 0) {
        s = SpaceId::bar();
      } else if (curve.rfind("D:", 0) == 0 || curve.rfind("R:", 0) == 0) {
        s = SpaceId::tplus(tspec.empty() ? full_typeset(p) : typeset_arg(p, tspec));
      }
      std::cout << to_string(pair_text(p, curve, divisor_arg(p, s, divisor))) << "\n";
    } else if (*face) {
      const auto p = pa.pair();
      const FaceDescriptor f = face_of(p, typeset_arg(p, tspec));
      if (json) {
        print(face_to_json(f));
      } else {
        std::cout << "T^adm: " << show_typeset(f.adm) << "\n";
        std::cout << "rays:";
        for (const auto& r : f.rays) std::cout << " " << format_pair_type(r);
        std::cout << "\ndim: " << f.dim << "\nperp_dim: " << f.perp_dim << "\n";
        for (const auto& d : f.perp_basis) std::cout << "  " << show_divisor(d) << "\n";
      }
    } else if (*lattice) {
      const auto p = pa.pair();
      const FaceLattice lat = face_lattice(p, cap);
      if (!dot_path.empty()) {
        const std::string dot = lattice_to_dot(p, lat);
        if (dot_path == "-") {
          std::cout << dot;
        } else {
          std::ofstream(dot_path) << dot;
        }
      }
      if (json) {
        print(lattice_to_json(p, lat));
      } else if (dot_path != "-") {
        std::cout << "rays: " << lat.rays.size() << "\nnodes: " << lat.nodes.size() << "\ncovers: "
                  << lat.covers.size() << "\n";
        for (const auto& n : lat.nodes) {
          std::cout << "  " << show_typeset(n.typeset) << " | " << n.dim << " | " << n.perp_dim
                    << (n.t_face ? "" : " (not a T-face)") << "\n";
        }
      }
    } else if (*check) {
      const auto p = pa.pair();
      const FullReport r = full_report(p, typeset_arg(p, tspec));
      if (json) {
        print(report_to_json(r));
      } else {
        print_report(r);
      }
    } else if (*hk) {
      std::cout << to_string(hk_model(parse_rational(alpha))) << "\n";
    } else if (*verify_cmd) {
      SweepConfig cfg = load_config(config_path);
      if (verify_cmd->count("--seed") > 0) cfg.seed = seed;
      std::cout << "seed: " << cfg.seed << "\n";
      const SweepResult res = verify(cfg);
      for (const auto& [key, count] : res.checks) {
        std::cout << key << ": " << count << " checks, " << res.failures_for(key) << " failures\n";
      }
      for (const auto& f : res.failures) std::cout << "FAIL " << format_issue(f) << "\n";
      if (!res.findings.empty()) {
        std::cout << "findings:\n";
        for (const auto& f : res.findings) std::cout << "  " << format_issue(f) << "\n";
      }
      std::cout << (res.ok() ? "verify: ok" : "verify: FAILED") << "\n";
      return res.ok() ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << e.name() << ": " << e.what() << "\n";
    return 3;
  }
  return 0;
}
