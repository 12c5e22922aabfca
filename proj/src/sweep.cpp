#include "mfl/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "mfl/criteria.hpp"
#include "mfl/divisor_space.hpp"
#include "mfl/error.hpp"
#include "mfl/faces.hpp"
#include "mfl/pairing.hpp"

namespace mfl {

std::size_t SweepResult::failures_for(const std::string& key) const {
  return static_cast<std::size_t>(
      std::count_if(failures.begin(), failures.end(), [&](const SweepIssue& i) { return i.key == key; }));
}

void SweepResult::merge(SweepResult other) {
  for (const auto& [k, v] : other.checks) checks[k] += v;
  for (auto& f : other.failures) failures.push_back(std::move(f));
  for (auto& f : other.findings) findings.push_back(std::move(f));
}

std::string format_issue(const SweepIssue& i) {
  std::ostringstream os;
  os << "[" << i.key << "] (" << i.g << "," << i.n << ")";
  if (i.typeset == "full") {
    os << " T=full";
  } else if (!i.typeset.empty()) {
    os << " T={" << i.typeset << "}";
  }
  os << ": " << i.message;
  return os.str();
}

std::vector<TypeSet> all_admissible(const HyperbolicPair& p, std::uint64_t cap) {
  const auto rays = minimal_subsets(p);
  if (rays.size() >= 64 || (std::uint64_t{1} << rays.size()) > cap) return {};
  std::set<TypeSet> seen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rays.size()); ++mask) {
    TypeSet t;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (mask >> i & 1) t = set_union(t, rays[i].as_typeset());
    }
    seen.insert(std::move(t));
  }
  return {seen.begin(), seen.end()};
}

namespace {

std::mt19937_64 pair_rng(const HyperbolicPair& p, std::uint64_t seed, std::uint64_t salt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(p.g()), static_cast<std::uint32_t>(p.n()),
                    static_cast<std::uint32_t>(salt)};
  return std::mt19937_64(seq);
}

}  // namespace

std::vector<TypeSet> sample_admissible(const HyperbolicPair& p, std::size_t k, std::uint64_t seed) {
  const auto rays = minimal_subsets(p);
  std::set<TypeSet> seen{TypeSet{}, adm_closure(p, full_typeset(p))};
  auto rng = pair_rng(p, seed, 1);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t s = 0; s < k; ++s) {
    TypeSet t;
    for (const auto& r : rays) {
      if (coin(rng)) t = set_union(t, r.as_typeset());
    }
    seen.insert(std::move(t));
  }
  return {seen.begin(), seen.end()};
}

std::vector<TypeSet> sweep_typesets(const HyperbolicPair& p, const SweepConfig& cfg) {
  switch (cfg.mode) {
    case TypesetMode::FullOnly: return {full_typeset(p)};
    case TypesetMode::AllAdmissible: {
      auto all = all_admissible(p, cfg.cap);
      if (!all.empty()) return all;
      return sample_admissible(p, cfg.sample_k, cfg.seed);
    }
    case TypesetMode::Sampled: return sample_admissible(p, cfg.sample_k, cfg.seed);
  }
  return {};
}

namespace {

class Checker {
 public:
  explicit Checker(const HyperbolicPair& p) : p_(p) {}

  // Records one evaluated assertion; returns cond.
  bool expect(const char* key, bool cond, const TypeSet* t, const std::string& message) {
    ++result_.checks[key];
    if (!cond) result_.failures.push_back(issue(key, t, message));
    return cond;
  }

  void finding(const char* key, const TypeSet* t, const std::string& message) {
    result_.findings.push_back(issue(key, t, message));
  }

  SweepResult take() { return std::move(result_); }

 private:
  SweepIssue issue(const char* key, const TypeSet* t, const std::string& message) const {
    std::string shown;
    if (t) shown = *t == full_typeset(p_) ? "full" : format_typeset(*t);
    return {key, p_.g(), p_.n(), shown, message};
  }

  HyperbolicPair p_;
  SweepResult result_;
};

std::string show(const Rational& q) { return to_string(q); }

void check_closure(Checker& ck, const HyperbolicPair& p, const TypeSet& t) {
  const TypeSet adm = adm_closure(p, t);
  ck.expect(check::kClosure, adm_closure(p, adm) == adm, &t, "adm_closure is not idempotent");
  TypeSet unions;
  for (const auto& r : minimal_subsets_in(p, t)) unions = set_union(unions, r.as_typeset());
  ck.expect(check::kClosure, unions == adm, &t,
            "adm_closure {" + format_typeset(adm) + "} differs from the union of minimal subsets {" +
                format_typeset(unions) + "}");
  ck.expect(check::kClosure, is_admissible(p, t) == (adm == t), &t, "is_admissible disagrees with adm_closure");
  const TypeSet div = divisorial_part(p, t);
  ck.expect(check::kClosure, div.subset_of(adm) && is_admissible(p, div), &t,
            "T^div is not an admissible subset of T^adm");
}

void check_lattice(Checker& ck, const HyperbolicPair& p, std::uint64_t cap) {
  if (p.g() == 0) return;
  const std::size_t m = minimal_subsets(p).size();
  if (m >= 64 || (std::uint64_t{1} << m) > cap) {
    bool thrown = false;
    try {
      face_lattice(p, cap);
    } catch (const CapExceeded&) {
      thrown = true;
    }
    ck.expect(check::kClosure, thrown, nullptr, "face_lattice above the cap did not raise CapExceeded");
    return;
  }
  const FaceLattice lat = face_lattice(p, cap);
  const std::uint64_t size = std::uint64_t{1} << m;
  ck.expect(check::kClosure, lat.nodes.size() == size, nullptr,
            "lattice has " + std::to_string(lat.nodes.size()) + " nodes, expected " + std::to_string(size));
  ck.expect(check::kClosure, lat.covers.size() == m * (size / 2), nullptr, "lattice cover count is not m 2^(m-1)");
  const std::size_t rank_ps = rank(p, SpaceId::ps());
  for (const auto& node : lat.nodes) {
    if (!ck.expect(check::kClosure, node.perp_dim + node.dim == rank_ps, nullptr,
                   "lattice node " + std::to_string(node.mask) + " has dim + perp_dim != rank(PS)")) {
      break;
    }
  }
}

// Random subsets of T_{g,n}, not necessarily admissible, for the closure
// properties.
std::vector<TypeSet> random_subsets(const HyperbolicPair& p, std::size_t k, std::uint64_t seed) {
  const auto classes = enumerate_classes(p);
  std::vector<TypeSet> out{TypeSet{}, full_typeset(p)};
  auto rng = pair_rng(p, seed, 2);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t s = 0; s < k; ++s) {
    TypeSet t;
    for (const auto& c : classes) {
      if (coin(rng)) t.insert(c);
    }
    out.push_back(std::move(t));
  }
  return out;
}

void check_constants(Checker& ck, const HyperbolicPair& p) {
  const auto ps = SpaceId::ps();
  const DivisorClass kpsi = named_class(p, ps, "K+psi");
  const DivisorClass k = named_class(p, ps, "K");
  for (const auto& t : minimal_subsets(p)) {
    const Rational v = pair_bridge(p, t, kpsi);
    ck.expect(check::kConstants, v == -7, nullptr, "(K+psi).C" + format_pair_type(t) + " = " + show(v));
    const Rational w = pair_bridge(p, t, k);
    ck.expect(check::kConstants, sgn(w) < 0, nullptr, "K.C" + format_pair_type(t) + " = " + show(w) + " is not negative");
  }
  const TypeSet full = full_typeset(p);
  const DivisorClass kpsi_plus = named_class(p, SpaceId::tplus(full), "K+psi");
  for (const auto& t : minimal_subsets(p)) {
    if (!is_valid_tacnodal_type(p, t)) continue;
    const Rational v = pair_tacnodal(p, t, kpsi_plus);
    ck.expect(check::kConstants, v == 7, nullptr, "(K+psi).D" + format_pair_type(t) + " = " + show(v));
  }
}

void check_projection(Checker& ck, const HyperbolicPair& p) {
  const Presentation pres(p, SpaceId::ps());
  for (const auto& t : minimal_subsets(p)) {
    for (std::size_t b : pres.basis()) {
      const DivisorClass l = pres.generator_class(b);
      const Rational down = pair_bridge(p, t, l);
      const Rational up = pair_bridge_upstairs(p, t, pullback_upsilon(p, l));
      ck.expect(check::kProjection, down == up, nullptr,
                "C" + format_pair_type(t) + " against " + to_string(pres.generators()[b]) + ": " + show(down) +
                    " downstairs, " + show(up) + " upstairs");
    }
  }
}

bool weights_vanish(const HyperbolicPair& p, const TypeSet& t, const DivisorClass& l) {
  for (const auto& r : rosary_types(p)) {
    if (!r.as_typeset().subset_of(t)) continue;
    if (is_one_point_class(p, r.start()) || is_one_point_class(p, r.end())) continue;
    if (sgn(rosary_weight(p, r, l)) != 0) return false;
  }
  return true;
}

void check_descent(Checker& ck, const HyperbolicPair& p, const TypeSet& t, std::uint64_t seed) {
  const Presentation plus(p, SpaceId::tplus(t));
  std::vector<DivisorClass> probes;
  for (std::size_t b : plus.basis()) probes.push_back(plus.generator_class(b));
  // A few random combinations, so that cancellation between generators is
  // exercised as well.
  auto rng = pair_rng(p, seed, 3);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int s = 0; s < 4; ++s) {
    DivisorClass l;
    l.space = plus.space();
    for (std::size_t b : plus.basis()) l += Rational(coeff(rng)) * plus.generator_class(b);
    probes.push_back(l);
  }
  probes.push_back(named_class(p, plus.space(), "K"));
  probes.push_back(named_class(p, plus.space(), "K+psi"));
  for (const auto& l : probes) {
    const bool compat = tplus_compatible(p, t, l).ok;
    ck.expect(check::kDescent, compat == weights_vanish(p, t, l), &t,
              "tplus_compatible disagrees with the rosary weights");
  }
}

bool is_picard_anchor(const HyperbolicPair& p) {
  return (p.n() == 0 && p.g() >= 3) || p.is(3, 1) || p.is(3, 2) || p.is(2, 1) || p.is(1, 2);
}

bool is_tplus_anchor(const HyperbolicPair& p) { return (p.n() == 0 && p.g() >= 3) || p.is(3, 2); }

void check_ranks(Checker& ck, const HyperbolicPair& p, const TypeSet& t, bool independent) {
  const PicardReport rep = picard_number_report(p, t);
  if (independent) {
    ck.expect(check::kRanks, rep.rank_ps - rep.rank_t == rep.face_dim, &t,
              "rank(PS) - rank(T) = " + std::to_string(rep.rank_ps - rep.rank_t) + " but dim F_T = " +
                  std::to_string(rep.face_dim));
  }
  if (!ck.expect(check::kRanks, rep.rank_tplus >= rep.rank_t, &t,
                 "rank(T+) = " + std::to_string(rep.rank_tplus) + " < rank(T) = " + std::to_string(rep.rank_t))) {
    return;
  }
  if (rep.rank_tplus - rep.rank_t != rep.tacnodal_count || rep.rank_tplus - rep.rank_t != rep.tacnodal_span) {
    ck.finding(check::kRanks, &t,
               "rank(T+) - rank(T) = " + std::to_string(rep.rank_tplus - rep.rank_t) + " while " +
                   std::to_string(rep.tacnodal_count) + " rays are tacnodal types (span " +
                   std::to_string(rep.tacnodal_span) + ")");
  }
  if (q_factorial_MTplus(p, t).yes()) {
    ck.expect(check::kOther, rep.rank_tplus == rep.rank_tplus_presentation, &t,
              "Q-factorial M^{T+} but T+ constraints cut the rank");
  }

  if (!rep.full) return;
  if (auto a = rep.agrees_rank_t()) {
    const std::string msg = "rank(T) = " + std::to_string(rep.rank_t) + ", closed form " +
                            std::to_string(*rep.closed_rank_t);
    if (is_picard_anchor(p)) {
      ck.expect(check::kPicard710, *a, &t, msg);
    } else if (!*a) {
      ck.finding(check::kPicard710, &t, msg);
    }
  }
  auto tplus_form = [&](std::optional<bool> a, long long closed, std::size_t direct, const char* what) {
    if (!a) return;
    const std::string msg = std::string(what) + " = " + std::to_string(direct) + ", closed form " +
                            std::to_string(closed);
    if (is_tplus_anchor(p)) {
      ck.expect(check::kOther, *a, &t, msg);
    } else if (!*a) {
      ck.finding(check::kOther, &t, msg);
    }
  };
  if (rep.closed_rank_tplus) {
    tplus_form(rep.agrees_rank_tplus(), *rep.closed_rank_tplus, rep.rank_tplus, "rank(T+)");
  }
  if (rep.closed_relative_tplus) {
    tplus_form(rep.agrees_relative_tplus(), *rep.closed_relative_tplus, rep.rank_tplus - rep.rank_t,
               "relative Picard number of f_T^+");
  }
}

void check_flips(Checker& ck, const HyperbolicPair& p, const TypeSet& t) {
  if (is_degenerate_pair(p)) return;
  const auto ps = SpaceId::ps();
  const FlipVerdict kpsi = flip_verdict(p, t, named_class(p, ps, "K+psi"));
  ck.expect(check::kFlip, kpsi.is_L_flip.yes(), &t, "K+psi flip verdict is " + std::string(to_string(kpsi.is_L_flip.value)));
  const FlipVerdict k = flip_verdict(p, t, named_class(p, ps, "K"));
  const Verdict gor = q_gorenstein_MTplus(p, t);
  ck.expect(check::kFlip, k.is_L_flip.value == gor.value, &t,
            "K flip verdict " + std::string(to_string(k.is_L_flip.value)) + " but Q-Gorenstein " +
                std::string(to_string(gor.value)));
}

void check_tables(Checker& ck, const HyperbolicPair& p) {
  if (is_degenerate_pair(p)) return;
  const TypeSet full = full_typeset(p);
  const int g = p.g();
  const int n = p.n();
  const bool qfact = g <= 1 || p.is(2, 1) || p.is(3, 0) || p.is(3, 1) || p.is(3, 2) || p.is(4, 0) ||
                     p.is(5, 0) || p.is(6, 0);
  const bool qgor = g <= 1 || n == 0 || p.is(2, 1) || p.is(2, 2) || p.is(3, 1) || p.is(3, 2);
  const Verdict f = q_factorial_MTplus(p, full);
  ck.expect(check::kQFactorial, f.yes() == qfact, &full,
            "Q-factorial " + std::string(to_string(f.value)) + ", table says " + (qfact ? "Yes" : "No"));
  const Verdict r = q_gorenstein_MTplus(p, full);
  ck.expect(check::kQFactorial, r.yes() == qgor, &full,
            "Q-Gorenstein " + std::string(to_string(r.value)) + ", table says " + (qgor ? "Yes" : "No"));
}

}  // namespace

SweepResult verify_pair(const HyperbolicPair& p, const SweepConfig& cfg) {
  Checker ck(p);
  try {
    const std::size_t minimal = minimal_subsets(p).size();
    ck.expect(check::kFaceDim, minimal == face_dim_closed_form(p), nullptr,
              std::to_string(minimal) + " minimal subsets, closed form " + std::to_string(face_dim_closed_form(p)));
    for (const auto& t : random_subsets(p, cfg.sample_k, cfg.seed)) check_closure(ck, p, t);
    check_lattice(ck, p, cfg.cap);
    if (p.g() == 0) return ck.take();

    const IndependenceReport ind = independence_report(p);
    if (!ind.independent()) {
      ck.finding(check::kRanks, nullptr,
                 "bridge curves span rank " + std::to_string(ind.rank) + " for " +
                     std::to_string(ind.minimal_count) + " minimal subsets");
    }
    check_projection(ck, p);
    check_constants(ck, p);
    check_tables(ck, p);

    std::vector<TypeSet> typesets = sweep_typesets(p, cfg);
    const TypeSet full = full_typeset(p);
    if (std::find(typesets.begin(), typesets.end(), full) == typesets.end()) typesets.push_back(full);
    for (const auto& t : typesets) {
      check_closure(ck, p, t);
      check_descent(ck, p, t, cfg.seed);
      check_ranks(ck, p, t, ind.independent());
      check_flips(ck, p, t);
    }
  } catch (const Error& e) {
    ck.expect(check::kOther, false, nullptr, std::string(e.name()) + ": " + e.what());
  }
  return ck.take();
}

SweepResult verify(const SweepConfig& cfg) {
  std::vector<HyperbolicPair> pairs;
  for (int g = cfg.g_min; g <= cfg.g_max; ++g) {
    for (int n = 0; n <= cfg.n_max; ++n) {
      if (2 * g - 2 + n > 0) pairs.emplace_back(g, n, std::max(n, kDefaultMaxPoints));
    }
  }
  std::vector<SweepResult> results(pairs.size());
  if (cfg.parallel) {
    std::atomic<std::size_t> next{0};
    const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), pairs.size()));
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < pairs.size(); i = next++) results[i] = verify_pair(pairs[i], cfg);
      });
    }
  } else {
    for (std::size_t i = 0; i < pairs.size(); ++i) results[i] = verify_pair(pairs[i], cfg);
  }
  SweepResult out;
  for (auto& r : results) out.merge(std::move(r));
  return out;
}

}  // namespace mfl
