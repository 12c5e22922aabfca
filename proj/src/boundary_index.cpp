#include "mfl/boundary_index.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "mfl/error.hpp"

namespace mfl {

HyperbolicPair::HyperbolicPair(int g, int n, int max_points) : g_(g), n_(n) {
  if (g < 0 || n < 0 || 2 * g - 2 + n <= 0) {
    throw Error(ErrorKind::NotHyperbolic,
                "(" + std::to_string(g) + "," + std::to_string(n) + ") is not hyperbolic");
  }
  const int cap = std::min(max_points, kHardMaxPoints);
  if (n > cap) {
    throw Error(ErrorKind::OutOfRange,
                "n = " + std::to_string(n) + " exceeds the marked-point cap " + std::to_string(cap));
  }
}

bool is_valid_representative(const HyperbolicPair& p, int tau, IndexSet points) {
  if (tau < 0 || tau > p.g()) return false;
  if ((points & ~p.all_points()) != 0) return false;
  if (tau == 0 && points == 0) return false;
  if (tau == p.g() && points == p.all_points()) return false;
  return true;
}

std::optional<BridgeClass> class_of(const HyperbolicPair& p, int tau, IndexSet points) {
  if (!is_valid_representative(p, tau, points)) return std::nullopt;
  const int other_tau = p.g() - tau;
  const IndexSet other_points = p.all_points() & ~points;
  if (other_tau < tau || (other_tau == tau && other_points < points)) {
    return BridgeClass(other_tau, other_points);
  }
  return BridgeClass(tau, points);
}

BridgeClass canonicalize(const HyperbolicPair& p, int tau, IndexSet points) {
  if (tau < 0 || tau > p.g() || (points & ~p.all_points()) != 0) {
    throw Error(ErrorKind::OutOfRange, "representative (" + std::to_string(tau) +
                                           ", mask " + std::to_string(points) +
                                           ") outside the range of the pair");
  }
  auto c = class_of(p, tau, points);
  if (!c) {
    throw Error(ErrorKind::ExcludedClass,
                "(" + std::to_string(tau) + ", mask " + std::to_string(points) +
                    ") is excluded from the index set");
  }
  return *c;
}

std::pair<std::pair<int, IndexSet>, std::pair<int, IndexSet>> representatives(
    const HyperbolicPair& p, const BridgeClass& c) {
  return {{c.tau(), c.points()}, {p.g() - c.tau(), p.all_points() & ~c.points()}};
}

std::optional<BridgeClass> tail_class(const HyperbolicPair& p) { return class_of(p, 1, 0); }

std::optional<int> point_of(const HyperbolicPair& p, const BridgeClass& c) {
  if (c.is_irr()) return std::nullopt;
  for (int i = 1; i <= p.n(); ++i) {
    if (class_of(p, 0, IndexSet{1} << (i - 1)) == c) return i;
  }
  return std::nullopt;
}

bool is_one_point_class(const HyperbolicPair& p, const BridgeClass& c) {
  if (c.is_irr()) return false;
  if (tail_class(p) == c) return true;
  for (int j = 1; j <= p.n(); ++j) {
    if (class_of(p, 1, IndexSet{1} << (j - 1)) == c) return true;
  }
  return false;
}

std::vector<BridgeClass> neighbors(const HyperbolicPair& p, const BridgeClass& c) {
  std::vector<BridgeClass> out;
  if (c.is_irr()) return out;
  for (int step : {-1, 1}) {
    if (auto nb = class_of(p, c.tau() + step, c.points())) {
      if (std::find(out.begin(), out.end(), *nb) == out.end()) out.push_back(*nb);
    }
  }
  return out;
}

std::vector<BridgeClass> enumerate_classes(const HyperbolicPair& p) {
  std::set<BridgeClass> seen;
  for (int tau = 0; tau <= p.g(); ++tau) {
    for (IndexSet s = 0; s <= p.all_points(); ++s) {
      if (auto c = class_of(p, tau, s)) seen.insert(*c);
    }
  }
  std::vector<BridgeClass> out;
  out.reserve(seen.size() + 1);
  out.push_back(BridgeClass::irr());
  out.insert(out.end(), seen.begin(), seen.end());
  return out;
}

bool TypeSet::contains(const BridgeClass& c) const {
  return c.is_irr() ? irr : classes.count(c) != 0;
}

void TypeSet::insert(const BridgeClass& c) {
  if (c.is_irr()) {
    irr = true;
  } else {
    classes.insert(c);
  }
}

void TypeSet::erase(const BridgeClass& c) {
  if (c.is_irr()) {
    irr = false;
  } else {
    classes.erase(c);
  }
}

bool TypeSet::subset_of(const TypeSet& other) const {
  if (irr && !other.irr) return false;
  return std::includes(other.classes.begin(), other.classes.end(), classes.begin(),
                       classes.end());
}

TypeSet set_union(const TypeSet& a, const TypeSet& b) {
  TypeSet out = a;
  out.irr = a.irr || b.irr;
  out.classes.insert(b.classes.begin(), b.classes.end());
  return out;
}

TypeSet full_typeset(const HyperbolicPair& p) {
  TypeSet t;
  for (const auto& c : enumerate_classes(p)) t.insert(c);
  return t;
}

PairType PairType::bridge(const BridgeClass& a, const BridgeClass& b) {
  PairType t;
  t.irr_ = false;
  t.lower_ = std::min(a, b);
  t.upper_ = std::max(a, b);
  return t;
}

bool PairType::contained_in(const TypeSet& t) const {
  if (irr_) return t.irr;
  return t.contains(lower_) && t.contains(upper_);
}

TypeSet PairType::as_typeset() const {
  TypeSet t;
  if (irr_) {
    t.irr = true;
  } else {
    t.insert(lower_);
    t.insert(upper_);
  }
  return t;
}

std::optional<PairType> bridge_type_at(const HyperbolicPair& p, int tau, IndexSet points) {
  auto a = class_of(p, tau, points);
  auto b = class_of(p, tau + 1, points);
  if (!a || !b) return std::nullopt;
  auto tail = tail_class(p);
  if (a == tail || b == tail) return std::nullopt;
  return PairType::bridge(*a, *b);
}

bool is_valid_bridge_type(const HyperbolicPair& p, const PairType& t) {
  if (t.is_irr()) return p.g() >= 2;
  // Every bridge pair is reachable from a representative of its lower class
  // in either order, so checking both representatives of lower suffices.
  const auto [r1, r2] = representatives(p, t.lower());
  for (const auto& [tau, pts] : {r1, r2}) {
    for (int step : {-1, 1}) {
      const int start = step < 0 ? tau - 1 : tau;
      if (auto bt = bridge_type_at(p, start, pts); bt && *bt == t) return true;
    }
  }
  return false;
}

std::vector<PairType> minimal_subsets(const HyperbolicPair& p) {
  std::set<PairType> pairs;
  for (int tau = 0; tau < p.g(); ++tau) {
    for (IndexSet s = 0; s <= p.all_points(); ++s) {
      if (auto bt = bridge_type_at(p, tau, s)) pairs.insert(*bt);
    }
  }
  std::vector<PairType> out;
  if (p.g() >= 2) out.push_back(PairType::irr());
  for (const auto& t : pairs) {
    if (!t.is_irr()) out.push_back(t);
  }
  return out;
}

std::vector<PairType> minimal_subsets_in(const HyperbolicPair& p, const TypeSet& t) {
  std::vector<PairType> out;
  for (const auto& m : minimal_subsets(p)) {
    if (m.contained_in(t)) out.push_back(m);
  }
  return out;
}

bool is_admissible(const HyperbolicPair& p, const TypeSet& t) {
  if (auto tail = tail_class(p); tail && t.contains(*tail)) return false;
  if (p.g() <= 1 && t.irr) return false;
  for (const auto& c : t.classes) {
    const auto nbs = neighbors(p, c);
    if (std::none_of(nbs.begin(), nbs.end(), [&](const BridgeClass& nb) { return t.contains(nb); })) {
      return false;
    }
  }
  return true;
}

TypeSet adm_closure(const HyperbolicPair& p, const TypeSet& t) {
  TypeSet stripped = t;
  if (auto tail = tail_class(p)) stripped.erase(*tail);
  if (p.g() <= 1) stripped.irr = false;
  TypeSet out;
  out.irr = stripped.irr;
  for (const auto& c : stripped.classes) {
    const auto nbs = neighbors(p, c);
    if (std::any_of(nbs.begin(), nbs.end(), [&](const BridgeClass& nb) { return stripped.contains(nb); })) {
      out.classes.insert(c);
    }
  }
  return out;
}

std::vector<PairType> divisorial_pairs(const HyperbolicPair& p) {
  std::vector<PairType> out;
  if (p.is(1, 1) || p.is(2, 1)) return out;
  for (int i = 1; i <= p.n(); ++i) {
    const IndexSet single = IndexSet{1} << (i - 1);
    auto a = class_of(p, 0, single);
    auto b = class_of(p, 1, single);
    if (a && b) out.push_back(PairType::bridge(*a, *b));
  }
  return out;
}

bool is_divisorial_pair(const HyperbolicPair& p, const PairType& t) {
  const auto pairs = divisorial_pairs(p);
  return std::find(pairs.begin(), pairs.end(), t) != pairs.end();
}

TypeSet divisorial_part(const HyperbolicPair& p, const TypeSet& t) {
  TypeSet out;
  for (const auto& d : divisorial_pairs(p)) {
    if (d.contained_in(t)) out = set_union(out, d.as_typeset());
  }
  return out;
}

std::string_view to_string(Containment c) {
  switch (c) {
    case Containment::Equal: return "Equal";
    case Containment::TinS: return "TinS";
    case Containment::SinT: return "SinT";
    case Containment::Incomparable: return "Incomparable";
  }
  return "Incomparable";
}

Containment compare_typesets(const HyperbolicPair& p, const TypeSet& t, const TypeSet& s) {
  const TypeSet ta = adm_closure(p, t);
  const TypeSet sa = adm_closure(p, s);
  const bool ts = ta.subset_of(sa);
  const bool st = sa.subset_of(ta);
  if (ts && st) return Containment::Equal;
  if (ts) return Containment::TinS;
  if (st) return Containment::SinT;
  return Containment::Incomparable;
}

std::string format_class(const BridgeClass& c) {
  if (c.is_irr()) return "irr";
  std::ostringstream os;
  os << c.tau() << ":{";
  bool first = true;
  for (int i = 1; i <= kHardMaxPoints; ++i) {
    if (c.points() & (IndexSet{1} << (i - 1))) {
      if (!first) os << ',';
      os << i;
      first = false;
    }
  }
  os << '}';
  return os.str();
}

std::string format_typeset(const TypeSet& t) {
  std::string out;
  if (t.irr) out = "irr";
  for (const auto& c : t.classes) {
    if (!out.empty()) out += ',';
    out += format_class(c);
  }
  return out;
}

std::string format_pair_type(const PairType& t) {
  if (t.is_irr()) return "{irr}";
  if (t.lower() == t.upper()) return "{" + format_class(t.lower()) + "}";
  return "{" + format_class(t.lower()) + "," + format_class(t.upper()) + "}";
}

namespace {

class Cursor {
 public:
  Cursor(std::string_view text, std::size_t offset) : text_(text), offset_(offset) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      throw SyntaxError(offset_ + pos_, std::string("expected '") + c + "'");
    }
    ++pos_;
  }
  bool accept_word(std::string_view w) {
    skip_space();
    if (text_.substr(pos_, w.size()) == w) {
      pos_ += w.size();
      return true;
    }
    return false;
  }
  long number() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw SyntaxError(offset_ + start, "expected a non-negative integer");
    if (pos_ - start > 6) throw Error(ErrorKind::OutOfRange, "integer too large");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }
  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

std::pair<int, IndexSet> read_representative(const HyperbolicPair& p, Cursor& cur) {
  const long tau = cur.number();
  cur.expect(':');
  cur.expect('{');
  IndexSet points = 0;
  if (!cur.peek('}')) {
    for (;;) {
      const long i = cur.number();
      if (i < 1 || i > p.n()) {
        throw Error(ErrorKind::OutOfRange, "marked point " + std::to_string(i) + " outside 1.." +
                                               std::to_string(p.n()));
      }
      points |= IndexSet{1} << (i - 1);
      if (cur.peek('}')) break;
      cur.expect(',');
    }
  }
  cur.expect('}');
  if (tau > p.g()) {
    throw Error(ErrorKind::OutOfRange, "tau = " + std::to_string(tau) + " exceeds g");
  }
  return {static_cast<int>(tau), points};
}

BridgeClass read_class(const HyperbolicPair& p, Cursor& cur) {
  if (cur.accept_word("irr")) return BridgeClass::irr();
  const auto [tau, points] = read_representative(p, cur);
  return canonicalize(p, tau, points);
}

}  // namespace

BridgeClass parse_class(const HyperbolicPair& p, std::string_view text) {
  Cursor cur(text, 0);
  BridgeClass c = read_class(p, cur);
  if (!cur.at_end()) throw SyntaxError(cur.pos(), "trailing characters after class");
  return c;
}

std::pair<int, IndexSet> parse_representative(const HyperbolicPair& p, std::string_view text) {
  Cursor cur(text, 0);
  auto rep = read_representative(p, cur);
  if (!cur.at_end()) throw SyntaxError(cur.pos(), "trailing characters after representative");
  return rep;
}

TypeSet parse_typeset(const HyperbolicPair& p, std::string_view text) {
  TypeSet t;
  Cursor cur(text, 0);
  if (cur.at_end()) return t;
  if (cur.peek('{')) {
    cur.expect('{');
    cur.expect('}');
    if (!cur.at_end()) throw SyntaxError(cur.pos(), "trailing characters after '{}'");
    return t;
  }
  for (;;) {
    t.insert(read_class(p, cur));
    if (cur.at_end()) break;
    cur.expect(',');
  }
  return t;
}

}  // namespace mfl
