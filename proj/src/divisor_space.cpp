#include "mfl/divisor_space.hpp"

#include <algorithm>
#include <cctype>

#include "mfl/error.hpp"

namespace mfl {

std::string to_string(const SpaceId& s) {
  switch (s.kind) {
    case SpaceKind::Ulci: return "ulci";
    case SpaceKind::Bar: return "bar";
    case SpaceKind::PS: return "ps";
    case SpaceKind::T: return "t[" + format_typeset(s.typeset) + "]";
    case SpaceKind::TPlus: return "tplus[" + format_typeset(s.typeset) + "]";
  }
  return "?";
}

Rational DivisorClass::coeff(const BridgeClass& c) const {
  if (c.is_irr()) return irr;
  auto it = coeffs.find(c);
  return it == coeffs.end() ? Rational(0) : it->second;
}

void DivisorClass::set(const BridgeClass& c, const Rational& value) {
  if (c.is_irr()) {
    irr = value;
  } else if (sgn(value) == 0) {
    coeffs.erase(c);
  } else {
    coeffs[c] = value;
  }
}

void DivisorClass::add(const BridgeClass& c, const Rational& value) {
  set(c, coeff(c) + value);
}

bool DivisorClass::is_zero() const { return sgn(lambda) == 0 && sgn(irr) == 0 && coeffs.empty(); }

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
  lambda += o.lambda;
  irr += o.irr;
  for (const auto& [c, v] : o.coeffs) add(c, v);
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) {
  lambda -= o.lambda;
  irr -= o.irr;
  for (const auto& [c, v] : o.coeffs) add(c, -v);
  return *this;
}

DivisorClass& DivisorClass::operator*=(const Rational& s) {
  lambda *= s;
  irr *= s;
  if (sgn(s) == 0) {
    coeffs.clear();
  } else {
    for (auto& [c, v] : coeffs) v *= s;
  }
  return *this;
}

DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
DivisorClass operator*(const Rational& s, DivisorClass a) { return a *= s; }

std::string to_string(const Generator& gen) {
  switch (gen.kind) {
    case GeneratorKind::Lambda: return "lambda";
    case GeneratorKind::DeltaIrr: return "delta_irr";
    case GeneratorKind::Delta: return "delta(" + format_class(gen.cls) + ")";
  }
  return "?";
}

namespace {

// Generators quotiented to zero on s: delta_{1,{}} off Ulci/Bar, and on
// TPlus(T) every delta_{1,{i}} whose divisorial pair lies in T.
std::vector<BridgeClass> killed_classes(const HyperbolicPair& p, const SpaceId& s) {
  std::vector<BridgeClass> out;
  if (s.kind == SpaceKind::Ulci || s.kind == SpaceKind::Bar) return out;
  if (auto tail = tail_class(p)) out.push_back(*tail);
  if (s.kind == SpaceKind::TPlus) {
    for (int i = 1; i <= p.n(); ++i) {
      const IndexSet single = IndexSet{1} << (i - 1);
      auto zero_i = class_of(p, 0, single);
      auto one_i = class_of(p, 1, single);
      if (zero_i && one_i && s.typeset.contains(*zero_i) && s.typeset.contains(*one_i) &&
          std::find(out.begin(), out.end(), *one_i) == out.end()) {
        out.push_back(*one_i);
      }
    }
  }
  return out;
}

void zero_killed(const HyperbolicPair& p, DivisorClass& d) {
  for (const auto& c : killed_classes(p, d.space)) d.set(c, 0);
}

}  // namespace

Presentation::Presentation(const HyperbolicPair& p, const SpaceId& s)
    : pair_(p), space_(s) {
  generators_.push_back({GeneratorKind::Lambda, BridgeClass::irr()});
  generators_.push_back({GeneratorKind::DeltaIrr, BridgeClass::irr()});
  for (const auto& c : enumerate_classes(p)) {
    if (c.is_irr()) continue;
    index_[c] = generators_.size();
    generators_.push_back({GeneratorKind::Delta, c});
  }
  const std::size_t cols = generators_.size();

  for (const auto& c : killed_classes(p, s)) killed_.push_back(index_.at(c));
  std::sort(killed_.begin(), killed_.end());

  relations_ = linalg::Matrix(cols);
  if (p.g() == 2) {
    // 10 lambda = delta_irr + 2 delta_1
    linalg::Vector row(cols);
    row[0] = 10;
    row[1] = -1;
    for (const auto& [c, k] : index_) {
      if (c.tau() == 1) row[k] = -2;
    }
    relations_.append_row(std::move(row));
  } else if (p.g() == 1) {
    // 12 lambda = delta_irr, and delta_irr + 12 sum_{[0,I], q in I} delta_{0,I} = 0
    linalg::Vector row(cols);
    row[0] = 12;
    row[1] = -1;
    relations_.append_row(std::move(row));
    for (int q = 1; q <= p.n(); ++q) {
      const IndexSet bit = IndexSet{1} << (q - 1);
      linalg::Vector r(cols);
      r[1] = 1;
      for (const auto& [c, k] : index_) {
        // In genus one every class has exactly one representative with tau = 0.
        const IndexSet zero_points = c.tau() == 0 ? c.points() : (p.all_points() & ~c.points());
        if (zero_points & bit) r[k] = 12;
      }
      relations_.append_row(std::move(r));
    }
  }

  linalg::Matrix stacked(cols);
  for (std::size_t k : killed_) {
    linalg::Vector unit(cols);
    unit[k] = 1;
    stacked.append_row(std::move(unit));
  }
  for (std::size_t r = 0; r < relations_.rows(); ++r) {
    auto row = relations_.row(r);
    stacked.append_row(linalg::Vector(row.begin(), row.end()));
  }
  quotient_ = linalg::row_echelon(std::move(stacked));
}

std::size_t Presentation::index_of(const BridgeClass& c) const {
  if (c.is_irr()) return 1;
  auto it = index_.find(c);
  if (it == index_.end()) throw Error(ErrorKind::OutOfRange, "class " + format_class(c) + " not in this pair");
  return it->second;
}

bool Presentation::is_killed(const BridgeClass& c) const {
  if (c.is_irr()) return false;
  const std::size_t k = index_of(c);
  return std::find(killed_.begin(), killed_.end(), k) != killed_.end();
}

linalg::Vector Presentation::to_vector(const DivisorClass& d) const {
  linalg::Vector v(generators_.size());
  v[0] = d.lambda;
  v[1] = d.irr;
  for (const auto& [c, q] : d.coeffs) v[index_of(c)] = q;
  return v;
}

DivisorClass Presentation::from_vector(const linalg::Vector& v) const {
  DivisorClass d;
  d.space = space_;
  d.lambda = v[0];
  d.irr = v[1];
  for (std::size_t k = 2; k < v.size(); ++k) {
    if (sgn(v[k]) != 0) d.coeffs[generators_[k].cls] = v[k];
  }
  return d;
}

DivisorClass Presentation::generator_class(std::size_t index) const {
  linalg::Vector v(generators_.size());
  v[index] = 1;
  return from_vector(v);
}

std::size_t Presentation::rank() const {
  if (pair_.g() == 0) {
    throw Error(ErrorKind::GenusZeroUnsupported, "genus-zero Picard relations are not encoded");
  }
  return generators_.size() - quotient_.rank();
}

DivisorClass Presentation::reduce(const DivisorClass& d) const {
  return from_vector(linalg::reduce_modulo(quotient_, to_vector(d)));
}

Presentation presentation(const HyperbolicPair& p, const SpaceId& s) { return Presentation(p, s); }

std::size_t rank(const HyperbolicPair& p, const SpaceId& s) { return Presentation(p, s).rank(); }

DivisorClass reduce(const HyperbolicPair& p, const SpaceId& s, const DivisorClass& d) {
  return Presentation(p, s).reduce(d);
}

bool classes_equal(const HyperbolicPair& p, const SpaceId& s, const DivisorClass& a,
                   const DivisorClass& b) {
  return reduce(p, s, a - b).is_zero();
}

DivisorClass restrict_to(const HyperbolicPair& p, const DivisorClass& d, const SpaceId& s) {
  DivisorClass out = d;
  out.space = s;
  zero_killed(p, out);
  return out;
}

ClassName parse_class_name(const HyperbolicPair& p, std::string_view text) {
  using K = ClassName::Kind;
  ClassName name;
  auto unknown = [&] { return Error(ErrorKind::UnknownName, "unknown class name '" + std::string(text) + "'"); };
  if (text == "lambda") {
    name.kind = K::Lambda;
  } else if (text == "delta_irr") {
    name.kind = K::DeltaIrr;
  } else if (text == "psi") {
    name.kind = K::Psi;
  } else if (text == "delta") {
    name.kind = K::DeltaTotal;
  } else if (text == "delta_hat") {
    name.kind = K::DeltaHat;
  } else if (text == "K") {
    name.kind = K::K;
  } else if (text == "K+psi" || text == "K_plus_psi") {
    name.kind = K::KPlusPsi;
  } else if (text == "N") {
    name.kind = K::N;
  } else if (text.size() > 7 && text.substr(0, 6) == "delta(" && text.back() == ')') {
    name.kind = K::Delta;
    name.cls = parse_class(p, text.substr(6, text.size() - 7));
    if (name.cls.is_irr()) throw unknown();
  } else if (text.size() > 5 && text.substr(0, 4) == "psi(" && text.back() == ')') {
    name.kind = K::PsiPoint;
    const auto digits = text.substr(4, text.size() - 5);
    if (digits.empty() || digits.size() > 6 ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw unknown();
    }
    name.point = std::stoi(std::string(digits));
    if (name.point < 1 || name.point > p.n()) {
      throw Error(ErrorKind::OutOfRange, "psi point " + std::to_string(name.point) + " outside 1.." + std::to_string(p.n()));
    }
  } else {
    throw unknown();
  }
  return name;
}

DivisorClass named_class(const HyperbolicPair& p, const SpaceId& s, const ClassName& name) {
  using K = ClassName::Kind;
  DivisorClass d;
  d.space = s;
  const auto classes = enumerate_classes(p);
  // psi_i = -delta_{0,{i}}; delta sums the non-point classes; delta_hat all.
  auto psi_total = [&] {
    DivisorClass out;
    for (int i = 1; i <= p.n(); ++i) out.add(*class_of(p, 0, IndexSet{1} << (i - 1)), -1);
    return out;
  };
  auto delta_total = [&] {
    DivisorClass out;
    out.irr = 1;
    for (const auto& c : classes) {
      if (!c.is_irr() && !point_of(p, c)) out.add(c, 1);
    }
    return out;
  };
  auto delta_hat = [&] { return delta_total() - psi_total(); };
  auto canonical = [&] {
    DivisorClass k;
    k.lambda = 13;
    return k - Rational(2) * delta_total() + psi_total();
  };

  switch (name.kind) {
    case K::Lambda: d.lambda = 1; break;
    case K::DeltaIrr: d.irr = 1; break;
    case K::Delta: d.set(name.cls, 1); break;
    case K::PsiPoint: d.add(*class_of(p, 0, IndexSet{1} << (name.point - 1)), -1); break;
    case K::Psi: d = psi_total(); break;
    case K::DeltaTotal: d = delta_total(); break;
    case K::DeltaHat: d = delta_hat(); break;
    case K::K: d = canonical(); break;
    case K::KPlusPsi: d = canonical() + psi_total(); break;
    case K::N: {
      DivisorClass ten_lambda;
      ten_lambda.lambda = 10;
      d = Rational(13, 10) * (ten_lambda - delta_hat());
      break;
    }
  }
  d.space = s;
  zero_killed(p, d);
  return d;
}

DivisorClass named_class(const HyperbolicPair& p, const SpaceId& s, std::string_view name) {
  return named_class(p, s, parse_class_name(p, name));
}

DivisorClass pullback_upsilon(const HyperbolicPair& p, const DivisorClass& d) {
  if (d.space.kind != SpaceKind::PS) {
    throw Error(ErrorKind::WrongSpace, "pullback along Upsilon expects a class on ps, got " + to_string(d.space));
  }
  DivisorClass out = d;
  out.space = SpaceId::bar();
  if (auto tail = tail_class(p)) out.set(*tail, d.lambda + 12 * d.irr);
  return out;
}

}  // namespace mfl
