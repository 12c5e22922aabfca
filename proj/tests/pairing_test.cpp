#include <gtest/gtest.h>

#include "mfl/divisor_space.hpp"
#include "mfl/error.hpp"
#include "mfl/pairing.hpp"
#include "support.hpp"

using namespace mfl;

namespace {

BridgeClass cls(const HyperbolicPair& p, const char* text) { return parse_class(p, text); }

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::OutOfRange;
}

// Random class on s supported on the quotient basis.
DivisorClass random_class(std::mt19937_64& gen, const Presentation& pres) {
  linalg::Vector v(pres.size());
  for (std::size_t b : pres.basis()) v[b] = test::random_rational(gen, -6, 6);
  return pres.from_vector(v);
}

std::vector<HyperbolicPair> small_pairs() {
  std::vector<HyperbolicPair> out;
  for (int g = 1; g <= 6; ++g) {
    for (int n = 0; n <= 3; ++n) {
      if (2 * g - 2 + n > 0) out.emplace_back(g, n);
    }
  }
  return out;
}

}  // namespace

TEST(Bridge, Examples) {
  const HyperbolicPair p(5, 2);
  const SpaceId ps = SpaceId::ps();
  const DivisorClass n10 = 10 * named_class(p, ps, "lambda") - named_class(p, ps, "delta_hat");
  EXPECT_EQ(pair_bridge(p, PairType::irr(), n10), 0);
  for (const auto& t : minimal_subsets(p)) {
    EXPECT_EQ(pair_bridge(p, t, named_class(p, ps, "K+psi")), -7) << format_pair_type(t);
    EXPECT_EQ(pair_bridge(p, t, n10), 0);
  }
  const PairType t = PairType::bridge(cls(p, "2:{1}"), cls(p, "3:{1}"));
  DivisorClass d;
  d.space = ps;
  d.set(cls(p, "2:{1}"), 1);
  EXPECT_EQ(pair_bridge(p, t, d), -1);
}

TEST(Bridge, SingletonSubtractsTwice) {
  const HyperbolicPair p(5, 0);
  const PairType t = minimal_subsets(p)[1];
  ASSERT_EQ(t.lower(), t.upper());
  DivisorClass d;
  d.space = SpaceId::ps();
  d.set(t.lower(), 1);
  EXPECT_EQ(pair_bridge(p, t, d), -2);
}

TEST(Bridge, Errors) {
  const HyperbolicPair p(3, 1);
  EXPECT_EQ(kind_of([&] { pair_bridge(p, PairType::irr(), named_class(p, SpaceId::bar(), "K")); }),
            ErrorKind::WrongSpace);
  const PairType bad = PairType::bridge(cls(p, "0:{1}"), cls(p, "2:{1}"));
  EXPECT_EQ(kind_of([&] { pair_bridge(p, bad, named_class(p, SpaceId::ps(), "K")); }), ErrorKind::InvalidCurveType);
  const HyperbolicPair p12(1, 3);
  EXPECT_EQ(kind_of([&] { pair_bridge(p12, PairType::irr(), named_class(p12, SpaceId::ps(), "K")); }),
            ErrorKind::InvalidCurveType);
}

TEST(Upstairs, Examples) {
  const HyperbolicPair p(4, 0);
  DivisorClass tail;
  tail.space = SpaceId::bar();
  tail.set(cls(p, "1:{}"), 1);
  EXPECT_EQ(pair_bridge_upstairs(p, PairType::irr(), tail), 1);
  EXPECT_EQ(pair_bridge_upstairs(p, PairType::irr(), named_class(p, SpaceId::bar(), "lambda")), 0);
  EXPECT_EQ(kind_of([&] { pair_bridge_upstairs(p, PairType::irr(), named_class(p, SpaceId::ps(), "lambda")); }),
            ErrorKind::WrongSpace);
}

TEST(Upstairs, ProjectionFormula) {
  auto gen = test::rng(41);
  for (const auto& p : small_pairs()) {
    const Presentation pres(p, SpaceId::ps());
    for (int s = 0; s < 8; ++s) {
      const DivisorClass l = random_class(gen, pres);
      for (const auto& t : minimal_subsets(p)) {
        ASSERT_EQ(pair_bridge(p, t, l), pair_bridge_upstairs(p, t, pullback_upsilon(p, l)))
            << p.g() << "," << p.n() << " " << format_pair_type(t) << " seed " << test::seed();
      }
    }
  }
}

TEST(Tacnodal, Examples) {
  const HyperbolicPair p(5, 2);
  const SpaceId plus = SpaceId::tplus(full_typeset(p));
  for (const auto& t : minimal_subsets(p)) {
    if (!is_valid_tacnodal_type(p, t)) continue;
    EXPECT_EQ(pair_tacnodal(p, t, named_class(p, plus, "lambda")), -1);
    EXPECT_EQ(pair_tacnodal(p, t, named_class(p, plus, "delta_hat")), -10);
    EXPECT_EQ(pair_tacnodal(p, t, named_class(p, plus, "K+psi")), 7);
  }
}

TEST(Tacnodal, ForbiddenTypes) {
  const HyperbolicPair p(3, 1);
  const SpaceId plus = SpaceId::tplus(full_typeset(p));
  const PairType point = PairType::bridge(cls(p, "0:{1}"), cls(p, "1:{1}"));
  EXPECT_TRUE(is_valid_bridge_type(p, point));
  EXPECT_FALSE(is_valid_tacnodal_type(p, point));
  EXPECT_EQ(kind_of([&] { pair_tacnodal(p, point, named_class(p, plus, "K")); }), ErrorKind::ForbiddenTacnodalType);
  EXPECT_TRUE(is_valid_tacnodal_type(p, PairType::irr()));
  EXPECT_EQ(kind_of([&] { pair_tacnodal(p, PairType::irr(), named_class(p, SpaceId::ps(), "K")); }),
            ErrorKind::WrongSpace);
}

TEST(Tacnodal, Antisymmetry) {
  auto gen = test::rng(42);
  for (const auto& p : small_pairs()) {
    const TypeSet full = full_typeset(p);
    const Presentation plus(p, SpaceId::tplus(full));
    for (int s = 0; s < 6; ++s) {
      const DivisorClass l = random_class(gen, plus);
      const DivisorClass down = restrict_to(p, l, SpaceId::t(full));
      for (const auto& t : minimal_subsets(p)) {
        if (!is_valid_tacnodal_type(p, t)) continue;
        ASSERT_EQ(pair_tacnodal(p, t, l), -pair_bridge(p, t, down)) << "seed " << test::seed();
      }
    }
  }
}

TEST(Pairing, RelationRowsPairToZero) {
  for (int g = 1; g <= 2; ++g) {
    for (int n = 0; n <= 4; ++n) {
      if (2 * g - 2 + n <= 0) continue;
      const HyperbolicPair p(g, n);
      const Presentation pres(p, SpaceId::ps());
      for (std::size_t r = 0; r < pres.relations().rows(); ++r) {
        const auto row = pres.relations().row(r);
        const DivisorClass rel = pres.from_vector(linalg::Vector(row.begin(), row.end()));
        for (const auto& t : minimal_subsets(p)) EXPECT_EQ(pair_bridge(p, t, rel), 0);
      }
    }
  }
}

TEST(Rosary, Weights) {
  const HyperbolicPair p(7, 0);
  const SpaceId plus = SpaceId::tplus(full_typeset(p));
  // Rosaries ending at a one-point class meet a killed generator instead.
  const auto types = constraining_rosaries(p, full_typeset(p));
  ASSERT_FALSE(types.empty());
  for (const auto& r : types) {
    EXPECT_EQ(rosary_weight(p, r, named_class(p, plus, "lambda")), 0);
    EXPECT_EQ(rosary_weight(p, r, named_class(p, plus, "K+psi")), 0);
  }
  const RosaryType r = *rosary_at(p, 2, 0);
  EXPECT_EQ(format_rosary(r), "R:(2:{},3:{},3:{})");
  DivisorClass d;
  d.space = plus;
  d.set(r.start(), 1);
  EXPECT_EQ(rosary_weight(p, r, d), -1);
  EXPECT_EQ(rosary_weight(p, RosaryType::irr(), d), 0);
  EXPECT_FALSE(rosary_at(p, 6, 0).has_value());
}

TEST(Text, CurveSpecs) {
  const HyperbolicPair p(5, 0);
  const DivisorClass kpsi = named_class(p, SpaceId::ps(), "K+psi");
  EXPECT_EQ(pair_text(p, "C:irr", kpsi), -7);
  EXPECT_EQ(pair_text(p, "C:2:{}", kpsi), -7);
  EXPECT_EQ(pair_text(p, "Ctilde:irr", pullback_upsilon(p, kpsi)), -7);
  const DivisorClass plus = named_class(p, SpaceId::tplus(full_typeset(p)), "K+psi");
  EXPECT_EQ(pair_text(p, "D:irr", plus), 7);
  // Ends at [4] = [1], a killed generator.
  EXPECT_EQ(pair_text(p, "R:2:{}", plus), 2);
  const HyperbolicPair p7(7, 0);
  EXPECT_EQ(pair_text(p7, "R:2:{}", named_class(p7, SpaceId::tplus(full_typeset(p7)), "K+psi")), 0);
  EXPECT_EQ(parse_curve(p, "D:2:{}").kind, CurveClass::Kind::Tacnodal);
  EXPECT_EQ(kind_of([&] { parse_curve(p, "X:irr"); }), ErrorKind::SyntaxError);
  EXPECT_EQ(kind_of([&] { parse_curve(p, "C:1:{}"); }), ErrorKind::InvalidCurveType);
}
