#include <gtest/gtest.h>

#include <bit>
#include <set>

#include "mfl/boundary_index.hpp"
#include "mfl/error.hpp"
#include "support.hpp"

using namespace mfl;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::OutOfRange;
}

TypeSet ts(const HyperbolicPair& p, const char* text) { return parse_typeset(p, text); }

// Admissibility straight from the definition, on brute-force classes.
struct AdmOracle {
  explicit AdmOracle(const HyperbolicPair& p) : p(p), idx(p.g(), p.n()) {
    tail = idx.find(1, 0);
  }

  // Class ids, with -2 standing for irr.
  using Set = std::set<int>;

  bool has_neighbor(const Set& t, int c) const {
    for (const auto& [tau, points] : idx.classes[c]) {
      for (int d : {-1, 1}) {
        const int other = idx.find(tau + d, points);
        if (other >= 0 && t.count(other)) return true;
      }
    }
    return false;
  }

  Set closure(Set t) const {
    t.erase(tail);
    if (p.g() <= 1) t.erase(-2);
    Set out;
    for (int c : t) {
      if (c == -2 || has_neighbor(t, c)) out.insert(c);
    }
    return out;
  }

  bool admissible(const Set& t) const { return closure(t) == t; }

  HyperbolicPair p;
  test::BruteIndex idx;
  int tail = -1;
};

int brute_id(const test::BruteIndex& idx, const HyperbolicPair& p, const BridgeClass& c) {
  if (c.is_irr()) return -2;
  (void)p;
  return idx.find(c.tau(), c.points());
}

}  // namespace

TEST(Classes, SmallEnumerations) {
  const HyperbolicPair p30(3, 0);
  const auto c30 = enumerate_classes(p30);
  ASSERT_EQ(c30.size(), 2u);
  EXPECT_TRUE(c30[0].is_irr());
  EXPECT_EQ(format_class(c30[1]), "1:{}");

  const HyperbolicPair p21(2, 1);
  std::vector<std::string> names;
  for (const auto& c : enumerate_classes(p21)) names.push_back(format_class(c));
  EXPECT_EQ(names, (std::vector<std::string>{"irr", "0:{1}", "1:{}"}));

  const HyperbolicPair p11(1, 1);
  names.clear();
  for (const auto& c : enumerate_classes(p11)) names.push_back(format_class(c));
  EXPECT_EQ(names, (std::vector<std::string>{"irr", "0:{1}"}));
}

TEST(Classes, CountMatchesUnionFind) {
  for (int g = 0; g <= 6; ++g) {
    for (int n = 0; n <= 5; ++n) {
      if (2 * g - 2 + n <= 0) continue;
      const HyperbolicPair p(g, n);
      const auto classes = enumerate_classes(p);
      const auto brute = test::brute_classes(g, n);
      EXPECT_EQ(classes.size(), brute.size() + 1) << g << "," << n;
      const test::BruteIndex idx(g, n);
      std::set<int> hit;
      for (const auto& c : classes) {
        if (c.is_irr()) continue;
        const auto [a, b] = representatives(p, c);
        const int id = idx.find(a.first, a.second);
        ASSERT_GE(id, 0);
        EXPECT_EQ(idx.find(b.first, b.second), id);
        hit.insert(id);
      }
      EXPECT_EQ(hit.size(), brute.size());
    }
  }
}

TEST(Classes, CanonicalRepresentative) {
  EXPECT_EQ(format_class(canonicalize(HyperbolicPair(5, 0), 4, 0)), "1:{}");
  EXPECT_EQ(format_class(canonicalize(HyperbolicPair(2, 2), 2, 0b01)), "0:{2}");
  EXPECT_EQ(kind_of([] { canonicalize(HyperbolicPair(3, 0), 0, 0); }), ErrorKind::ExcludedClass);
  EXPECT_EQ(kind_of([] { canonicalize(HyperbolicPair(3, 1), 3, 1); }), ErrorKind::ExcludedClass);
  EXPECT_EQ(kind_of([] { canonicalize(HyperbolicPair(3, 1), 4, 0); }), ErrorKind::OutOfRange);
  EXPECT_EQ(kind_of([] { canonicalize(HyperbolicPair(3, 1), 1, 0b10); }), ErrorKind::OutOfRange);
}

TEST(Classes, CanonicalizeIsComplementSymmetric) {
  for (int g = 0; g <= 5; ++g) {
    for (int n = 0; n <= 4; ++n) {
      if (2 * g - 2 + n <= 0) continue;
      const HyperbolicPair p(g, n);
      for (int tau = 0; tau <= g; ++tau) {
        for (IndexSet i = 0; i <= p.all_points(); ++i) {
          if (!is_valid_representative(p, tau, i)) continue;
          const BridgeClass c = canonicalize(p, tau, i);
          EXPECT_EQ(c, canonicalize(p, g - tau, p.all_points() & ~i));
          EXPECT_LE(c.tau(), g - c.tau());
        }
      }
    }
  }
}

TEST(Classes, PairValidation) {
  EXPECT_EQ(kind_of([] { HyperbolicPair(0, 2); }), ErrorKind::NotHyperbolic);
  EXPECT_EQ(kind_of([] { HyperbolicPair(1, 0); }), ErrorKind::NotHyperbolic);
  EXPECT_NO_THROW(HyperbolicPair(0, 3));
}

TEST(Minimal, Examples) {
  const HyperbolicPair p50(5, 0);
  const auto m50 = minimal_subsets(p50);
  ASSERT_EQ(m50.size(), 2u);
  EXPECT_TRUE(m50[0].is_irr());
  EXPECT_EQ(format_typeset(m50[1].as_typeset()), "2:{}");

  const HyperbolicPair p22(2, 2);
  std::vector<std::string> names;
  for (const auto& t : minimal_subsets(p22)) names.push_back(format_pair_type(t));
  EXPECT_EQ(names.size(), 3u);
  EXPECT_EQ(names[0], "{irr}");

  EXPECT_TRUE(minimal_subsets(HyperbolicPair(1, 1)).empty());
}

// Every minimal subset is admissible and every admissible set is the union
// of the minimal subsets it contains.
TEST(Minimal, GenerateAdmissibleSets) {
  for (int g = 1; g <= 4; ++g) {
    for (int n = 0; n <= 3; ++n) {
      if (2 * g - 2 + n <= 0) continue;
      const HyperbolicPair p(g, n);
      for (const auto& t : minimal_subsets(p)) {
        EXPECT_TRUE(is_admissible(p, t.as_typeset())) << format_pair_type(t);
      }
    }
  }
}

TEST(Admissible, Examples) {
  const HyperbolicPair p50(5, 0);
  const HyperbolicPair p31(3, 1);
  EXPECT_TRUE(is_admissible(p50, ts(p50, "irr,2:{}")));
  EXPECT_FALSE(is_admissible(p31, ts(p31, "0:{1}")));
  EXPECT_TRUE(is_admissible(p31, TypeSet{}));
  EXPECT_EQ(adm_closure(p31, ts(p31, "irr,0:{1},1:{1}")), ts(p31, "irr,0:{1},1:{1}"));
  EXPECT_EQ(adm_closure(p50, ts(p50, "1:{},irr")), ts(p50, "irr"));
  EXPECT_TRUE(adm_closure(p50, TypeSet{}).empty());
}

// is_admissible and adm_closure agree with the definition on every subset
// of T_{g,n} for the small pairs.
TEST(Admissible, MatchesDefinitionExhaustively) {
  for (int g = 1; g <= 4; ++g) {
    for (int n = 0; n <= 3; ++n) {
      if (2 * g - 2 + n <= 0) continue;
      const HyperbolicPair p(g, n);
      const auto classes = enumerate_classes(p);
      if (classes.size() > 14) continue;
      const AdmOracle oracle(p);
      for (std::uint32_t mask = 0; mask < (1u << classes.size()); ++mask) {
        TypeSet t;
        AdmOracle::Set s;
        for (std::size_t k = 0; k < classes.size(); ++k) {
          if (!(mask >> k & 1)) continue;
          t.insert(classes[k]);
          s.insert(brute_id(oracle.idx, p, classes[k]));
        }
        const TypeSet adm = adm_closure(p, t);
        AdmOracle::Set got;
        for (const auto& c : enumerate_classes(p)) {
          if (adm.contains(c)) got.insert(brute_id(oracle.idx, p, c));
        }
        ASSERT_EQ(got, oracle.closure(s)) << g << "," << n << " T={" << format_typeset(t) << "}";
        ASSERT_EQ(is_admissible(p, t), oracle.admissible(s));
      }
    }
  }
}

TEST(Admissible, ClosureProperties) {
  auto gen = test::rng(11);
  for (int g = 1; g <= 7; ++g) {
    for (int n = 0; n <= 4; ++n) {
      if (2 * g - 2 + n <= 0) continue;
      const HyperbolicPair p(g, n);
      const auto classes = enumerate_classes(p);
      std::bernoulli_distribution coin(0.5);
      for (int s = 0; s < 20; ++s) {
        TypeSet t;
        for (const auto& c : classes) {
          if (coin(gen)) t.insert(c);
        }
        const TypeSet adm = adm_closure(p, t);
        EXPECT_EQ(adm_closure(p, adm), adm) << "seed " << test::seed();
        TypeSet unions;
        for (const auto& r : minimal_subsets_in(p, t)) unions = set_union(unions, r.as_typeset());
        EXPECT_EQ(unions, adm) << "seed " << test::seed();
        const TypeSet div = divisorial_part(p, t);
        EXPECT_TRUE(div.subset_of(adm));
        EXPECT_TRUE(is_admissible(p, div));
      }
    }
  }
}

TEST(Divisorial, Examples) {
  const HyperbolicPair p31(3, 1);
  EXPECT_EQ(divisorial_part(p31, full_typeset(p31)), ts(p31, "0:{1},1:{1}"));
  const HyperbolicPair p21(2, 1);
  EXPECT_TRUE(divisorial_part(p21, full_typeset(p21)).empty());
  const HyperbolicPair p50(5, 0);
  EXPECT_TRUE(divisorial_part(p50, full_typeset(p50)).empty());
  EXPECT_TRUE(divisorial_pairs(HyperbolicPair(1, 1)).empty());
}

TEST(Compare, Examples) {
  const HyperbolicPair p(4, 1);
  EXPECT_EQ(compare_typesets(p, ts(p, "1:{}"), TypeSet{}), Containment::Equal);
  EXPECT_EQ(compare_typesets(p, ts(p, "irr"), full_typeset(p)), Containment::TinS);
  EXPECT_EQ(compare_typesets(p, full_typeset(p), ts(p, "irr")), Containment::SinT);
  EXPECT_EQ(compare_typesets(p, ts(p, "0:{1},1:{1}"), ts(p, "irr")), Containment::Incomparable);
  EXPECT_EQ(compare_typesets(p, ts(p, "irr"), ts(p, "irr")), Containment::Equal);
}

TEST(Text, ParseExamples) {
  const HyperbolicPair p31(3, 1);
  const TypeSet t = ts(p31, "irr,0:{1},1:{1}");
  EXPECT_TRUE(t.irr);
  EXPECT_EQ(t.size(), 3u);
  const HyperbolicPair p50(5, 0);
  EXPECT_EQ(format_typeset(ts(p50, "2:{}")), "2:{}");
  EXPECT_EQ(format_typeset(ts(p50, "3:{}")), "2:{}");
  EXPECT_EQ(kind_of([&] { ts(p50, "0:{}"); }), ErrorKind::ExcludedClass);
  EXPECT_EQ(kind_of([&] { ts(p50, "2:{1}"); }), ErrorKind::OutOfRange);
  EXPECT_EQ(kind_of([&] { ts(p50, "irr,,"); }), ErrorKind::SyntaxError);
  EXPECT_EQ(kind_of([&] { ts(p50, "2:{"); }), ErrorKind::SyntaxError);
  EXPECT_TRUE(ts(p50, "").empty());
  EXPECT_TRUE(ts(p50, "{}").empty());
}

TEST(Text, RoundTrip) {
  auto gen = test::rng(12);
  for (int g = 0; g <= 5; ++g) {
    for (int n = 0; n <= 4; ++n) {
      if (2 * g - 2 + n <= 0) continue;
      const HyperbolicPair p(g, n);
      const auto classes = enumerate_classes(p);
      std::bernoulli_distribution coin(0.4);
      for (int s = 0; s < 10; ++s) {
        TypeSet t;
        for (const auto& c : classes) {
          if (coin(gen)) t.insert(c);
        }
        EXPECT_EQ(parse_typeset(p, format_typeset(t)), t) << "seed " << test::seed();
      }
    }
  }
}

TEST(FaceDimension, ClosedFormOverSweepRange) {
  for (int g = 0; g <= 8; ++g) {
    for (int n = 0; n <= 6; ++n) {
      if (2 * g - 2 + n <= 0) continue;
      const HyperbolicPair p(g, n);
      std::size_t expected = 0;
      if (g == 2 && n == 0) {
        expected = 1;
      } else if (g >= 1 && n == 0) {
        expected = g % 2 == 1 ? (g - 1) / 2 : g / 2 - 1;
      } else if (g >= 1) {
        expected = static_cast<std::size_t>(g) * (std::size_t{1} << (n - 1)) - 1;
      }
      EXPECT_EQ(minimal_subsets(p).size(), expected) << g << "," << n;
    }
  }
}
