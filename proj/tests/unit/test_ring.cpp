#include "corpus.hpp"

#include "jumpcalc/building_set.hpp"
#include "jumpcalc/lattice.hpp"
#include "jumpcalc/ring.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace jumpcalc;
using jumpcalc::testkit::load_fixture;
using jumpcalc::testkit::make_arrangement;

namespace {

Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

struct RingFixture {
  explicit RingFixture(const ArrangementInput& a, BuildingSetKind kind = BuildingSetKind::full,
                 Type1Mode mode = Type1Mode::minimal)
      : g(make_building_set(cone(a), kind)), p(build_presentation(g, mode)), top(p) {}

  TruncatedPoly var(MemberId v, const Rational& c = 1) const {
    return TruncatedPoly::variable(g.size(), p.top_degree(), v, c);
  }
  TruncatedPoly minus_c0_top() const {
    Exponents e(g.size(), 0);
    e[0] = static_cast<std::uint8_t>(p.top_degree());
    return TruncatedPoly::monomial(p.top_degree(), e, p.top_degree() % 2 == 0 ? 1 : -1);
  }

  BuildingSet g;
  RingPresentation p;
  TopSlice top;
};

}  // namespace

TEST(Presentation, ThreeLinesSliceShape) {
  const RingFixture s(load_fixture("three_concurrent_lines.json"));
  EXPECT_EQ(s.p.nvars(), 5U);
  EXPECT_EQ(s.top.slice().basis().size(), 15U);
  EXPECT_EQ(s.top.slice().quotient_dimension(), 1U);
  for (const auto& gen : s.p.generators()) EXPECT_TRUE(gen.poly.is_homogeneous(gen.degree));
}

TEST(Presentation, ThreeLinesLinearRelations) {
  const RingFixture s(load_fixture("three_concurrent_lines.json"));
  const GradedIdealSlice linear(s.p, 1);
  for (MemberId v = 2; v < 5; ++v) EXPECT_TRUE(linear.contains(s.var(0) + s.var(1) + s.var(v)));
  EXPECT_FALSE(linear.contains(s.var(0) + s.var(1)));
}

TEST(Presentation, ThreeLinesReducedRelations) {
  // After eliminating the line variables the quotient is Q[c0,cL]/(c0 cL, (c0+cL)^2, c0^3).
  const RingFixture s(load_fixture("three_concurrent_lines.json"));
  EXPECT_TRUE(s.top.is_in_ideal(s.var(0) * s.var(1)));
  EXPECT_TRUE(s.top.is_in_ideal((s.var(0) + s.var(1)) * (s.var(0) + s.var(1))));
  EXPECT_EQ(quotient_dimensions(s.p), (std::vector<std::size_t>{1, 2, 1}));
}

TEST(Presentation, PencilGenerators) {
  const RingFixture s(load_fixture("two_planes_pencil_a.json"));
  EXPECT_EQ(s.p.nvars(), 12U);
  EXPECT_EQ(s.top.slice().quotient_dimension(), 1U);
  MemberId point = 0;
  std::vector<MemberId> lines;
  std::vector<MemberId> planes;
  for (MemberId v = 1; v < s.g.size(); ++v) {
    if (s.g.member(v).codim == 3) point = v;
    if (s.g.member(v).codim == 2) lines.push_back(v);
    if (s.g.member(v).codim == 1) planes.push_back(v);
  }
  const GradedIdealSlice deg1(s.p, 1);
  const GradedIdealSlice deg2(s.p, 2);
  for (MemberId a : planes) {
    TruncatedPoly rel = s.var(a) + s.var(point) + s.var(0);
    for (MemberId b : lines) {
      if (s.g.contained(b, a)) rel += s.var(b);
    }
    EXPECT_TRUE(deg1.contains(rel));
  }
  EXPECT_TRUE(deg2.contains(s.var(0) * s.var(point)));
  for (MemberId b : lines) {
    EXPECT_TRUE(deg2.contains(s.var(b) * (s.var(0) + s.var(point))));
    for (MemberId b2 : lines) {
      if (b2 != b) {
        EXPECT_TRUE(deg2.contains(s.var(b) * s.var(b2)));
      }
    }
  }
  EXPECT_EQ(quotient_dimensions(s.p).back(), 1U);
}

TEST(Presentation, SingleHyperplane) {
  const RingFixture s(make_arrangement(2, {{1, 0}}, {1}));
  EXPECT_EQ(s.p.nvars(), 2U);
  EXPECT_TRUE(GradedIdealSlice(s.p, 1).contains(s.var(0) + s.var(1)));
  EXPECT_EQ(s.top.slice().quotient_dimension(), 1U);
}

TEST(Membership, ThreeLinesCriterionPolynomials) {
  const RingFixture s(load_fixture("three_concurrent_lines.json"));
  const auto c0 = s.var(0);
  const auto cl = s.var(1);
  EXPECT_TRUE(s.top.is_in_ideal(q(-5, 2) * (c0 * cl)));
  EXPECT_FALSE(s.top.is_in_ideal(q(-5, 2) * (c0 * cl) + cl * cl));
  EXPECT_FALSE(s.top.is_in_ideal(q(-5, 2) * (c0 * cl) - cl * cl));
  EXPECT_TRUE(s.top.is_in_ideal(TruncatedPoly(5, 2)));
}

TEST(Membership, RejectsWrongDegree) {
  const RingFixture s(load_fixture("three_concurrent_lines.json"));
  EXPECT_THROW(s.top.is_in_ideal(s.var(0)), std::invalid_argument);
  EXPECT_THROW(s.top.evaluate_top(s.var(1)), std::invalid_argument);
}

TEST(EvaluateTop, ThreeLinesInnerClasses) {
  const RingFixture s(load_fixture("three_concurrent_lines.json"));
  const auto c0 = s.var(0);
  const auto cl = s.var(1);
  EXPECT_EQ(s.top.evaluate_top(q(-3, 2) * (c0 * cl) - cl * cl), 1);
  EXPECT_EQ(s.top.evaluate_top(q(-3, 2) * (c0 * cl) - q(2) * (cl * cl)), 2);
  EXPECT_EQ(s.top.evaluate_top(s.minus_c0_top()), 1);
}

TEST(EvaluateTop, NormalizationOnCorpus) {
  for (const auto& [name, a] : jumpcalc::testkit::sampled_corpus()) {
    for (auto kind : {BuildingSetKind::full, BuildingSetKind::minimal}) {
      const RingFixture s(a, kind);
      EXPECT_EQ(s.top.slice().quotient_dimension(), 1U) << name;
      EXPECT_EQ(s.top.evaluate_top(s.minus_c0_top()), 1) << name;
    }
  }
}

TEST(EvaluateTop, LinearAndZeroExactlyOnIdeal) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (const char* f : {"three_concurrent_lines.json", "two_planes_pencil_a.json"}) {
    const RingFixture s(load_fixture(f));
    const auto& basis = s.top.slice().basis();
    auto random_poly = [&] {
      TruncatedPoly p(s.g.size(), s.p.top_degree());
      for (const auto& e : basis) {
        if (coeff(rng) > 1) p.add_term(e, q(coeff(rng), 2));
      }
      return p;
    };
    for (int t = 0; t < 30; ++t) {
      const auto p1 = random_poly();
      const auto p2 = random_poly();
      const Rational a = q(coeff(rng), 3);
      const Rational b = q(coeff(rng), 5);
      EXPECT_EQ(s.top.evaluate_top(a * p1 + b * p2), a * s.top.evaluate_top(p1) + b * s.top.evaluate_top(p2));
      EXPECT_EQ(s.top.is_in_ideal(p1), s.top.evaluate_top(p1) == 0);
      // Something with value zero: subtract the right multiple of the unit class.
      const auto in_ideal = p1 - s.top.evaluate_top(p1) * s.minus_c0_top();
      EXPECT_TRUE(s.top.is_in_ideal(in_ideal));
    }
  }
}

TEST(Presentation, AllNonNestedSetsGiveTheSameSlice) {
  for (const auto& [name, a] : jumpcalc::testkit::sampled_corpus()) {
    for (auto kind : {BuildingSetKind::full, BuildingSetKind::minimal}) {
      const RingFixture minimal(a, kind, Type1Mode::minimal);
      const RingFixture all(a, kind, Type1Mode::all);
      EXPECT_EQ(minimal.top.slice().rowspace(), all.top.slice().rowspace()) << name;
    }
  }
}

TEST(Monomials, CountAndOrder) {
  const auto m = monomials_of_degree(5, 2);
  EXPECT_EQ(m.size(), 15U);
  EXPECT_EQ(m.front(), (Exponents{2, 0, 0, 0, 0}));
  EXPECT_EQ(m.back(), (Exponents{0, 0, 0, 0, 2}));
  EXPECT_EQ(monomials_of_degree(3, 0).size(), 1U);
}
