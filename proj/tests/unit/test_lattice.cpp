#include "corpus.hpp"

#include "jumpcalc/building_set.hpp"
#include "jumpcalc/lattice.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace jumpcalc;
using jumpcalc::testkit::load_fixture;
using jumpcalc::testkit::make_arrangement;

namespace {

std::vector<std::size_t> count_by_codim(const Lattice& l) {
  std::vector<std::size_t> out(l.ambient_dim() + 1, 0);
  for (std::size_t i = 0; i < l.size(); ++i) ++out[l.codim(i)];
  return out;
}

// Brute-force flat closure straight from the forms: every nonempty subset of
// hyperplanes, intersected in the coned space.
std::set<Subspace> brute_force_flats(const ArrangementInput& a) {
  const std::size_t n = static_cast<std::size_t>(a.affine_dim) + 1;
  std::set<Subspace> out;
  const std::size_t k = a.hyperplanes.size();
  for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << k); ++pick) {
    Matrix eq(0, n);
    for (std::size_t i = 0; i < k; ++i) {
      if (!(pick & (std::uint64_t{1} << i))) continue;
      auto row = a.hyperplanes[i].form;
      row.emplace_back(0);
      eq.append_row(row);
    }
    out.insert(Subspace::from_equations(eq));
  }
  return out;
}

// Nestedness from the definition, with subspaces instead of masks.
bool nested_by_definition(const std::vector<MemberId>& s, const BuildingSet& g) {
  std::set<Subspace> members;
  for (MemberId v = 1; v < g.size(); ++v) members.insert(g.lattice().element(*g.member(v).element).subspace);
  const std::size_t k = s.size();
  for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << k); ++pick) {
    std::vector<Subspace> chosen;
    for (std::size_t i = 0; i < k; ++i) {
      if (pick & (std::uint64_t{1} << i)) chosen.push_back(g.lattice().element(*g.member(s[i]).element).subspace);
    }
    if (chosen.size() < 2) continue;
    bool antichain = true;
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      for (std::size_t j = 0; j < chosen.size(); ++j) {
        if (i != j && chosen[i].contains(chosen[j])) antichain = false;
      }
    }
    if (!antichain) continue;
    Subspace meet = chosen[0];
    for (const auto& c : chosen) meet = meet.intersect(c);
    if (members.contains(meet)) return false;
  }
  return true;
}

std::vector<MemberId> members_of_codim(const BuildingSet& g, std::size_t codim) {
  std::vector<MemberId> out;
  for (MemberId v = 1; v < g.size(); ++v) {
    if (g.member(v).codim == codim) out.push_back(v);
  }
  return out;
}

}  // namespace

TEST(Parse, ThreeConcurrentLines) {
  const auto a = load_fixture("three_concurrent_lines.json");
  EXPECT_EQ(a.affine_dim, 2);
  EXPECT_EQ(a.hyperplanes.size(), 3U);
  EXPECT_EQ(a.degree(), 3);
}

TEST(Parse, ProportionalFormsNameThePair) {
  try {
    load_fixture("proportional_forms.json");
    FAIL() << "expected an InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("(0,1)"), std::string::npos) << e.what();
  }
}

TEST(Parse, RejectsZeroMultiplicity) { EXPECT_THROW(load_fixture("zero_multiplicity.json"), InputError); }

TEST(Parse, RejectsBadDocuments) {
  EXPECT_THROW(parse_arrangement(R"({"affine_dim": 1, "hyperplanes": [{"coeffs": [1], "mult": 1}]})"), InputError);
  EXPECT_THROW(parse_arrangement(R"({"affine_dim": 2, "hyperplanes": [{"coeffs": [1.5, 0], "mult": 1}]})"),
               InputError);
  EXPECT_THROW(parse_arrangement(R"({"affine_dim": 2, "hyperplanes": [{"coeffs": [0, 0], "mult": 1}]})"),
               InputError);
  EXPECT_THROW(parse_arrangement(R"({"affine_dim": 2, "hyperplanes": [{"coeffs": [1], "mult": 1}]})"), InputError);
  EXPECT_THROW(parse_arrangement(R"({"affine_dim": 2, "hyperplanes": [{"coeffs": [1, 0]}]})"), InputError);
  EXPECT_THROW(parse_arrangement("not json"), InputError);
}

TEST(Parse, AcceptsRationalStringsAndRoundTrips) {
  const auto a = parse_arrangement(R"({"affine_dim": 2, "hyperplanes": [{"coeffs": ["1/2", -3], "mult": 2}]})");
  EXPECT_EQ(a.hyperplanes[0].form[0], Rational(1, 2));
  const auto b = parse_arrangement(to_json(a));
  EXPECT_EQ(b.hyperplanes[0].form, a.hyperplanes[0].form);
  EXPECT_EQ(b.hyperplanes[0].mult, 2);
}

TEST(Cone, ThreeConcurrentLines) {
  const Lattice l = cone(load_fixture("three_concurrent_lines.json"));
  EXPECT_EQ(l.ambient_dim(), 3U);
  ASSERT_EQ(l.size(), 4U);
  EXPECT_EQ(l.d_total(), 3);
  // Sorted by codimension: the apex comes first.
  EXPECT_EQ(l.dim(0), 1U);
  EXPECT_EQ(l.codim(0), 2U);
  EXPECT_EQ(l.s(0), 3);
  for (std::size_t i = 1; i < 4; ++i) {
    EXPECT_EQ(l.codim(i), 1U);
    EXPECT_EQ(l.s(i), 1);
  }
}

TEST(Cone, PlanePencil) {
  const auto a = load_fixture("two_planes_pencil_a.json");
  const Lattice l = cone(a);
  EXPECT_EQ(l.size(), 11U);
  EXPECT_EQ(l.size(), brute_force_flats(a).size());
  EXPECT_EQ(count_by_codim(l), (std::vector<std::size_t>{0, 4, 6, 1, 0}));
  EXPECT_EQ(l.d_total(), 4);
  for (std::size_t i = 0; i < l.size(); ++i) {
    const int expected = l.codim(i) == 3 ? 4 : l.codim(i) == 2 ? 2 : 1;
    EXPECT_EQ(l.s(i), expected);
  }
  // Each line lies in exactly two of the planes, the point in all four.
  for (std::size_t i = 0; i < l.size(); ++i) {
    std::size_t above = 0;
    for (std::size_t h : l.hyperplane_ids()) above += l.is_subset(i, h) ? 1 : 0;
    EXPECT_EQ(above, l.codim(i) == 3 ? 4U : l.codim(i) == 2 ? 2U : 1U);
  }
}

TEST(Cone, SingleHyperplane) {
  const Lattice l = cone(make_arrangement(2, {{1, 0}}, {1}));
  ASSERT_EQ(l.size(), 1U);
  EXPECT_EQ(l.dim(0), 2U);
  EXPECT_EQ(l.codim(0), 1U);
  EXPECT_EQ(l.s(0), 1);
  EXPECT_EQ(l.d_total(), 1);
}

TEST(Cone, MatchesBruteForceClosureAndSums) {
  for (const auto& [name, a] : jumpcalc::testkit::sampled_corpus()) {
    const Lattice l = cone(a);
    EXPECT_EQ(l.size(), brute_force_flats(a).size()) << name;
    for (std::size_t i = 0; i < l.size(); ++i) {
      int s = 0;
      for (std::size_t h = 0; h < a.hyperplanes.size(); ++h) {
        if (l.element(l.hyperplane_ids()[h]).subspace.contains(l.element(i).subspace)) s += a.hyperplanes[h].mult;
      }
      EXPECT_EQ(l.s(i), s) << name;
    }
  }
}

TEST(Cone, RelabelingGivesIsomorphicLattice) {
  auto profile = [](const Lattice& l) {
    std::vector<std::tuple<std::size_t, std::size_t, int, std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < l.size(); ++i) {
      std::size_t up = 0;
      std::size_t down = 0;
      for (std::size_t j = 0; j < l.size(); ++j) {
        if (i == j) continue;
        up += l.is_subset(i, j) ? 1 : 0;
        down += l.is_subset(j, i) ? 1 : 0;
      }
      out.emplace_back(l.codim(i), l.dim(i), l.s(i), up, down);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  for (const auto& [name, a] : jumpcalc::testkit::sampled_corpus()) {
    EXPECT_EQ(profile(cone(a)), profile(cone(jumpcalc::testkit::reversed(a)))) << name;
  }
}

TEST(BuildingSets, FullSetSizes) {
  EXPECT_EQ(full_building_set(cone(load_fixture("three_concurrent_lines.json"))).size(), 5U);
  EXPECT_EQ(full_building_set(cone(load_fixture("two_planes_pencil_a.json"))).size(), 12U);
  EXPECT_EQ(full_building_set(cone(make_arrangement(2, {{1, 0}}, {1}))).size(), 2U);
}

TEST(BuildingSets, MinimalEqualsFullForConcurrentLines) {
  const Lattice l = cone(load_fixture("three_concurrent_lines.json"));
  EXPECT_EQ(minimal_building_set(l).size(), 5U);
  for (std::size_t i = 0; i < l.size(); ++i) EXPECT_FALSE(is_reducible(l, i));
}

TEST(BuildingSets, GenericCrossingIsReducible) {
  const Lattice l = cone(make_arrangement(2, {{1, 0}, {0, 1}}, {1, 1}));
  ASSERT_EQ(l.dim(0), 1U);
  EXPECT_TRUE(is_reducible(l, 0));
  const BuildingSet g = minimal_building_set(l);
  EXPECT_EQ(g.size(), 3U);
  for (const auto& m : g.members()) EXPECT_NE(m.dim, 1U);
}

TEST(BuildingSets, HyperplanesAreIrreducible) {
  for (const auto& [name, a] : jumpcalc::testkit::sampled_corpus()) {
    const Lattice l = cone(a);
    for (std::size_t h : l.hyperplane_ids()) EXPECT_FALSE(is_reducible(l, h)) << name;
  }
}

TEST(Nested, PencilExamples) {
  const BuildingSet g = full_building_set(cone(load_fixture("two_planes_pencil_a.json")));
  const auto points = members_of_codim(g, 3);
  const auto lines = members_of_codim(g, 2);
  ASSERT_EQ(points.size(), 1U);
  ASSERT_EQ(lines.size(), 6U);
  EXPECT_FALSE(is_nested(MemberSet{lines[0], lines[1]}, g));
  EXPECT_TRUE(is_nested(MemberSet{points[0], lines[0]}, g));
  EXPECT_TRUE(is_nested(MemberSet{}, g));
}

TEST(Nested, PencilHalfCandidatePool) {
  const BuildingSet g = full_building_set(cone(load_fixture("two_planes_pencil_a.json")));
  MemberSet pool;
  std::vector<MemberId> ids;
  for (MemberId v = 1; v < g.size(); ++v) {
    if (g.member(v).codim >= 2) {
      pool.insert(v);
      ids.push_back(v);
    }
  }
  std::size_t brute = 0;
  for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << ids.size()); ++pick) {
    std::vector<MemberId> s;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (pick & (std::uint64_t{1} << i)) s.push_back(ids[i]);
    }
    brute += nested_by_definition(s, g) ? 1 : 0;
  }
  EXPECT_EQ(brute, 13U);
  EXPECT_EQ(nested_subsets_of(pool, g).size(), brute);
}

TEST(Nested, SingletonPoolAndFactors) {
  const BuildingSet g = full_building_set(cone(load_fixture("three_concurrent_lines.json")));
  const auto subsets = nested_subsets_of(MemberSet{1}, g);
  ASSERT_EQ(subsets.size(), 1U);
  const auto& f = subsets[0].factors;
  ASSERT_EQ(f.size(), 2U);
  EXPECT_EQ(f[0].bottom, BuildingSet::zero);
  ASSERT_TRUE(f[0].top.has_value());
  EXPECT_EQ(f[0].top_dim, 1U);
  EXPECT_EQ(f[1].bottom, 1U);
  EXPECT_FALSE(f[1].top.has_value());
  EXPECT_EQ(f[1].top_dim, 3U);
  EXPECT_TRUE(nested_subsets_of(MemberSet{}, g).empty());
}

TEST(Nested, FullSetNestedMeansChain) {
  for (const auto& [name, a] : jumpcalc::testkit::sampled_corpus()) {
    const BuildingSet g = full_building_set(cone(a));
    const auto ids = g.nonzero_members().ids();
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t j = i + 1; j < ids.size(); ++j) {
        const bool chain = g.contained(ids[i], ids[j]) || g.contained(ids[j], ids[i]);
        EXPECT_EQ(is_nested(MemberSet{ids[i], ids[j]}, g), chain) << name;
      }
    }
  }
}

TEST(Nested, MaskTestMatchesDefinition) {
  for (const auto& [name, a] : jumpcalc::testkit::plane_corpus()) {
    for (auto kind : {BuildingSetKind::full, BuildingSetKind::minimal}) {
      const BuildingSet g = make_building_set(cone(a), kind);
      const auto ids = g.nonzero_members().ids();
      for (std::size_t i = 0; i < ids.size(); ++i) {
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
          for (std::size_t k = j + 1; k < ids.size(); ++k) {
            const std::vector<MemberId> s{ids[i], ids[j], ids[k]};
            EXPECT_EQ(is_nested(MemberSet{ids[i], ids[j], ids[k]}, g), nested_by_definition(s, g)) << name;
          }
        }
      }
    }
  }
}
