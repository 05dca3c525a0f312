#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "ttilt/twoterm.hpp"

using namespace ttilt;
using C = Complex<Rational>;

namespace {

struct A2 {
  Algebra<Rational> alg = build_algebra<Rational>(fixtures::linear_a(2));
  std::vector<int> all{0, 1};

  // P2 → P1 by the arrow: the presentation of S1.
  C s1() const {
    ProjMap<Rational> d({0}, {1});
    d.at(0, 0) = alg.unit(alg.arrow_index(0));
    return two_term<Rational>({1}, {0}, d);
  }
  C stalk0(std::vector<int> vs) const { return stalk<Rational>(std::move(vs), 0); }
  C stalk1(std::vector<int> vs) const { return stalk<Rational>(std::move(vs), -1); }
};

}  // namespace

TEST(TwoTerm, HomotopyHomExamples) {
  A2 a;
  EXPECT_EQ(hom_homotopy_dim(a.alg, a.s1(), a.s1(), 1), 0);
  EXPECT_EQ(hom_homotopy_dim(a.alg, a.s1(), a.s1(), 0), 1);
  EXPECT_EQ(hom_homotopy_dim(a.alg, a.stalk0(a.all), a.stalk0(a.all), 1), 0);
  EXPECT_EQ(hom_homotopy_dim(a.alg, a.stalk1(a.all), a.stalk1(a.all), 0), a.alg.dim());
  C mixed = direct_sum(a.stalk0(a.all), a.stalk1(a.all));
  EXPECT_FALSE(is_presilting(a.alg, mixed));
  EXPECT_TRUE(is_two_term_silting(a.alg, a.stalk0(a.all)));
  C t = direct_sum(a.stalk0({0}), a.s1());
  EXPECT_TRUE(is_two_term_silting(a.alg, t));
  EXPECT_FALSE(is_two_term_silting(a.alg, a.s1()));
}

TEST(TwoTerm, BasisElementsAreChainMaps) {
  auto alg = build_algebra<Rational>(fixtures::preprojective_a2());
  std::vector<C> cs;
  for (int v = 0; v < 2; ++v) {
    cs.push_back(pair_to_complex(alg, standard_module(alg, v, Flavor::simple), ProjectivePart{0, 0}));
    cs.push_back(stalk<Rational>({v}, 0));
    cs.push_back(stalk<Rational>({v}, -1));
  }
  for (const auto& x : cs)
    for (const auto& y : cs) {
      HomK<Rational> h(alg, x, y);
      for (const auto& f : h.basis()) {
        EXPECT_TRUE(is_chain_map(alg, x, y, f));
        EXPECT_FALSE(h.is_null_homotopic(f));
      }
      EXPECT_EQ(hom_homotopy_dim(alg, x, y, 2), 0);
      EXPECT_EQ(hom_homotopy_dim(alg, x, y, -2), 0);
    }
}

TEST(TwoTerm, PairComplexRoundTrip) {
  A2 a;
  auto s1 = standard_module(a.alg, 0, Flavor::simple);
  C c = pair_to_complex(a.alg, s1, ProjectivePart{0, 0});
  EXPECT_EQ(c.at(-1), (std::vector<int>{1}));
  EXPECT_EQ(c.at(0), (std::vector<int>{0}));
  EXPECT_EQ(g_vector(a.alg, c), (std::vector<int>{1, -1}));
  C p2shift = pair_to_complex(a.alg, zero_module(a.alg), ProjectivePart{0, 1});
  EXPECT_EQ(g_vector(a.alg, p2shift), (std::vector<int>{0, -1}));
  auto reg = direct_sum(standard_module(a.alg, 0, Flavor::projective), standard_module(a.alg, 1, Flavor::projective));
  C ac = pair_to_complex(a.alg, reg, ProjectivePart{0, 0});
  EXPECT_TRUE(ac.at(-1).empty());
  EXPECT_EQ(g_vector(a.alg, ac), (std::vector<int>{1, 1}));

  auto [m, p] = complex_to_pair(a.alg, c);
  EXPECT_TRUE(is_isomorphic(a.alg, m, s1));
  EXPECT_EQ(p, (ProjectivePart{0, 0}));
  auto [m2, p2] = complex_to_pair(a.alg, p2shift);
  EXPECT_TRUE(m2.is_zero());
  EXPECT_EQ(p2, (ProjectivePart{0, 1}));
}

TEST(TwoTerm, LeftApproximations) {
  A2 a;
  auto inc = minimal_left_approximation(a.alg, a.stalk0({1}), {a.stalk0({0})});
  EXPECT_EQ(inc.mult, (std::vector<int>{1}));
  EXPECT_EQ(inc.object.at(0), (std::vector<int>{0}));
  EXPECT_FALSE(inc.map.f.at(0).is_zero());
  auto none = minimal_left_approximation(a.alg, a.stalk0({0}), {a.stalk0({1})});
  EXPECT_EQ(none.mult, (std::vector<int>{0}));
  auto self = minimal_left_approximation(a.alg, a.s1(), {a.s1()});
  EXPECT_EQ(self.mult, (std::vector<int>{1}));
  // Hom(A, P1) = Hom(P1, P1) ⊕ Hom(P2, P1) and End(P1) = k, so both maps are needed.
  auto reg = minimal_left_approximation(a.alg, a.stalk0(a.all), {a.stalk0({0})});
  EXPECT_EQ(reg.mult, (std::vector<int>{2}));
}

TEST(TwoTerm, ConesOfStalkMaps) {
  A2 a;
  C zero_cone = cone_two_term(a.alg, C{}, ChainMap<Rational>{});
  EXPECT_EQ(g_vector(a.alg, zero_cone), (std::vector<int>{-1, -1}));
  C id_cone = cone_two_term(a.alg, a.stalk0(a.all), identity_chain_map(a.alg, a.stalk0(a.all)));
  EXPECT_TRUE(id_cone.is_zero());
  // Approximating A by add(S1) leaves P2[1]^2 after stripping.
  auto ap = minimal_left_approximation(a.alg, a.stalk0(a.all), {a.s1()});
  C c = cone_two_term(a.alg, ap.object, ap.map);
  EXPECT_TRUE(c.is_two_term());
  EXPECT_TRUE(is_presilting(a.alg, c));
  EXPECT_EQ(g_vector(a.alg, c), (std::vector<int>{0, -2}));
}

TEST(TwoTerm, DecompositionOfComplexes) {
  A2 a;
  EXPECT_EQ(decompose_complex(a.alg, a.stalk0(a.all)).size(), 2u);
  auto parts = decompose_complex(a.alg, a.s1());
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_TRUE(is_isomorphic(a.alg, parts[0], a.s1()));
  ProjMap<Rational> id({1}, {1});
  id.at(0, 0) = a.alg.unit(1);
  C with_contractible = direct_sum(a.s1(), two_term<Rational>({1}, {1}, id));
  auto stripped = decompose_complex(a.alg, with_contractible);
  ASSERT_EQ(stripped.size(), 1u);
  EXPECT_TRUE(is_isomorphic(a.alg, stripped[0], a.s1()));
  C twice = direct_sum(a.s1(), direct_sum(a.stalk0({0}), a.s1()));
  auto three = decompose_complex(a.alg, twice, 3);
  EXPECT_EQ(three.size(), 3u);
  EXPECT_TRUE(is_isomorphic(a.alg, twice, direct_sum(a.stalk0({0}), direct_sum(a.s1(), a.s1()))));
  EXPECT_FALSE(is_isomorphic(a.alg, a.s1(), a.stalk0({0})));
}

TEST(TwoTerm, DecomposesSkewedBases) {
  // Conjugating A ⊕ S1 by a unipotent change of basis hides the block structure.
  auto alg = build_algebra<Rational>(fixtures::linear_a(3));
  C x = direct_sum(pair_to_complex(alg, fixtures::interval(alg, 0, 1), ProjectivePart{0, 0, 0}),
                   pair_to_complex(alg, fixtures::interval(alg, 1, 1), ProjectivePart{0, 0, 0}));
  ProjMap<Rational> g = identity_projmap(alg, x.at(0));
  for (std::size_t t = 0; t < g.nrows(); ++t)
    for (std::size_t s = 0; s < g.ncols(); ++s)
      if (t != s && !alg.between(g.rows[t], g.cols[s]).empty())
        g.at(t, s) = alg.unit(alg.between(g.rows[t], g.cols[s]).back(), Rational(2));
  x.d[0] = compose(alg, g, x.d[0]);
  auto parts = decompose_complex(alg, x);
  EXPECT_EQ(parts.size(), 2u);
  for (const auto& p : parts) EXPECT_TRUE(is_indecomposable_complex(alg, p));
}
