#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "ttilt/oracle.hpp"
#include "ttilt/tautilt.hpp"

using namespace ttilt;
using Alg = Algebra<Rational>;
using Pair = TauRigidPair<Rational>;

namespace {

Pair projective_pair(const Alg& alg) {
  std::vector<int> all;
  for (int v = 0; v < alg.n(); ++v) all.push_back(v);
  return make_pair(alg, projective_sum(alg, all), ProjectivePart{});
}

Pair shifted_pair(const Alg& alg) { return Pair{{}, ProjectivePart(static_cast<std::size_t>(alg.n()), 1)}; }

Pair empty_pair(const Alg& alg) { return Pair{{}, ProjectivePart(static_cast<std::size_t>(alg.n()), 0)}; }

bool same_pair(const Alg& alg, const Pair& a, const Pair& b) {
  if (a.projective_part != b.projective_part || a.module_summands.size() != b.module_summands.size()) return false;
  return is_isomorphic(alg, module_of(alg, a), module_of(alg, b));
}

// In- and out-degree per node plus the structural checks shared by all
// complete enumerations.
void expect_regular_hasse(const Alg& alg, const HasseGraph<Rational>& g) {
  ASSERT_TRUE(g.complete);
  const std::size_t n = g.nodes.size();
  std::vector<int> in(n, 0), out(n, 0);
  std::set<std::pair<int, int>> seen;
  for (const auto& e : g.edges) {
    ++out[static_cast<std::size_t>(e.src)];
    ++in[static_cast<std::size_t>(e.dst)];
    EXPECT_TRUE(seen.insert({e.src, e.dst}).second);
  }
  int sources = 0, sinks = 0;
  for (std::size_t i = 0; i < n; ++i) {
    EXPECT_EQ(in[i] + out[i], alg.n());
    sources += in[i] == 0;
    sinks += out[i] == 0;
  }
  EXPECT_EQ(sources, 1);
  EXPECT_EQ(sinks, 1);
  EXPECT_EQ(in[static_cast<std::size_t>(g.max_node)], 0);
  ASSERT_GE(g.min_node, 0);
  EXPECT_EQ(out[static_cast<std::size_t>(g.min_node)], 0);
  std::set<std::vector<std::vector<int>>> keys;
  for (const auto& node : g.nodes) EXPECT_TRUE(keys.insert(node.key).second);
}

}  // namespace

TEST(TauTilt, RigidityOfSmallPairs) {
  Alg alg = build_algebra<Rational>(fixtures::linear_a(2));
  auto s1 = standard_module(alg, 0, Flavor::simple);
  auto s2 = standard_module(alg, 1, Flavor::simple);
  EXPECT_TRUE(is_tau_rigid_pair(alg, s1, ProjectivePart{0, 1}));
  EXPECT_FALSE(is_tau_rigid_pair(alg, s1, ProjectivePart{1, 0}));
  EXPECT_TRUE(is_tau_rigid_pair(alg, direct_sum(s1, s2), ProjectivePart{}) == false);
  Pair p = make_pair(alg, direct_sum(s1, s1), ProjectivePart{0, 1});
  EXPECT_EQ(p.size(), 2);
  EXPECT_TRUE(is_tau_tilting_pair(alg, p));
}

TEST(TauTilt, CompletionsOfTheEmptyPair) {
  for (auto spec : {fixtures::linear_a(2), fixtures::linear_a(3), fixtures::preprojective_a2(), fixtures::dual_numbers()}) {
    Alg alg = build_algebra<Rational>(spec);
    EXPECT_TRUE(same_pair(alg, bongartz_completion(alg, empty_pair(alg)), projective_pair(alg)));
    EXPECT_TRUE(same_pair(alg, minimal_completion(alg, empty_pair(alg)), shifted_pair(alg)));
  }
}

TEST(TauTilt, CompletionsOfASimpleOnA2) {
  Alg alg = build_algebra<Rational>(fixtures::linear_a(2));
  auto s1 = standard_module(alg, 0, Flavor::simple);
  auto p1 = standard_module(alg, 0, Flavor::projective);
  Pair u = make_pair(alg, s1, ProjectivePart{});
  // Fac S1 ⊂ Fac(P1 ⊕ S1) = mod A: the largest completion adds P1, the
  // smallest adds P2[1].
  EXPECT_TRUE(same_pair(alg, bongartz_completion(alg, u), make_pair(alg, direct_sum(p1, s1), ProjectivePart{})));
  EXPECT_TRUE(same_pair(alg, minimal_completion(alg, u), make_pair(alg, s1, ProjectivePart{0, 1})));
  EXPECT_THROW(bongartz_completion(alg, make_pair(alg, s1, ProjectivePart{1, 0})), DomainError);
}

TEST(TauTilt, MutationIsAnInvolution) {
  Alg alg = build_algebra<Rational>(fixtures::linear_a(3));
  Pair top = projective_pair(alg);
  for (int i = 1; i <= alg.n(); ++i) {
    auto m = mutate(alg, top, i);
    EXPECT_EQ(m.direction, Direction::down);
    EXPECT_TRUE(is_tau_tilting_pair(alg, m.pair));
    auto cs = pair_complexes(alg, m.pair);
    auto top_cs = pair_complexes(alg, top);
    // Find the new summand's position and mutate back.
    int back = 0;
    for (std::size_t j = 0; j < cs.size() && back == 0; ++j) {
      bool old = false;
      for (const auto& t : top_cs) old = old || is_isomorphic(alg, cs[j], t);
      if (!old) back = static_cast<int>(j) + 1;
    }
    ASSERT_GT(back, 0);
    auto again = mutate(alg, m.pair, back);
    EXPECT_EQ(again.direction, Direction::up);
    EXPECT_TRUE(same_pair(alg, again.pair, top));
  }
  EXPECT_THROW(mutate(alg, top, 0), DomainError);
  EXPECT_THROW(mutate(alg, top, 4), DomainError);
}

TEST(TauTilt, PentagonForA2) {
  Alg alg = build_algebra<Rational>(fixtures::linear_a(2));
  auto g = enumerate_sttilt(alg);
  EXPECT_EQ(g.nodes.size(), 5u);
  EXPECT_EQ(g.edges.size(), 5u);
  expect_regular_hasse(alg, g);
}

TEST(TauTilt, CatalanCounts) {
  Alg a3 = build_algebra<Rational>(fixtures::linear_a(3));
  auto g3 = enumerate_sttilt(a3);
  EXPECT_EQ(g3.nodes.size(), 14u);
  expect_regular_hasse(a3, g3);
  Alg a4 = build_algebra<Rational>(fixtures::linear_a(4));
  auto g4 = enumerate_sttilt(a4);
  EXPECT_EQ(g4.nodes.size(), 42u);
  expect_regular_hasse(a4, g4);
}

TEST(TauTilt, SmallAlgebras) {
  Alg k = build_algebra<Rational>(fixtures::quiver({"1"}, {}));
  auto gk = enumerate_sttilt(k);
  EXPECT_EQ(gk.nodes.size(), 2u);
  expect_regular_hasse(k, gk);
  Alg dual = build_algebra<Rational>(fixtures::dual_numbers());
  auto gd = enumerate_sttilt(dual);
  EXPECT_EQ(gd.nodes.size(), 2u);
  ASSERT_EQ(gd.edges.size(), 1u);
  EXPECT_EQ(gd.edges[0].src, gd.max_node);
  EXPECT_EQ(gd.edges[0].dst, gd.min_node);
  Alg pre = build_algebra<Rational>(fixtures::preprojective_a2());
  auto gp = enumerate_sttilt(pre);
  EXPECT_EQ(gp.nodes.size(), 6u);
  expect_regular_hasse(pre, gp);
}

TEST(TauTilt, LimitsMarkIncomplete) {
  Alg a3 = build_algebra<Rational>(fixtures::linear_a(3));
  EnumerationLimits few;
  few.max_nodes = 5;
  auto g = enumerate_sttilt(a3, few);
  EXPECT_FALSE(g.complete);
  EXPECT_EQ(g.nodes.size(), 5u);
  EnumerationLimits shallow;
  shallow.max_depth = 1;
  auto h = enumerate_sttilt(a3, shallow);
  EXPECT_FALSE(h.complete);
  EXPECT_EQ(h.nodes.size(), 4u);
  EnumerationLimits exact;
  exact.max_nodes = 14;
  EXPECT_TRUE(enumerate_sttilt(a3, exact).complete);
}

TEST(TauTilt, KroneckerIsNotFinite) {
  Alg kr = build_algebra<Rational>(fixtures::kronecker());
  EnumerationLimits lim;
  lim.max_nodes = 30;
  auto f = is_tau_tilting_finite(kr, lim);
  EXPECT_FALSE(f.finite);
  EXPECT_EQ(f.count, 30u);
}

TEST(TauTilt, ClassicalTilting) {
  Alg alg = build_algebra<Rational>(fixtures::linear_a(2));
  auto p1 = standard_module(alg, 0, Flavor::projective);
  auto p2 = standard_module(alg, 1, Flavor::projective);
  auto s1 = standard_module(alg, 0, Flavor::simple);
  EXPECT_TRUE(is_classical_tilting(alg, direct_sum(p1, p2)));
  EXPECT_TRUE(is_classical_tilting(alg, direct_sum(p1, s1)));
  EXPECT_FALSE(is_classical_tilting(alg, s1));
  Alg dual = build_algebra<Rational>(fixtures::dual_numbers());
  EXPECT_TRUE(is_classical_tilting(dual, standard_module(dual, 0, Flavor::projective)));
}

TEST(TauTilt, SiltingPosetMatchesModuleOrder) {
  for (auto spec : {fixtures::linear_a(2), fixtures::preprojective_a2(), fixtures::linear_a(3)}) {
    Alg alg = build_algebra<Rational>(spec);
    auto sp = enumerate_silting(alg);
    auto g = enumerate_sttilt(alg);
    ASSERT_TRUE(sp.complete);
    ASSERT_EQ(sp.objects.size(), g.nodes.size());
    std::vector<Pair> pairs;
    for (const auto& o : sp.objects) pairs.push_back(pair_from_complexes(alg, o));
    for (std::size_t a = 0; a < pairs.size(); ++a)
      for (std::size_t b = 0; b < pairs.size(); ++b) EXPECT_EQ(sp.geq[a][b], leq(alg, pairs[b], pairs[a]));
    EXPECT_EQ(covering_relations(sp.geq).size(), g.edges.size());
  }
}

// A τ-tilting pair admits no further compatible indecomposable: any module N
// or shifted projective P_v[1] compatible with (M, P) already lies in it.
TEST(TauTilt, TauTiltingPairsAreMaximal) {
  for (auto spec : {fixtures::linear_a(3), fixtures::dual_numbers(), fixtures::preprojective_a2()}) {
    Alg alg = build_algebra<Rational>(spec);
    std::vector<Representation<Rational>> candidates;
    for (const auto& m : brute_force_indecomposables(spec)) candidates.push_back(lift_to_rationals(alg, m));
    auto g = enumerate_sttilt(alg);
    ASSERT_TRUE(g.complete);
    for (const auto& node : g.nodes) {
      Pair p = pair_from_complexes(alg, node.summands);
      Representation<Rational> m = module_of(alg, p);
      Representation<Rational> tm = tau(alg, m);
      std::vector<int> support;
      for (int v = 0; v < alg.n(); ++v)
        if (p.projective_part[static_cast<std::size_t>(v)] != 0) support.push_back(v);
      Representation<Rational> proj = projective_sum(alg, support);
      int hits = 0;
      for (const auto& n : candidates) {
        bool compatible = hom_dim(alg, m, tau(alg, n)) == 0 && hom_dim(alg, n, tm) == 0 && hom_dim(alg, proj, n) == 0;
        if (!compatible) continue;
        ++hits;
        bool inside = false;
        for (const auto& x : p.module_summands) inside = inside || is_isomorphic(alg, x, n);
        EXPECT_TRUE(inside);
      }
      EXPECT_EQ(hits, static_cast<int>(p.module_summands.size()));
      for (int v = 0; v < alg.n(); ++v) {
        Representation<Rational> pv = projective_sum(alg, {v});
        if (hom_dim(alg, pv, m) == 0 && hom_dim(alg, pv, proj) == 0) EXPECT_EQ(p.projective_part[static_cast<std::size_t>(v)], 1);
      }
    }
  }
}

// Whenever T > U, some down-neighbour of T is still >= U and some
// up-neighbour of U is still <= T.
TEST(TauTilt, OrderInterpolatesAlongArrows) {
  for (auto spec : {fixtures::linear_a(3), fixtures::preprojective_a2()}) {
    Alg alg = build_algebra<Rational>(spec);
    auto g = enumerate_sttilt(alg);
    ASSERT_TRUE(g.complete);
    std::vector<Pair> pairs;
    for (const auto& node : g.nodes) pairs.push_back(pair_from_complexes(alg, node.summands));
    const std::size_t n = pairs.size();
    for (std::size_t t = 0; t < n; ++t)
      for (std::size_t u = 0; u < n; ++u) {
        if (t == u || !leq(alg, pairs[u], pairs[t])) continue;
        bool down = false, up = false;
        for (const auto& e : g.edges) {
          if (e.src == static_cast<int>(t) && leq(alg, pairs[u], pairs[static_cast<std::size_t>(e.dst)])) down = true;
          if (e.dst == static_cast<int>(u) && leq(alg, pairs[static_cast<std::size_t>(e.src)], pairs[t])) up = true;
        }
        EXPECT_TRUE(down) << t << " > " << u;
        EXPECT_TRUE(up) << t << " > " << u;
      }
  }
}
