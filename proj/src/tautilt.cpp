#include "ttilt/tautilt.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <tuple>

#include "ttilt/errors.hpp"

namespace ttilt {

std::vector<std::vector<int>> sorted_columns(std::vector<std::vector<int>> m) {
  std::sort(m.begin(), m.end());
  return m;
}

std::vector<std::pair<int, int>> covering_relations(const std::vector<std::vector<bool>>& geq) {
  const int n = static_cast<int>(geq.size());
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !geq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) continue;
      bool between = false;
      for (int k = 0; k < n && !between; ++k)
        between = k != i && k != j && geq[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] &&
                  geq[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
      if (!between) out.emplace_back(i, j);
    }
  return out;
}

namespace {

template <class S>
std::vector<int> all_vertices(const Algebra<S>& alg) {
  std::vector<int> vs(static_cast<std::size_t>(alg.n()));
  std::iota(vs.begin(), vs.end(), 0);
  return vs;
}

// Reorders complexes by their g-vectors.
template <class S>
std::vector<Complex<S>> by_g_vector(const Algebra<S>& alg, std::vector<Complex<S>> cs) {
  std::vector<std::pair<std::vector<int>, std::size_t>> keyed;
  for (std::size_t i = 0; i < cs.size(); ++i) keyed.emplace_back(g_vector(alg, cs[i]), i);
  std::sort(keyed.begin(), keyed.end());
  std::vector<Complex<S>> out;
  for (const auto& [g, i] : keyed) out.push_back(std::move(cs[i]));
  return out;
}

template <class S>
bool same_complex(const Algebra<S>& alg, const Complex<S>& x, const Complex<S>& y) {
  return x == y || is_isomorphic(alg, x, y);
}

// Adds the indecomposable parts of c not already present.
template <class S>
void absorb(const Algebra<S>& alg, std::vector<Complex<S>>& into, const Complex<S>& c) {
  if (c.is_zero()) return;
  for (auto& part : decompose_complex(alg, c)) {
    bool seen = false;
    for (const auto& q : into) seen = seen || same_complex(alg, part, q);
    if (!seen) into.push_back(std::move(part));
  }
}

template <class S>
bool unimodular(const std::vector<std::vector<int>>& cols) {
  const Index n = static_cast<Index>(cols.size());
  Matrix<Rational> m(n, n);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) {
      const auto& c = cols[static_cast<std::size_t>(j)];
      if (static_cast<Index>(c.size()) != n) return false;
      m(i, j) = Rational(c[static_cast<std::size_t>(i)]);
    }
  Rational det(1);
  for (Index k = 0; k < n; ++k) {
    Index p = k;
    while (p < n && m(p, k).is_zero()) ++p;
    if (p == n) return false;
    if (p != k) {
      m.row(p).swap(m.row(k));
      det = -det;
    }
    det *= m(k, k);
    Rational inv = m(k, k).inverse();
    for (Index i = k + 1; i < n; ++i) {
      if (m(i, k).is_zero()) continue;
      Rational f = m(i, k) * inv;
      for (Index j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det == Rational(1) || det == Rational(-1);
}

// The new summand replacing t[i]; `check` confirms it is indecomposable.
template <class S>
std::pair<Complex<S>, Direction> exchange(const Algebra<S>& alg, const std::vector<Complex<S>>& t, std::size_t i,
                                          bool check) {
  std::vector<Complex<S>> rest;
  for (std::size_t j = 0; j < t.size(); ++j)
    if (j != i) rest.push_back(t[j]);
  const Complex<S>& x = t[i];
  Approximation<S> left = minimal_left_approximation(alg, x, rest);
  Complex<S> c = strip_contractible(alg, cone(alg, x, left.object, left.map));
  Direction dir = Direction::down;
  if (!c.is_two_term() || c.is_zero()) {
    Approximation<S> right = minimal_right_approximation(alg, x, rest);
    c = strip_contractible(alg, cocone(alg, right.object, x, right.map));
    dir = Direction::up;
    if (!c.is_two_term() || c.is_zero()) throw InvariantViolation("neither mutation of a summand is two-term");
  }
  c = as_two_term(c);
  if (check && !is_indecomposable_complex(alg, c)) throw InvariantViolation("mutation produced a decomposable summand");
  return {std::move(c), dir};
}

template <class S>
std::vector<Complex<S>> replaced(const std::vector<Complex<S>>& t, std::size_t i, Complex<S> c) {
  std::vector<Complex<S>> out = t;
  out[i] = std::move(c);
  return out;
}

template <class S>
std::vector<Complex<S>> projective_complexes(const Algebra<S>& alg, int degree) {
  std::vector<Complex<S>> out;
  for (int v = 0; v < alg.n(); ++v) out.push_back(as_two_term(stalk<S>({v}, degree)));
  return out;
}

template <class S>
bool same_object(const Algebra<S>& alg, const std::vector<Complex<S>>& a, const std::vector<Complex<S>>& b) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& x : a) {
    bool found = false;
    for (std::size_t j = 0; j < b.size() && !found; ++j)
      if (!used[j] && same_complex(alg, x, b[j])) used[j] = found = true;
    if (!found) return false;
  }
  return true;
}

}  // namespace

template <class S>
TauRigidPair<S> make_pair(const Algebra<S>& alg, const Representation<S>& m, const ProjectivePart& p,
                          std::uint64_t seed) {
  TauRigidPair<S> out;
  out.projective_part.assign(static_cast<std::size_t>(alg.n()), 0);
  for (std::size_t v = 0; v < p.size() && v < out.projective_part.size(); ++v) out.projective_part[v] = p[v] > 0;
  if (!m.is_zero()) {
    for (auto& x : decompose(alg, m, seed)) {
      bool seen = false;
      for (const auto& y : out.module_summands) seen = seen || is_isomorphic(alg, x, y);
      if (!seen) out.module_summands.push_back(std::move(x));
    }
  }
  return out;
}

template <class S>
Representation<S> module_of(const Algebra<S>& alg, const TauRigidPair<S>& pair) {
  Representation<S> m = zero_module(alg);
  for (const auto& x : pair.module_summands) m = direct_sum(m, x);
  return m;
}

template <class S>
bool is_tau_rigid_pair(const Algebra<S>& alg, const Representation<S>& m, const ProjectivePart& p) {
  for (std::size_t v = 0; v < p.size(); ++v)
    if (p[v] > 0 && m.dims[v] != 0) return false;
  if (m.is_zero()) return true;
  return hom_dim(alg, m, tau(alg, m)) == 0;
}

template <class S>
bool is_tau_rigid_pair(const Algebra<S>& alg, const TauRigidPair<S>& pair) {
  return is_tau_rigid_pair(alg, module_of(alg, pair), pair.projective_part);
}

template <class S>
bool is_tau_tilting_pair(const Algebra<S>& alg, const TauRigidPair<S>& pair) {
  return pair.size() == alg.n() && is_tau_rigid_pair(alg, pair);
}

template <class S>
std::vector<Complex<S>> pair_complexes(const Algebra<S>& alg, const TauRigidPair<S>& pair) {
  std::vector<Complex<S>> out;
  for (const auto& m : pair.module_summands) out.push_back(as_two_term(pair_to_complex(alg, m, ProjectivePart{})));
  for (std::size_t v = 0; v < pair.projective_part.size(); ++v)
    for (int k = 0; k < pair.projective_part[v]; ++k) out.push_back(as_two_term(stalk<S>({static_cast<int>(v)}, -1)));
  return by_g_vector(alg, std::move(out));
}

template <class S>
TauRigidPair<S> pair_from_complexes(const Algebra<S>& alg, const std::vector<Complex<S>>& cs) {
  TauRigidPair<S> out;
  out.projective_part.assign(static_cast<std::size_t>(alg.n()), 0);
  for (const auto& c : by_g_vector(alg, cs)) {
    Complex<S> t = as_two_term(strip_contractible(alg, c));
    if (t.at(0).empty()) {
      for (int v : t.at(-1)) ++out.projective_part[static_cast<std::size_t>(v)];
      continue;
    }
    // An indecomposable complex with P⁰ ≠ 0 has no summand P[1], so H⁰ is all.
    Representation<S> proj = projective_sum(alg, t.at(0));
    out.module_summands.push_back(cokernel(alg, proj, projmap_to_morphism(alg, t.diff(-1))).module);
  }
  return out;
}

template <class S>
TauRigidPair<S> bongartz_completion(const Algebra<S>& alg, const TauRigidPair<S>& pair) {
  if (!is_tau_rigid_pair(alg, pair)) throw DomainError("pair is not tau-rigid");
  std::vector<Complex<S>> u = pair_complexes(alg, pair);
  Complex<S> a1 = stalk<S>(all_vertices(alg), -1);
  Approximation<S> ap = minimal_right_approximation(alg, a1, u);
  absorb(alg, u, strip_contractible(alg, cocone(alg, ap.object, a1, ap.map)));
  if (static_cast<int>(u.size()) != alg.n()) throw InvariantViolation("completion has the wrong number of summands");
  return pair_from_complexes(alg, u);
}

template <class S>
TauRigidPair<S> minimal_completion(const Algebra<S>& alg, const TauRigidPair<S>& pair) {
  if (!is_tau_rigid_pair(alg, pair)) throw DomainError("pair is not tau-rigid");
  std::vector<Complex<S>> u = pair_complexes(alg, pair);
  Complex<S> a0 = stalk<S>(all_vertices(alg), 0);
  Approximation<S> ap = minimal_left_approximation(alg, a0, u);
  absorb(alg, u, strip_contractible(alg, cone(alg, a0, ap.object, ap.map)));
  if (static_cast<int>(u.size()) != alg.n()) throw InvariantViolation("completion has the wrong number of summands");
  return pair_from_complexes(alg, u);
}

template <class S>
bool leq(const Algebra<S>& alg, const TauRigidPair<S>& u, const TauRigidPair<S>& t) {
  Representation<S> m = module_of(alg, t);
  for (const auto& x : u.module_summands)
    if (!in_fac(alg, x, m)) return false;
  return true;
}

template <class S>
std::pair<std::vector<Complex<S>>, Direction> mutate_silting(const Algebra<S>& alg, const std::vector<Complex<S>>& t,
                                                            std::size_t i) {
  if (i >= t.size()) throw DomainError("summand index out of range");
  auto [c, dir] = exchange(alg, t, i, true);
  return {by_g_vector(alg, replaced(t, i, std::move(c))), dir};
}

template <class S>
Mutation<S> mutate(const Algebra<S>& alg, const TauRigidPair<S>& pair, int i) {
  if (!is_tau_tilting_pair(alg, pair)) throw DomainError("mutation needs a basic support tau-tilting pair");
  if (i < 1 || i > alg.n()) throw DomainError("summand index must lie in 1.." + std::to_string(alg.n()));
  auto [cs, dir] = mutate_silting(alg, pair_complexes(alg, pair), static_cast<std::size_t>(i - 1));
  Mutation<S> out{pair_from_complexes(alg, cs), dir};
  bool below = leq(alg, out.pair, pair);
  if (below != (dir == Direction::down)) throw InvariantViolation("mutation direction disagrees with the order");
  return out;
}

template <class S>
HasseGraph<S> enumerate_sttilt(const Algebra<S>& alg, const EnumerationLimits& limits) {
  HasseGraph<S> g;
  std::map<std::vector<std::vector<int>>, int> index;
  auto add_node = [&](std::vector<Complex<S>> cs, std::vector<std::vector<int>> key, int depth) {
    index.emplace(key, static_cast<int>(g.nodes.size()));
    g.nodes.push_back(HasseNode<S>{std::move(cs), std::move(key), depth});
    return static_cast<int>(g.nodes.size()) - 1;
  };
  if (limits.max_nodes == 0) return g;
  {
    auto top = by_g_vector(alg, projective_complexes(alg, 0));
    add_node(top, sorted_columns(g_matrix(alg, top)), 0);
  }
  bool truncated = false;
  for (std::size_t head = 0; head < g.nodes.size() && !truncated; ++head) {
    const int src = static_cast<int>(head);
    for (std::size_t i = 0; i < static_cast<std::size_t>(alg.n()); ++i) {
      const auto& t = g.nodes[head].summands;
      std::vector<Complex<S>> rest;
      for (std::size_t j = 0; j < t.size(); ++j)
        if (j != i) rest.push_back(t[j]);
      Approximation<S> left = minimal_left_approximation(alg, t[i], rest);
      Complex<S> c = strip_contractible(alg, cone(alg, t[i], left.object, left.map));
      if (!c.is_two_term() || c.is_zero()) continue;
      std::vector<Complex<S>> cs = by_g_vector(alg, replaced(t, i, as_two_term(c)));
      auto gm = g_matrix(alg, cs);
      if (!unimodular<S>(gm)) throw InvariantViolation("mutation produced g-vectors that are not a basis");
      auto key = sorted_columns(gm);
      int dst;
      if (auto it = index.find(key); it != index.end()) {
        dst = it->second;
        if (!same_object(alg, cs, g.nodes[static_cast<std::size_t>(dst)].summands))
          throw InvariantViolation("non-isomorphic objects share a g-matrix");
      } else {
        const int depth = g.nodes[head].depth + 1;
        if (g.nodes.size() >= limits.max_nodes) {
          truncated = true;
          break;
        }
        if (limits.max_depth >= 0 && depth > limits.max_depth) {
          truncated = true;
          continue;
        }
        dst = add_node(std::move(cs), std::move(key), depth);
      }
      g.edges.push_back(HasseEdge{src, dst, static_cast<int>(i) + 1});
    }
  }
  g.complete = !truncated;
  // Renumber by key so that the output does not depend on visiting order.
  std::vector<int> order(g.nodes.size()), id(g.nodes.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return g.nodes[static_cast<std::size_t>(a)].key < g.nodes[static_cast<std::size_t>(b)].key;
  });
  std::vector<HasseNode<S>> nodes;
  for (std::size_t k = 0; k < order.size(); ++k) {
    id[static_cast<std::size_t>(order[k])] = static_cast<int>(k);
    nodes.push_back(std::move(g.nodes[static_cast<std::size_t>(order[k])]));
  }
  g.nodes = std::move(nodes);
  for (auto& e : g.edges) {
    e.src = id[static_cast<std::size_t>(e.src)];
    e.dst = id[static_cast<std::size_t>(e.dst)];
  }
  std::sort(g.edges.begin(), g.edges.end(),
            [](const HasseEdge& a, const HasseEdge& b) { return std::tie(a.src, a.dst, a.index) < std::tie(b.src, b.dst, b.index); });
  g.max_node = id[0];
  auto bottom = sorted_columns(g_matrix(alg, projective_complexes(alg, -1)));
  if (auto it = index.find(bottom); it != index.end()) g.min_node = id[static_cast<std::size_t>(it->second)];
  return g;
}

template <class S>
Finiteness is_tau_tilting_finite(const Algebra<S>& alg, const EnumerationLimits& limits) {
  HasseGraph<S> g = enumerate_sttilt(alg, limits);
  return Finiteness{g.complete, g.nodes.size()};
}

template <class S>
bool is_classical_tilting(const Algebra<S>& alg, const Representation<S>& m) {
  TauRigidPair<S> p = make_pair(alg, m, ProjectivePart{});
  return is_tau_tilting_pair(alg, p) && is_faithful(alg, m);
}

template <class S>
SiltingPoset<S> enumerate_silting(const Algebra<S>& alg, std::size_t max_objects) {
  SiltingPoset<S> p;
  p.objects.push_back(by_g_vector(alg, projective_complexes(alg, 0)));
  bool truncated = false;
  for (std::size_t head = 0; head < p.objects.size() && !truncated; ++head) {
    for (std::size_t i = 0; i < static_cast<std::size_t>(alg.n()); ++i) {
      auto next = mutate_silting(alg, p.objects[head], i).first;
      bool seen = false;
      for (const auto& o : p.objects) seen = seen || same_object(alg, next, o);
      if (seen) continue;
      if (p.objects.size() >= max_objects) {
        truncated = true;
        break;
      }
      p.objects.push_back(std::move(next));
    }
  }
  p.complete = !truncated;
  const std::size_t n = p.objects.size();
  p.geq.assign(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      bool vanishes = true;
      for (const auto& x : p.objects[a])
        for (const auto& y : p.objects[b])
          if (vanishes && hom_homotopy_dim(alg, x, y, 1) != 0) vanishes = false;
      p.geq[a][b] = vanishes;
    }
  return p;
}

#define TTILT_INSTANTIATE(S)                                                                                       \
  template TauRigidPair<S> make_pair<S>(const Algebra<S>&, const Representation<S>&, const ProjectivePart&,        \
                                        std::uint64_t);                                                           \
  template Representation<S> module_of<S>(const Algebra<S>&, const TauRigidPair<S>&);                             \
  template bool is_tau_rigid_pair<S>(const Algebra<S>&, const Representation<S>&, const ProjectivePart&);         \
  template bool is_tau_rigid_pair<S>(const Algebra<S>&, const TauRigidPair<S>&);                                  \
  template bool is_tau_tilting_pair<S>(const Algebra<S>&, const TauRigidPair<S>&);                                \
  template std::vector<Complex<S>> pair_complexes<S>(const Algebra<S>&, const TauRigidPair<S>&);                  \
  template TauRigidPair<S> pair_from_complexes<S>(const Algebra<S>&, const std::vector<Complex<S>>&);             \
  template TauRigidPair<S> bongartz_completion<S>(const Algebra<S>&, const TauRigidPair<S>&);                     \
  template TauRigidPair<S> minimal_completion<S>(const Algebra<S>&, const TauRigidPair<S>&);                      \
  template bool leq<S>(const Algebra<S>&, const TauRigidPair<S>&, const TauRigidPair<S>&);                        \
  template std::pair<std::vector<Complex<S>>, Direction> mutate_silting<S>(const Algebra<S>&,                     \
                                                                           const std::vector<Complex<S>>&,        \
                                                                           std::size_t);                          \
  template Mutation<S> mutate<S>(const Algebra<S>&, const TauRigidPair<S>&, int);                                 \
  template HasseGraph<S> enumerate_sttilt<S>(const Algebra<S>&, const EnumerationLimits&);                        \
  template Finiteness is_tau_tilting_finite<S>(const Algebra<S>&, const EnumerationLimits&);                      \
  template bool is_classical_tilting<S>(const Algebra<S>&, const Representation<S>&);                             \
  template SiltingPoset<S> enumerate_silting<S>(const Algebra<S>&, std::size_t);

TTILT_INSTANTIATE(Rational)
TTILT_INSTANTIATE(Zp)

}  // namespace ttilt
