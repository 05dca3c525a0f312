#pragma once

#include <string>
#include <vector>

#include "ttilt/algebra.hpp"
#include "ttilt/modrep.hpp"

namespace fixtures {

using ttilt::ArrowSpec;
using ttilt::FieldChoice;
using ttilt::QuiverSpec;
using ttilt::Rational;
using ttilt::Relation;

inline QuiverSpec quiver(std::vector<std::string> vertices, std::vector<ArrowSpec> arrows,
                         FieldChoice field = FieldChoice::rationals()) {
  QuiverSpec q;
  q.field = field;
  q.vertices = std::move(vertices);
  q.arrows = std::move(arrows);
  return q;
}

inline Relation monomial(std::vector<int> arrows) { return {{Rational(1), std::move(arrows)}}; }

/// 1 → 2 → ... → n.
inline QuiverSpec linear_a(int n, FieldChoice field = FieldChoice::rationals()) {
  std::vector<std::string> vs;
  std::vector<ArrowSpec> as;
  for (int i = 1; i <= n; ++i) vs.push_back(std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) as.push_back({"a" + std::to_string(i + 1), i, i + 1});
  return quiver(vs, as, field);
}

/// k[x]/(x^2).
inline QuiverSpec dual_numbers(FieldChoice field = FieldChoice::rationals()) {
  QuiverSpec q = quiver({"1"}, {{"x", 0, 0}}, field);
  q.relations.push_back(monomial({0, 0}));
  return q;
}

/// Preprojective algebra of type A2: a: 1 → 2, b: 2 → 1, ab = ba = 0.
inline QuiverSpec preprojective_a2(FieldChoice field = FieldChoice::rationals()) {
  QuiverSpec q = quiver({"1", "2"}, {{"a", 0, 1}, {"b", 1, 0}}, field);
  q.relations.push_back(monomial({0, 1}));
  q.relations.push_back(monomial({1, 0}));
  return q;
}

inline QuiverSpec kronecker(FieldChoice field = FieldChoice::rationals()) {
  return quiver({"1", "2"}, {{"a", 0, 1}, {"b", 0, 1}}, field);
}

/// Rank-one-per-vertex representation with the given support interval on
/// linear A_n, arrows acting by 1 inside the support.
template <class S>
ttilt::Representation<S> interval(const ttilt::Algebra<S>& alg, int lo, int hi) {
  ttilt::Representation<S> m;
  for (int v = 0; v < alg.n(); ++v) m.dims.push_back(v >= lo && v <= hi ? 1 : 0);
  for (const auto& a : alg.arrows) {
    auto x = ttilt::zero_matrix<S>(m.dims[static_cast<std::size_t>(a.source)], m.dims[static_cast<std::size_t>(a.target)]);
    if (x.size() == 1) x(0, 0) = S(1);
    m.maps.push_back(x);
  }
  return m;
}

}  // namespace fixtures
