#pragma once

#include <cstdint>
#include <vector>

#include "ttilt/algebra.hpp"
#include "ttilt/linalg.hpp"
#include "ttilt/projmap.hpp"

namespace ttilt {

/// Right A-module as a representation: a space of dimension dims[v] at each
/// vertex and, for an arrow a: v → w, a dims[v] × dims[w] matrix acting on
/// row vectors.
template <class S>
struct Representation {
  std::vector<int> dims;
  std::vector<Matrix<S>> maps;

  int total_dim() const {
    int d = 0;
    for (int x : dims) d += x;
    return d;
  }
  bool is_zero() const { return total_dim() == 0; }
};

/// Per-vertex matrices of a module map, again acting on row vectors.
template <class S>
using Morphism = std::vector<Matrix<S>>;

/// Multiplicity of each indecomposable projective.
using ProjectivePart = std::vector<int>;

/// Vertex list with each vertex repeated according to its multiplicity.
std::vector<int> expand(const ProjectivePart& p);
ProjectivePart collect(const std::vector<int>& vertices, int n);

enum class Flavor { projective, injective, simple };

template <class S>
Representation<S> zero_module(const Algebra<S>& alg);
template <class S>
Representation<S> standard_module(const Algebra<S>& alg, int v, Flavor flavor);
/// ⊕_t P_{vs[t]}; the basis at w lists, for each t, the paths vs[t] → w.
template <class S>
Representation<S> projective_sum(const Algebra<S>& alg, const std::vector<int>& vs);
/// ⊕_t I_{vs[t]}; the basis at w is dual to the paths w → vs[t].
template <class S>
Representation<S> injective_sum(const Algebra<S>& alg, const std::vector<int>& vs);
template <class S>
Representation<S> direct_sum(const Representation<S>& m, const Representation<S>& n);

/// Matrix by which a basis path acts, dims[source] × dims[target].
template <class S>
Matrix<S> path_action(const Algebra<S>& alg, const Representation<S>& m, int b);
template <class S>
bool satisfies_relations(const Algebra<S>& alg, const Representation<S>& m);

template <class S>
bool is_morphism(const Algebra<S>& alg, const Representation<S>& m, const Representation<S>& n, const Morphism<S>& f);
/// g ∘ f (apply f first).
template <class S>
Morphism<S> compose(const Morphism<S>& g, const Morphism<S>& f);
template <class S>
Morphism<S> identity_morphism(const Representation<S>& m);
template <class S>
Morphism<S> zero_morphism(const Representation<S>& m, const Representation<S>& n);

template <class S>
std::vector<Morphism<S>> hom_space(const Algebra<S>& alg, const Representation<S>& m, const Representation<S>& n);
template <class S>
int hom_dim(const Algebra<S>& alg, const Representation<S>& m, const Representation<S>& n);

/// A subrepresentation or quotient together with its structure map.
template <class S>
struct SubQuotient {
  Representation<S> module;
  Morphism<S> map;  // inclusion into, or projection from, the ambient module
};

/// Subspace basis rows per vertex, assumed closed under the arrows.
template <class S>
SubQuotient<S> subrepresentation(const Algebra<S>& alg, const Representation<S>& m, const std::vector<Matrix<S>>& rows);
template <class S>
SubQuotient<S> quotient(const Algebra<S>& alg, const Representation<S>& m, const std::vector<Matrix<S>>& rows);
template <class S>
SubQuotient<S> kernel(const Algebra<S>& alg, const Representation<S>& m, const Morphism<S>& f);
template <class S>
SubQuotient<S> image(const Algebra<S>& alg, const Representation<S>& n, const Morphism<S>& f);
template <class S>
SubQuotient<S> cokernel(const Algebra<S>& alg, const Representation<S>& n, const Morphism<S>& f);

/// Row bases of M J at every vertex.
template <class S>
std::vector<Matrix<S>> radical_rows(const Algebra<S>& alg, const Representation<S>& m);
/// Dimension of top(M) = M / M J at each vertex.
template <class S>
std::vector<int> top_dims(const Algebra<S>& alg, const Representation<S>& m);

/// Module map ⊕P_{cols} → ⊕P_{rows} induced by a projective map.
template <class S>
Morphism<S> projmap_to_morphism(const Algebra<S>& alg, const ProjMap<S>& f);
/// ν applied to f: ⊕I_{cols} → ⊕I_{rows}.
template <class S>
Morphism<S> nakayama(const Algebra<S>& alg, const ProjMap<S>& f);

/// P1 →f P0 → M → 0 with P0 → M a projective cover and P1 → ΩM one too.
template <class S>
struct Presentation {
  std::vector<int> p1;
  std::vector<int> p0;
  ProjMap<S> f;
  Morphism<S> cover;       // projective_sum(p0) → M
  SubQuotient<S> syzygy;   // ΩM ⊆ projective_sum(p0)
};

template <class S>
Presentation<S> minimal_projective_presentation(const Algebra<S>& alg, const Representation<S>& m);
/// Projective cover generators: vertex list and cover map.
template <class S>
std::pair<std::vector<int>, Morphism<S>> projective_cover(const Algebra<S>& alg, const Representation<S>& m);

template <class S>
Representation<S> tau(const Algebra<S>& alg, const Representation<S>& m);
template <class S>
int ext1_dim(const Algebra<S>& alg, const Representation<S>& m, const Representation<S>& n);
/// Hom modulo maps factoring through a projective.
template <class S>
int stable_hom_dim(const Algebra<S>& alg, const Representation<S>& m, const Representation<S>& n);
/// Hom modulo maps factoring through an injective.
template <class S>
int costable_hom_dim(const Algebra<S>& alg, const Representation<S>& m, const Representation<S>& n);

/// Sum of the images of all maps M → X.
template <class S>
SubQuotient<S> trace(const Algebra<S>& alg, const Representation<S>& m, const Representation<S>& x);
template <class S>
bool in_fac(const Algebra<S>& alg, const Representation<S>& x, const Representation<S>& m);
template <class S>
int annihilator_dim(const Algebra<S>& alg, const Representation<S>& m);
template <class S>
bool is_faithful(const Algebra<S>& alg, const Representation<S>& m);
template <class S>
bool is_projective(const Algebra<S>& alg, const Representation<S>& m);

/// Indecomposable summands, listed with multiplicity. Characteristic 0 only.
template <class S>
std::vector<Representation<S>> decompose(const Algebra<S>& alg, const Representation<S>& m, std::uint64_t seed = 0);
template <class S>
bool is_indecomposable(const Algebra<S>& alg, const Representation<S>& m);
/// Isomorphism of modules; exact for indecomposables, and for arbitrary
/// modules via their decompositions.
template <class S>
bool is_isomorphic(const Algebra<S>& alg, const Representation<S>& m, const Representation<S>& n);

}  // namespace ttilt
