#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ttilt/linalg.hpp"
#include "ttilt/scalar.hpp"

namespace ttilt {

struct ArrowSpec {
  std::string name;
  int source = 0;
  int target = 0;
};

/// One term of a relation: coefficient times a path given by arrow indices.
struct RelationTerm {
  Rational coeff;
  std::vector<int> arrows;
};

using Relation = std::vector<RelationTerm>;

/// A quiver with relations, as read from an algebra file.
struct QuiverSpec {
  FieldChoice field;
  std::vector<std::string> vertices;
  std::vector<ArrowSpec> arrows;
  std::vector<Relation> relations;
  int path_length_bound = 64;
};

/// A path read left to right; length 0 paths are the vertex idempotents.
struct Path {
  int source = 0;
  int target = 0;
  std::vector<int> arrows;

  std::size_t length() const { return arrows.size(); }
  friend bool operator==(const Path&, const Path&) = default;
};

/// Sparse algebra element: (basis index, coefficient), sorted by index.
template <class S>
using Elem = std::vector<std::pair<int, S>>;

template <class S>
Elem<S> add(const Elem<S>& a, const Elem<S>& b, const S& f = S(1));

template <class S>
Elem<S> scale(const Elem<S>& a, const S& f);

/// A = kQ/I with a path basis. Basis element v < n() is the idempotent e_v;
/// the remaining paths follow in length-lex order.
template <class S>
class Algebra {
 public:
  FieldChoice field;
  std::vector<std::string> vertices;
  std::vector<ArrowSpec> arrows;
  std::vector<Path> basis;
  /// Input relations with coefficients in the field, kept for module checks.
  std::vector<std::vector<std::pair<S, std::vector<int>>>> relations;

  int n() const { return static_cast<int>(vertices.size()); }
  int dim() const { return static_cast<int>(basis.size()); }
  int source(int b) const { return basis[static_cast<std::size_t>(b)].source; }
  int target(int b) const { return basis[static_cast<std::size_t>(b)].target; }

  /// Basis product b * c expanded in the basis.
  const Elem<S>& product(int b, int c) const { return table_[static_cast<std::size_t>(b * dim() + c)]; }
  Elem<S> multiply(const Elem<S>& x, const Elem<S>& y) const;

  /// Basis indices of the paths from v to w, i.e. a basis of e_v A e_w.
  const std::vector<int>& between(int v, int w) const { return between_[static_cast<std::size_t>(v * n() + w)]; }
  int arrow_index(int a) const { return arrow_basis_[static_cast<std::size_t>(a)]; }
  int vertex_index(const std::string& label) const;
  int arrow_by_name(const std::string& name) const;
  /// Index of an irreducible path, -1 when the path is not a basis element.
  int find(const Path& p) const;
  std::string path_name(int b) const;

  Elem<S> unit(int b, const S& c = S(1)) const { return {{b, c}}; }
  Elem<S> one() const;

  S from_rational(const Rational& r) const { return ScalarTraits<S>::from_rational(r, field); }

 private:
  template <class T>
  friend Algebra<T> build_algebra(const QuiverSpec& spec);
  std::vector<Elem<S>> table_;
  std::vector<std::vector<int>> between_;
  std::vector<int> arrow_basis_;
  std::map<std::vector<int>, int> index_;
};

/// Position of each basis path inside its e_v A e_w block, i.e. within
/// between(source, target).
template <class S>
std::vector<int> block_positions(const Algebra<S>& alg) {
  std::vector<int> pos(static_cast<std::size_t>(alg.dim()), 0);
  for (int v = 0; v < alg.n(); ++v)
    for (int w = 0; w < alg.n(); ++w) {
      const auto& ps = alg.between(v, w);
      for (std::size_t i = 0; i < ps.size(); ++i) pos[static_cast<std::size_t>(ps[i])] = static_cast<int>(i);
    }
  return pos;
}

/// Runs the path rewriting completion and tabulates multiplication.
/// Throws DomainError for malformed relations, a non-prime modulus or a
/// basis that does not close up below the path length bound.
template <class S>
Algebra<S> build_algebra(const QuiverSpec& spec);

/// The irreducible paths of `spec` in basis order.
std::vector<Path> path_basis(const QuiverSpec& spec);

/// Checks e_i e_j = δ e_i, Σ e_i = 1 and associativity on all basis triples.
template <class S>
bool check_algebra_axioms(const Algebra<S>& alg);

}  // namespace ttilt
