#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "ttilt/algebra.hpp"
#include "ttilt/modrep.hpp"
#include "ttilt/projmap.hpp"

namespace ttilt {

/// Bounded complex of projectives. terms[k] lists the indecomposable
/// projectives (by vertex) in degree lo + k, and d[k] maps terms[k] to
/// terms[k + 1].
template <class S>
struct Complex {
  int lo = 0;
  std::vector<std::vector<int>> terms;
  std::vector<ProjMap<S>> d;

  int hi() const { return lo + static_cast<int>(terms.size()) - 1; }
  const std::vector<int>& at(int deg) const {
    static const std::vector<int> none;
    int k = deg - lo;
    return k >= 0 && k < static_cast<int>(terms.size()) ? terms[static_cast<std::size_t>(k)] : none;
  }
  /// The differential leaving degree deg, possibly an empty-shaped map.
  ProjMap<S> diff(int deg) const {
    int k = deg - lo;
    if (k >= 0 && k + 1 < static_cast<int>(terms.size())) return d[static_cast<std::size_t>(k)];
    return ProjMap<S>(at(deg + 1), at(deg));
  }
  bool is_zero() const {
    for (const auto& t : terms)
      if (!t.empty()) return false;
    return true;
  }
  /// Nonzero only in degrees −1 and 0.
  bool is_two_term() const {
    for (int deg = lo; deg <= hi(); ++deg)
      if (!at(deg).empty() && deg != -1 && deg != 0) return false;
    return true;
  }
  friend bool operator==(const Complex&, const Complex&) = default;
};

/// P⁻¹ →d P⁰ with d given as a map (rows p_zero, cols p_minus1).
template <class S>
Complex<S> two_term(std::vector<int> p_minus1, std::vector<int> p_zero, ProjMap<S> d) {
  Complex<S> c;
  c.lo = -1;
  c.terms = {std::move(p_minus1), std::move(p_zero)};
  c.d = {std::move(d)};
  return c;
}

template <class S>
Complex<S> two_term(std::vector<int> p_minus1, std::vector<int> p_zero) {
  ProjMap<S> d(p_zero, p_minus1);
  return two_term<S>(std::move(p_minus1), std::move(p_zero), std::move(d));
}

/// The same terms as a two-term complex, whatever the stored degree range.
template <class S>
Complex<S> as_two_term(const Complex<S>& c) {
  return two_term<S>(c.at(-1), c.at(0), c.diff(-1));
}

/// ⊕ P_v placed in one degree.
template <class S>
Complex<S> stalk(std::vector<int> vs, int degree) {
  Complex<S> c;
  c.lo = degree;
  c.terms = {std::move(vs)};
  return c;
}

/// X[s]: degree k holds X^{k+s}, differential multiplied by (−1)^s.
template <class S>
Complex<S> shift(const Complex<S>& x, int s);

template <class S>
Complex<S> direct_sum(const Complex<S>& x, const Complex<S>& y);

/// Degree-preserving chain map X → Y; missing degrees are zero.
template <class S>
struct ChainMap {
  std::map<int, ProjMap<S>> f;
};

template <class S>
ChainMap<S> identity_chain_map(const Algebra<S>& alg, const Complex<S>& x);
/// g ∘ f.
template <class S>
ChainMap<S> compose(const Algebra<S>& alg, const ChainMap<S>& g, const ChainMap<S>& f);
template <class S>
ChainMap<S> add(const ChainMap<S>& a, const ChainMap<S>& b, const S& c = S(1));
template <class S>
bool is_chain_map(const Algebra<S>& alg, const Complex<S>& x, const Complex<S>& y, const ChainMap<S>& f);

/// Hom in the homotopy category, with coordinates of chain maps modulo
/// null-homotopic ones.
template <class S>
class HomK {
 public:
  HomK(const Algebra<S>& alg, const Complex<S>& x, const Complex<S>& y);

  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<ChainMap<S>>& basis() const { return basis_; }
  /// Coordinates of a chain map's homotopy class in basis().
  Vector<S> coords(const ChainMap<S>& f) const;
  bool is_null_homotopic(const ChainMap<S>& f) const;
  ChainMap<S> combination(const Vector<S>& c) const;

  /// Sparse vectorization of a chain map in this Hom system.
  SparseRow<S> vectorize(const ChainMap<S>& f) const;
  Index unknowns() const { return nvars_; }
  const std::vector<SparseRow<S>>& boundaries() const { return boundaries_; }

 private:
  struct Block {
    int deg;
    std::vector<int> rows, cols;
    Index offset;
    std::vector<Index> entry_off;  // per (t, u), row-major, then path position
  };
  const Algebra<S>* alg_;
  std::vector<int> pos_;
  std::vector<Block> blocks_;
  Index nvars_ = 0;
  std::vector<SparseRow<S>> boundaries_;  // independent
  std::vector<ChainMap<S>> basis_;
  std::vector<SparseRow<S>> basis_vecs_;
  mutable std::shared_ptr<SpanCoords<S>> coords_;

  const Block* block(int deg) const;
};

/// dim Hom_K(X, Y[s]).
template <class S>
int hom_homotopy_dim(const Algebra<S>& alg, const Complex<S>& x, const Complex<S>& y, int s);

/// Cone(f)^k = X^{k+1} ⊕ Y^k with differential [[−d_X, 0], [f, d_Y]].
template <class S>
Complex<S> cone(const Algebra<S>& alg, const Complex<S>& x, const Complex<S>& y, const ChainMap<S>& f);
/// Cone(f)[−1], so that cocone(f) → X → Y is a triangle.
template <class S>
Complex<S> cocone(const Algebra<S>& alg, const Complex<S>& x, const Complex<S>& y, const ChainMap<S>& f);

/// Removes contractible summands by Gaussian elimination on unit entries.
/// The result has all differentials in the radical.
template <class S>
Complex<S> strip_contractible(const Algebra<S>& alg, const Complex<S>& c);

/// Indecomposable summands in the homotopy category (characteristic 0).
template <class S>
std::vector<Complex<S>> decompose_complex(const Algebra<S>& alg, const Complex<S>& c, std::uint64_t seed = 0);

template <class S>
bool is_indecomposable_complex(const Algebra<S>& alg, const Complex<S>& c);

/// Homotopy equivalence of minimal complexes.
template <class S>
bool is_isomorphic(const Algebra<S>& alg, const Complex<S>& x, const Complex<S>& y);

/// A map into (or out of) ⊕_j T_j^{mult[j]}.
template <class S>
struct Approximation {
  std::vector<int> mult;
  Complex<S> object;
  ChainMap<S> map;
};

/// Minimal left add(T)-approximation X → T' for pairwise non-isomorphic
/// indecomposables T_j.
template <class S>
Approximation<S> minimal_left_approximation(const Algebra<S>& alg, const Complex<S>& x,
                                            const std::vector<Complex<S>>& t);
/// Minimal right add(T)-approximation T'' → X.
template <class S>
Approximation<S> minimal_right_approximation(const Algebra<S>& alg, const Complex<S>& x,
                                             const std::vector<Complex<S>>& t);

/// Cone of f: A → T' for A the stalk complex in degree 0, stripped.
template <class S>
Complex<S> cone_two_term(const Algebra<S>& alg, const Complex<S>& t, const ChainMap<S>& f);

/// Σ (−1)^k [X^k] in K₀(proj A).
template <class S>
std::vector<int> g_vector(const Algebra<S>& alg, const Complex<S>& c);
/// Columns are the g-vectors of the given complexes.
template <class S>
std::vector<std::vector<int>> g_matrix(const Algebra<S>& alg, const std::vector<Complex<S>>& cs);

/// Minimal presentation of M plus P in degree −1.
template <class S>
Complex<S> pair_to_complex(const Algebra<S>& alg, const Representation<S>& m, const ProjectivePart& p);
/// (H⁰(T), Q) where Q[1] is the largest summand of T concentrated in degree −1.
template <class S>
std::pair<Representation<S>, ProjectivePart> complex_to_pair(const Algebra<S>& alg, const Complex<S>& t);

template <class S>
bool is_presilting(const Algebra<S>& alg, const Complex<S>& t);
template <class S>
bool is_two_term_silting(const Algebra<S>& alg, const Complex<S>& t);

}  // namespace ttilt
