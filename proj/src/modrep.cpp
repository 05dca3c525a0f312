#include "ttilt/modrep.hpp"

#include <algorithm>
#include <numeric>

#include "ttilt/endo.hpp"

namespace ttilt {
namespace {

template <class S>
SparseRow<S> vectorize(const Morphism<S>& f) {
  SparseRow<S> r;
  Index off = 0;
  for (const Matrix<S>& m : f) {
    for (Index i = 0; i < m.rows(); ++i)
      for (Index j = 0; j < m.cols(); ++j)
        if (!m(i, j).is_zero()) r.emplace_back(off + i * m.cols() + j, m(i, j));
    off += m.rows() * m.cols();
  }
  return r;
}

template <class S>
Index vector_length(const Representation<S>& m, const Representation<S>& n) {
  Index len = 0;
  for (std::size_t v = 0; v < m.dims.size(); ++v) len += static_cast<Index>(m.dims[v]) * n.dims[v];
  return len;
}

template <class S>
Morphism<S> combination(const std::vector<Morphism<S>>& basis, const Vector<S>& c, const Representation<S>& m,
                        const Representation<S>& n) {
  Morphism<S> f = zero_morphism(m, n);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (c(static_cast<Index>(i)).is_zero()) continue;
    for (std::size_t v = 0; v < f.size(); ++v) f[v] += basis[i][v] * c(static_cast<Index>(i));
  }
  return f;
}

template <class S>
int span_rank(const std::vector<SparseRow<S>>& rows, Index cols) {
  SparseEchelon<S> e(cols);
  for (const auto& r : rows) e.add(r);
  return static_cast<int>(e.rank());
}

template <class S>
struct CoverData {
  std::vector<int> vs;
  std::vector<Vector<S>> gens;  // generator of summand t, a vector in M_{vs[t]}
  Morphism<S> map;
};

template <class S>
std::vector<Matrix<S>> all_path_actions(const Algebra<S>& alg, const Representation<S>& m) {
  std::vector<Matrix<S>> acts;
  acts.reserve(static_cast<std::size_t>(alg.dim()));
  for (int b = 0; b < alg.dim(); ++b) acts.push_back(path_action(alg, m, b));
  return acts;
}

template <class S>
CoverData<S> cover_data(const Algebra<S>& alg, const Representation<S>& m) {
  CoverData<S> c;
  std::vector<Matrix<S>> rad = radical_rows(alg, m);
  for (int v = 0; v < alg.n(); ++v) {
    Matrix<S> id = identity_matrix<S>(m.dims[static_cast<std::size_t>(v)]);
    for (Index i : extending_rows<S>(rad[static_cast<std::size_t>(v)], id)) {
      c.vs.push_back(v);
      c.gens.push_back(id.row(i).transpose());
    }
  }
  std::vector<Matrix<S>> acts = all_path_actions(alg, m);
  Representation<S> p = projective_sum(alg, c.vs);
  c.map.resize(static_cast<std::size_t>(alg.n()));
  for (int w = 0; w < alg.n(); ++w) {
    Matrix<S> mw = zero_matrix<S>(p.dims[static_cast<std::size_t>(w)], m.dims[static_cast<std::size_t>(w)]);
    Index row = 0;
    for (std::size_t t = 0; t < c.vs.size(); ++t)
      for (int b : alg.between(c.vs[t], w)) {
        mw.row(row++) = (c.gens[t].transpose() * acts[static_cast<std::size_t>(b)]).eval();
      }
    c.map[static_cast<std::size_t>(w)] = mw;
  }
  return c;
}

template <class S>
std::vector<int> repeat_vertices(const Representation<S>& m) {
  std::vector<int> vs;
  for (std::size_t v = 0; v < m.dims.size(); ++v)
    for (int l = 0; l < m.dims[v]; ++l) vs.push_back(static_cast<int>(v));
  return vs;
}

// Monomorphism M → ⊕_{v, l < dim M_v} I_v sending m to (z ↦ l-th coordinate of m z).
template <class S>
Morphism<S> injective_embedding(const Algebra<S>& alg, const Representation<S>& m) {
  std::vector<int> vs = repeat_vertices(m);
  std::vector<Matrix<S>> acts = all_path_actions(alg, m);
  Representation<S> inj = injective_sum(alg, vs);
  Morphism<S> f(static_cast<std::size_t>(alg.n()));
  for (int w = 0; w < alg.n(); ++w) {
    Matrix<S> fw = zero_matrix<S>(m.dims[static_cast<std::size_t>(w)], inj.dims[static_cast<std::size_t>(w)]);
    Index col = 0;
    std::vector<int> seen(static_cast<std::size_t>(alg.n()), 0);
    for (int v : vs) {
      int l = seen[static_cast<std::size_t>(v)]++;
      for (int y : alg.between(w, v)) {
        const Matrix<S>& py = acts[static_cast<std::size_t>(y)];
        for (Index i = 0; i < fw.rows(); ++i) fw(i, col) = py(i, l);
        ++col;
      }
    }
    f[static_cast<std::size_t>(w)] = fw;
  }
  return f;
}

template <class S>
FiniteAlgebra<S> endomorphism_algebra(const std::vector<Morphism<S>>& basis, const Representation<S>& m) {
  FiniteAlgebra<S> e;
  e.dim = static_cast<int>(basis.size());
  std::vector<SparseRow<S>> rows;
  for (const auto& f : basis) rows.push_back(vectorize(f));
  SpanCoords<S> coords(vector_length(m, m), rows);
  for (int i = 0; i < e.dim; ++i)
    for (int j = 0; j < e.dim; ++j) {
      auto c = coords.coords(vectorize(compose(basis[static_cast<std::size_t>(i)], basis[static_cast<std::size_t>(j)])));
      if (!c) throw InvariantViolation("endomorphisms not closed under composition");
      e.table.push_back(*c);
    }
  auto one = coords.coords(vectorize(identity_morphism(m)));
  if (!one) throw InvariantViolation("identity missing from endomorphism basis");
  e.one = *one;
  return e;
}

template <class S>
bool iso_indecomposable(const Algebra<S>& alg, const Representation<S>& m, const Representation<S>& n) {
  if (m.dims != n.dims) return false;
  if (m.is_zero()) return true;
  auto end = hom_space(alg, m, m);
  auto mn = hom_space(alg, m, n);
  auto nm = hom_space(alg, n, m);
  if (mn.empty() || nm.empty()) return false;
  FiniteAlgebra<S> e = endomorphism_algebra(end, m);
  Matrix<S> g = trace_form(e);
  std::vector<SparseRow<S>> rows;
  for (const auto& f : end) rows.push_back(vectorize(f));
  SpanCoords<S> coords(vector_length(m, m), rows);
  for (const auto& f : mn)
    for (const auto& h : nm) {
      auto c = coords.coords(vectorize(compose(h, f)));
      if (!c) throw InvariantViolation("composite is not an endomorphism");
      if (outside_radical(g, *c)) return true;
    }
  return false;
}

}  // namespace

std::vector<int> expand(const ProjectivePart& p) {
  std::vector<int> vs;
  for (std::size_t v = 0; v < p.size(); ++v)
    for (int k = 0; k < p[v]; ++k) vs.push_back(static_cast<int>(v));
  return vs;
}

ProjectivePart collect(const std::vector<int>& vertices, int n) {
  ProjectivePart p(static_cast<std::size_t>(n), 0);
  for (int v : vertices) ++p[static_cast<std::size_t>(v)];
  return p;
}

template <class S>
Representation<S> zero_module(const Algebra<S>& alg) {
  Representation<S> m;
  m.dims.assign(static_cast<std::size_t>(alg.n()), 0);
  for (std::size_t a = 0; a < alg.arrows.size(); ++a) m.maps.push_back(Matrix<S>(0, 0));
  return m;
}

template <class S>
Representation<S> projective_sum(const Algebra<S>& alg, const std::vector<int>& vs) {
  const int n = alg.n();
  std::vector<int> pos = block_positions(alg);
  Representation<S> p;
  p.dims.assign(static_cast<std::size_t>(n), 0);
  // off[w][t]: first basis index of summand t at vertex w
  std::vector<std::vector<int>> off(static_cast<std::size_t>(n), std::vector<int>(vs.size(), 0));
  for (int w = 0; w < n; ++w)
    for (std::size_t t = 0; t < vs.size(); ++t) {
      off[static_cast<std::size_t>(w)][t] = p.dims[static_cast<std::size_t>(w)];
      p.dims[static_cast<std::size_t>(w)] += static_cast<int>(alg.between(vs[t], w).size());
    }
  for (std::size_t a = 0; a < alg.arrows.size(); ++a) {
    const ArrowSpec& ar = alg.arrows[a];
    int ab = alg.arrow_index(static_cast<int>(a));
    Matrix<S> m = zero_matrix<S>(p.dims[static_cast<std::size_t>(ar.source)], p.dims[static_cast<std::size_t>(ar.target)]);
    for (std::size_t t = 0; t < vs.size(); ++t) {
      const auto& src = alg.between(vs[t], ar.source);
      for (std::size_t i = 0; i < src.size(); ++i)
        for (const auto& [c, coef] : alg.product(src[i], ab))
          m(off[static_cast<std::size_t>(ar.source)][t] + static_cast<Index>(i),
            off[static_cast<std::size_t>(ar.target)][t] + pos[static_cast<std::size_t>(c)]) += coef;
    }
    p.maps.push_back(std::move(m));
  }
  return p;
}

template <class S>
Representation<S> injective_sum(const Algebra<S>& alg, const std::vector<int>& vs) {
  const int n = alg.n();
  std::vector<int> pos = block_positions(alg);
  Representation<S> q;
  q.dims.assign(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> off(static_cast<std::size_t>(n), std::vector<int>(vs.size(), 0));
  for (int w = 0; w < n; ++w)
    for (std::size_t t = 0; t < vs.size(); ++t) {
      off[static_cast<std::size_t>(w)][t] = q.dims[static_cast<std::size_t>(w)];
      q.dims[static_cast<std::size_t>(w)] += static_cast<int>(alg.between(w, vs[t]).size());
    }
  for (std::size_t a = 0; a < alg.arrows.size(); ++a) {
    const ArrowSpec& ar = alg.arrows[a];
    int ab = alg.arrow_index(static_cast<int>(a));
    Matrix<S> m = zero_matrix<S>(q.dims[static_cast<std::size_t>(ar.source)], q.dims[static_cast<std::size_t>(ar.target)]);
    for (std::size_t t = 0; t < vs.size(); ++t) {
      const auto& tgt = alg.between(ar.target, vs[t]);
      for (std::size_t j = 0; j < tgt.size(); ++j)
        for (const auto& [y, coef] : alg.product(ab, tgt[j]))
          m(off[static_cast<std::size_t>(ar.source)][t] + pos[static_cast<std::size_t>(y)],
            off[static_cast<std::size_t>(ar.target)][t] + static_cast<Index>(j)) += coef;
    }
    q.maps.push_back(std::move(m));
  }
  return q;
}

template <class S>
Representation<S> standard_module(const Algebra<S>& alg, int v, Flavor flavor) {
  if (v < 0 || v >= alg.n()) throw DomainError("vertex index out of range");
  switch (flavor) {
    case Flavor::projective:
      return projective_sum(alg, {v});
    case Flavor::injective:
      return injective_sum(alg, {v});
    case Flavor::simple: {
      Representation<S> s;
      s.dims.assign(static_cast<std::size_t>(alg.n()), 0);
      s.dims[static_cast<std::size_t>(v)] = 1;
      for (const ArrowSpec& ar : alg.arrows)
        s.maps.push_back(zero_matrix<S>(s.dims[static_cast<std::size_t>(ar.source)], s.dims[static_cast<std::size_t>(ar.target)]));
      return s;
    }
  }
  return zero_module(alg);
}

template <class S>
Representation<S> direct_sum(const Representation<S>& m, const Representation<S>& n) {
  Representation<S> s;
  s.dims.resize(m.dims.size());
  for (std::size_t v = 0; v < m.dims.size(); ++v) s.dims[v] = m.dims[v] + n.dims[v];
  for (std::size_t a = 0; a < m.maps.size(); ++a) {
    const Matrix<S>& x = m.maps[a];
    const Matrix<S>& y = n.maps[a];
    Matrix<S> z = zero_matrix<S>(x.rows() + y.rows(), x.cols() + y.cols());
    z.topLeftCorner(x.rows(), x.cols()) = x;
    z.bottomRightCorner(y.rows(), y.cols()) = y;
    s.maps.push_back(std::move(z));
  }
  return s;
}

template <class S>
Matrix<S> path_action(const Algebra<S>& alg, const Representation<S>& m, int b) {
  const Path& p = alg.basis[static_cast<std::size_t>(b)];
  Matrix<S> acc = identity_matrix<S>(m.dims[static_cast<std::size_t>(p.source)]);
  for (int a : p.arrows) acc = mul<S>(acc, m.maps[static_cast<std::size_t>(a)]);
  return acc;
}

template <class S>
bool satisfies_relations(const Algebra<S>& alg, const Representation<S>& m) {
  if (m.dims.size() != static_cast<std::size_t>(alg.n()) || m.maps.size() != alg.arrows.size()) return false;
  for (std::size_t a = 0; a < alg.arrows.size(); ++a) {
    const ArrowSpec& ar = alg.arrows[a];
    if (m.maps[a].rows() != m.dims[static_cast<std::size_t>(ar.source)] ||
        m.maps[a].cols() != m.dims[static_cast<std::size_t>(ar.target)])
      return false;
  }
  for (const auto& rel : alg.relations) {
    if (rel.empty()) continue;
    const auto& first = rel.front().second;
    int s = alg.arrows[static_cast<std::size_t>(first.front())].source;
    int t = alg.arrows[static_cast<std::size_t>(first.back())].target;
    Matrix<S> acc = zero_matrix<S>(m.dims[static_cast<std::size_t>(s)], m.dims[static_cast<std::size_t>(t)]);
    for (const auto& [c, arrows] : rel) {
      Matrix<S> p = identity_matrix<S>(m.dims[static_cast<std::size_t>(s)]);
      for (int a : arrows) p = mul<S>(p, m.maps[static_cast<std::size_t>(a)]);
      acc += p * c;
    }
    if (!is_zero<S>(acc)) return false;
  }
  return true;
}

template <class S>
bool is_morphism(const Algebra<S>& alg, const Representation<S>& m, const Representation<S>& n, const Morphism<S>& f) {
  if (f.size() != static_cast<std::size_t>(alg.n())) return false;
  for (std::size_t a = 0; a < alg.arrows.size(); ++a) {
    const ArrowSpec& ar = alg.arrows[a];
    if (mul<S>(m.maps[a], f[static_cast<std::size_t>(ar.target)]) != mul<S>(f[static_cast<std::size_t>(ar.source)], n.maps[a]))
      return false;
  }
  return true;
}

template <class S>
Morphism<S> compose(const Morphism<S>& g, const Morphism<S>& f) {
  Morphism<S> h(f.size());
  for (std::size_t v = 0; v < f.size(); ++v) h[v] = mul<S>(f[v], g[v]);
  return h;
}

template <class S>
Morphism<S> identity_morphism(const Representation<S>& m) {
  Morphism<S> f;
  for (int d : m.dims) f.push_back(identity_matrix<S>(d));
  return f;
}

template <class S>
Morphism<S> zero_morphism(const Representation<S>& m, const Representation<S>& n) {
  Morphism<S> f;
  for (std::size_t v = 0; v < m.dims.size(); ++v) f.push_back(zero_matrix<S>(m.dims[v], n.dims[v]));
  return f;
}

template <class S>
std::vector<Morphism<S>> hom_space(const Algebra<S>& alg, const Representation<S>& m, const Representation<S>& n) {
  const std::size_t nv = m.dims.size();
  std::vector<Index> off(nv + 1, 0);
  for (std::size_t v = 0; v < nv; ++v) off[v + 1] = off[v] + static_cast<Index>(m.dims[v]) * n.dims[v];
  const Index nvars = off[nv];
  SparseEchelon<S> ech(nvars);
  auto var = [&](int v, Index i, Index j) { return off[static_cast<std::size_t>(v)] + i * n.dims[static_cast<std::size_t>(v)] + j; };
  for (std::size_t a = 0; a < alg.arrows.size(); ++a) {
    const ArrowSpec& ar = alg.arrows[a];
    const Matrix<S>& ma = m.maps[a];
    const Matrix<S>& na = n.maps[a];
    const Index ds = m.dims[static_cast<std::size_t>(ar.source)], dt = n.dims[static_cast<std::size_t>(ar.target)];
    if (ds == 0 || dt == 0) continue;
    // M_a φ_t − φ_s N_a = 0, entry (i, j)
    std::vector<std::vector<std::pair<Index, S>>> mrow(static_cast<std::size_t>(ds)), ncol(static_cast<std::size_t>(dt));
    for (Index i = 0; i < ma.rows(); ++i)
      for (Index k = 0; k < ma.cols(); ++k)
        if (!ma(i, k).is_zero()) mrow[static_cast<std::size_t>(i)].emplace_back(k, ma(i, k));
    for (Index k = 0; k < na.rows(); ++k)
      for (Index j = 0; j < na.cols(); ++j)
        if (!na(k, j).is_zero()) ncol[static_cast<std::size_t>(j)].emplace_back(k, na(k, j));
    for (Index i = 0; i < ds; ++i)
      for (Index j = 0; j < dt; ++j) {
        SparseRow<S> row;
        for (const auto& [k, x] : mrow[static_cast<std::size_t>(i)]) row.emplace_back(var(ar.target, k, j), x);
        for (const auto& [k, x] : ncol[static_cast<std::size_t>(j)]) row.emplace_back(var(ar.source, i, k), -x);
        if (row.empty()) continue;
        std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        SparseRow<S> merged;
        for (auto& e : row) {
          if (!merged.empty() && merged.back().first == e.first) {
            merged.back().second += e.second;
            if (merged.back().second.is_zero()) merged.pop_back();
          } else {
            merged.push_back(e);
          }
        }
        ech.add(std::move(merged));
      }
  }
  std::vector<Morphism<S>> basis;
  for (const SparseRow<S>& k : ech.kernel()) {
    Morphism<S> f = zero_morphism(m, n);
    for (const auto& [idx, x] : k) {
      std::size_t v = static_cast<std::size_t>(std::upper_bound(off.begin(), off.end(), idx) - off.begin() - 1);
      Index local = idx - off[v];
      f[v](local / n.dims[v], local % n.dims[v]) = x;
    }
    basis.push_back(std::move(f));
  }
  return basis;
}

template <class S>
int hom_dim(const Algebra<S>& alg, const Representation<S>& m, const Representation<S>& n) {
  return static_cast<int>(hom_space(alg, m, n).size());
}

template <class S>
SubQuotient<S> subrepresentation(const Algebra<S>& alg, const Representation<S>& m, const std::vector<Matrix<S>>& rows) {
  SubQuotient<S> sq;
  std::vector<Matrix<S>> basis;
  for (std::size_t v = 0; v < rows.size(); ++v) {
    Matrix<S> b = rows[v].rows() == 0 ? Matrix<S>(0, m.dims[v]) : row_basis<S>(rows[v]);
    sq.module.dims.push_back(static_cast<int>(b.rows()));
    basis.push_back(std::move(b));
  }
  for (std::size_t a = 0; a < alg.arrows.size(); ++a) {
    const ArrowSpec& ar = alg.arrows[a];
    const Matrix<S>& bs = basis[static_cast<std::size_t>(ar.source)];
    const Matrix<S>& bt = basis[static_cast<std::size_t>(ar.target)];
    Matrix<S> img = mul<S>(bs, m.maps[a]);
    Matrix<S> x;
    if (bs.rows() == 0 || bt.rows() == 0) {
      if (bt.rows() == 0 && !is_zero<S>(img)) throw InvariantViolation("subspace not closed under an arrow");
      x = zero_matrix<S>(bs.rows(), bt.rows());
    } else {
      auto sol = solve<S>(bt.transpose(), img.transpose());
      if (!sol) throw InvariantViolation("subspace not closed under an arrow");
      x = sol->transpose();
    }
    sq.module.maps.push_back(std::move(x));
  }
  sq.map = basis;
  return sq;
}

template <class S>
SubQuotient<S> quotient(const Algebra<S>& alg, const Representation<S>& m, const std::vector<Matrix<S>>& rows) {
  SubQuotient<S> sq;
  std::vector<Matrix<S>> comp, proj;
  for (std::size_t v = 0; v < rows.size(); ++v) {
    const Index d = m.dims[v];
    Matrix<S> u = rows[v].rows() == 0 ? Matrix<S>(0, d) : row_basis<S>(rows[v]);
    Matrix<S> id = identity_matrix<S>(d);
    std::vector<Index> ext = extending_rows<S>(u, id);
    Matrix<S> c(static_cast<Index>(ext.size()), d);
    for (std::size_t i = 0; i < ext.size(); ++i) c.row(static_cast<Index>(i)) = id.row(ext[i]);
    Matrix<S> q = vstack<S>(u, c);
    Matrix<S> p;
    if (d == 0) {
      p = Matrix<S>(0, 0);
    } else {
      auto qi = solve<S>(q, identity_matrix<S>(d));
      if (!qi) throw InvariantViolation("quotient basis is singular");
      p = qi->rightCols(c.rows());
    }
    sq.module.dims.push_back(static_cast<int>(c.rows()));
    comp.push_back(std::move(c));
    proj.push_back(std::move(p));
  }
  for (std::size_t a = 0; a < alg.arrows.size(); ++a) {
    const ArrowSpec& ar = alg.arrows[a];
    sq.module.maps.push_back(mul<S>(mul<S>(comp[static_cast<std::size_t>(ar.source)], m.maps[a]), proj[static_cast<std::size_t>(ar.target)]));
  }
  sq.map = proj;
  return sq;
}

template <class S>
SubQuotient<S> kernel(const Algebra<S>& alg, const Representation<S>& m, const Morphism<S>& f) {
  std::vector<Matrix<S>> rows;
  for (const Matrix<S>& fv : f) rows.push_back(fv.rows() == 0 ? Matrix<S>(0, 0) : left_kernel_basis<S>(fv));
  return subrepresentation(alg, m, rows);
}

template <class S>
SubQuotient<S> image(const Algebra<S>& alg, const Representation<S>& n, const Morphism<S>& f) {
  std::vector<Matrix<S>> rows;
  for (std::size_t v = 0; v < f.size(); ++v) rows.push_back(f[v].rows() == 0 ? Matrix<S>(0, n.dims[v]) : f[v]);
  return subrepresentation(alg, n, rows);
}

template <class S>
SubQuotient<S> cokernel(const Algebra<S>& alg, const Representation<S>& n, const Morphism<S>& f) {
  std::vector<Matrix<S>> rows;
  for (std::size_t v = 0; v < f.size(); ++v) rows.push_back(f[v].rows() == 0 ? Matrix<S>(0, n.dims[v]) : f[v]);
  return quotient(alg, n, rows);
}

template <class S>
std::vector<Matrix<S>> radical_rows(const Algebra<S>& alg, const Representation<S>& m) {
  std::vector<Matrix<S>> rad;
  for (int v = 0; v < alg.n(); ++v) {
    Matrix<S> acc(0, m.dims[static_cast<std::size_t>(v)]);
    for (std::size_t a = 0; a < alg.arrows.size(); ++a)
      if (alg.arrows[a].target == v && m.maps[a].rows() > 0) acc = vstack<S>(acc, m.maps[a]);
    rad.push_back(acc.rows() == 0 ? acc : row_basis<S>(acc));
  }
  return rad;
}

template <class S>
std::vector<int> top_dims(const Algebra<S>& alg, const Representation<S>& m) {
  std::vector<Matrix<S>> rad = radical_rows(alg, m);
  std::vector<int> t;
  for (int v = 0; v < alg.n(); ++v) t.push_back(m.dims[static_cast<std::size_t>(v)] - static_cast<int>(rad[static_cast<std::size_t>(v)].rows()));
  return t;
}

template <class S>
std::pair<std::vector<int>, Morphism<S>> projective_cover(const Algebra<S>& alg, const Representation<S>& m) {
  CoverData<S> c = cover_data(alg, m);
  return {c.vs, c.map};
}

template <class S>
Morphism<S> projmap_to_morphism(const Algebra<S>& alg, const ProjMap<S>& f) {
  std::vector<int> pos = block_positions(alg);
  Representation<S> src = projective_sum(alg, f.cols), tgt = projective_sum(alg, f.rows);
  Morphism<S> g = zero_morphism(src, tgt);
  for (int w = 0; w < alg.n(); ++w) {
    Index row = 0;
    std::vector<Index> toff(f.nrows() + 1, 0);
    for (std::size_t t = 0; t < f.nrows(); ++t)
      toff[t + 1] = toff[t] + static_cast<Index>(alg.between(f.rows[t], w).size());
    for (std::size_t s = 0; s < f.ncols(); ++s)
      for (int c : alg.between(f.cols[s], w)) {
        for (std::size_t t = 0; t < f.nrows(); ++t) {
          const Elem<S>& x = f.at(t, s);
          if (x.empty()) continue;
          for (const auto& [b, coef] : alg.multiply(x, alg.unit(c)))
            g[static_cast<std::size_t>(w)](row, toff[t] + pos[static_cast<std::size_t>(b)]) += coef;
        }
        ++row;
      }
  }
  return g;
}

template <class S>
Morphism<S> nakayama(const Algebra<S>& alg, const ProjMap<S>& f) {
  std::vector<int> pos = block_positions(alg);
  Representation<S> src = injective_sum(alg, f.cols), tgt = injective_sum(alg, f.rows);
  Morphism<S> g = zero_morphism(src, tgt);
  for (int u = 0; u < alg.n(); ++u) {
    std::vector<Index> soff(f.ncols() + 1, 0), toff(f.nrows() + 1, 0);
    for (std::size_t s = 0; s < f.ncols(); ++s) soff[s + 1] = soff[s] + static_cast<Index>(alg.between(u, f.cols[s]).size());
    for (std::size_t t = 0; t < f.nrows(); ++t) toff[t + 1] = toff[t] + static_cast<Index>(alg.between(u, f.rows[t]).size());
    for (std::size_t t = 0; t < f.nrows(); ++t) {
      const auto& zs = alg.between(u, f.rows[t]);
      for (std::size_t s = 0; s < f.ncols(); ++s) {
        const Elem<S>& x = f.at(t, s);
        if (x.empty()) continue;
        for (std::size_t j = 0; j < zs.size(); ++j)
          for (const auto& [y, coef] : alg.multiply(alg.unit(zs[j]), x))
            g[static_cast<std::size_t>(u)](soff[s] + pos[static_cast<std::size_t>(y)], toff[t] + static_cast<Index>(j)) += coef;
      }
    }
  }
  return g;
}

template <class S>
Presentation<S> minimal_projective_presentation(const Algebra<S>& alg, const Representation<S>& m) {
  Presentation<S> pres;
  CoverData<S> c0 = cover_data(alg, m);
  pres.p0 = c0.vs;
  pres.cover = c0.map;
  Representation<S> p0 = projective_sum(alg, c0.vs);
  pres.syzygy = kernel(alg, p0, c0.map);
  CoverData<S> c1 = cover_data(alg, pres.syzygy.module);
  pres.p1 = c1.vs;
  pres.f = ProjMap<S>(pres.p0, pres.p1);
  std::vector<int> pos = block_positions(alg);
  for (std::size_t j = 0; j < c1.vs.size(); ++j) {
    int w = c1.vs[j];
    // generator of ΩM at w, written in the basis of P0 at w
    Vector<S> g = (c1.gens[j].transpose() * pres.syzygy.map[static_cast<std::size_t>(w)]).transpose();
    Index off = 0;
    for (std::size_t t = 0; t < pres.p0.size(); ++t) {
      const auto& paths = alg.between(pres.p0[t], w);
      Elem<S> x;
      for (std::size_t i = 0; i < paths.size(); ++i)
        if (!g(off + static_cast<Index>(i)).is_zero()) x.emplace_back(paths[i], g(off + static_cast<Index>(i)));
      std::sort(x.begin(), x.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      pres.f.at(t, j) = std::move(x);
      off += static_cast<Index>(paths.size());
    }
  }
  return pres;
}

template <class S>
Representation<S> tau(const Algebra<S>& alg, const Representation<S>& m) {
  Presentation<S> pres = minimal_projective_presentation(alg, m);
  if (pres.p1.empty()) return zero_module(alg);
  Morphism<S> nf = nakayama(alg, pres.f);
  return kernel(alg, injective_sum(alg, pres.p1), nf).module;
}

template <class S>
int ext1_dim(const Algebra<S>& alg, const Representation<S>& m, const Representation<S>& n) {
  Presentation<S> pres = minimal_projective_presentation(alg, m);
  int hp0 = 0;
  for (int v : pres.p0) hp0 += n.dims[static_cast<std::size_t>(v)];
  return hom_dim(alg, pres.syzygy.module, n) - hp0 + hom_dim(alg, m, n);
}

template <class S>
int stable_hom_dim(const Algebra<S>& alg, const Representation<S>& m, const Representation<S>& n) {
  auto hom = hom_space(alg, m, n);
  if (hom.empty()) return 0;
  CoverData<S> c = cover_data(alg, n);
  Representation<S> p = projective_sum(alg, c.vs);
  std::vector<SparseRow<S>> rows;
  for (const auto& g : hom_space(alg, m, p)) rows.push_back(vectorize(compose(c.map, g)));
  return static_cast<int>(hom.size()) - span_rank(rows, vector_length(m, n));
}

template <class S>
int costable_hom_dim(const Algebra<S>& alg, const Representation<S>& m, const Representation<S>& n) {
  auto hom = hom_space(alg, m, n);
  if (hom.empty()) return 0;
  Morphism<S> iota = injective_embedding(alg, m);
  Representation<S> inj = injective_sum(alg, repeat_vertices(m));
  std::vector<SparseRow<S>> rows;
  for (const auto& h : hom_space(alg, inj, n)) rows.push_back(vectorize(compose(h, iota)));
  return static_cast<int>(hom.size()) - span_rank(rows, vector_length(m, n));
}

template <class S>
SubQuotient<S> trace(const Algebra<S>& alg, const Representation<S>& m, const Representation<S>& x) {
  std::vector<Matrix<S>> rows;
  for (std::size_t v = 0; v < x.dims.size(); ++v) rows.push_back(Matrix<S>(0, x.dims[v]));
  for (const auto& f : hom_space(alg, m, x))
    for (std::size_t v = 0; v < x.dims.size(); ++v)
      if (f[v].rows() > 0) rows[v] = vstack<S>(rows[v], f[v]);
  return subrepresentation(alg, x, rows);
}

template <class S>
bool in_fac(const Algebra<S>& alg, const Representation<S>& x, const Representation<S>& m) {
  if (x.is_zero()) return true;
  return trace(alg, m, x).module.dims == x.dims;
}

template <class S>
int annihilator_dim(const Algebra<S>& alg, const Representation<S>& m) {
  int total = 0;
  for (int v = 0; v < alg.n(); ++v)
    for (int w = 0; w < alg.n(); ++w) {
      const auto& paths = alg.between(v, w);
      if (paths.empty()) continue;
      const Index dv = m.dims[static_cast<std::size_t>(v)], dw = m.dims[static_cast<std::size_t>(w)];
      Matrix<S> sys = zero_matrix<S>(dv * dw, static_cast<Index>(paths.size()));
      for (std::size_t k = 0; k < paths.size(); ++k) {
        Matrix<S> p = path_action(alg, m, paths[k]);
        for (Index i = 0; i < dv; ++i)
          for (Index j = 0; j < dw; ++j) sys(i * dw + j, static_cast<Index>(k)) = p(i, j);
      }
      total += static_cast<int>(paths.size()) - static_cast<int>(rank<S>(sys));
    }
  return total;
}

template <class S>
bool is_faithful(const Algebra<S>& alg, const Representation<S>& m) {
  return annihilator_dim(alg, m) == 0;
}

template <class S>
bool is_projective(const Algebra<S>& alg, const Representation<S>& m) {
  CoverData<S> c = cover_data(alg, m);
  return projective_sum(alg, c.vs).total_dim() == m.total_dim();
}

template <class S>
std::vector<Representation<S>> decompose(const Algebra<S>& alg, const Representation<S>& m, std::uint64_t seed) {
  if (m.is_zero()) return {};
  auto end = hom_space(alg, m, m);
  FiniteAlgebra<S> e = endomorphism_algebra(end, m);
  auto idem = split_idempotent(e, seed);
  if (!idem) return {m};
  Morphism<S> p = combination(end, *idem, m, m);
  Morphism<S> q = identity_morphism(m);
  for (std::size_t v = 0; v < q.size(); ++v) q[v] -= p[v];
  auto left = decompose(alg, image(alg, m, p).module, seed);
  auto right = decompose(alg, image(alg, m, q).module, seed);
  if (left.empty() || right.empty()) throw DecompositionFailure("idempotent split produced a zero summand");
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

template <class S>
bool is_indecomposable(const Algebra<S>& alg, const Representation<S>& m) {
  if (m.is_zero()) return false;
  auto end = hom_space(alg, m, m);
  return !split_idempotent(endomorphism_algebra(end, m), 0).has_value();
}

template <class S>
bool is_isomorphic(const Algebra<S>& alg, const Representation<S>& m, const Representation<S>& n) {
  if (m.dims != n.dims) return false;
  if (m.is_zero()) return true;
  if (hom_dim(alg, m, m) != hom_dim(alg, n, n) || hom_dim(alg, m, n) != hom_dim(alg, n, m)) return false;
  auto dm = decompose(alg, m), dn = decompose(alg, n);
  if (dm.size() != dn.size()) return false;
  if (dm.size() == 1) return iso_indecomposable(alg, m, n);
  std::vector<bool> used(dn.size(), false);
  for (const auto& x : dm) {
    bool found = false;
    for (std::size_t j = 0; j < dn.size() && !found; ++j)
      if (!used[j] && iso_indecomposable(alg, x, dn[j])) {
        used[j] = true;
        found = true;
      }
    if (!found) return false;
  }
  return true;
}

#define TTILT_INSTANTIATE(S)                                                                                        \
  template Representation<S> zero_module<S>(const Algebra<S>&);                                                     \
  template Representation<S> standard_module<S>(const Algebra<S>&, int, Flavor);                                    \
  template Representation<S> projective_sum<S>(const Algebra<S>&, const std::vector<int>&);                         \
  template Representation<S> injective_sum<S>(const Algebra<S>&, const std::vector<int>&);                          \
  template Representation<S> direct_sum<S>(const Representation<S>&, const Representation<S>&);                     \
  template Matrix<S> path_action<S>(const Algebra<S>&, const Representation<S>&, int);                              \
  template bool satisfies_relations<S>(const Algebra<S>&, const Representation<S>&);                                \
  template bool is_morphism<S>(const Algebra<S>&, const Representation<S>&, const Representation<S>&,               \
                               const Morphism<S>&);                                                                 \
  template Morphism<S> compose<S>(const Morphism<S>&, const Morphism<S>&);                                          \
  template Morphism<S> identity_morphism<S>(const Representation<S>&);                                              \
  template Morphism<S> zero_morphism<S>(const Representation<S>&, const Representation<S>&);                        \
  template std::vector<Morphism<S>> hom_space<S>(const Algebra<S>&, const Representation<S>&,                       \
                                                 const Representation<S>&);                                         \
  template int hom_dim<S>(const Algebra<S>&, const Representation<S>&, const Representation<S>&);                   \
  template SubQuotient<S> subrepresentation<S>(const Algebra<S>&, const Representation<S>&,                         \
                                               const std::vector<Matrix<S>>&);                                      \
  template SubQuotient<S> quotient<S>(const Algebra<S>&, const Representation<S>&, const std::vector<Matrix<S>>&);  \
  template SubQuotient<S> kernel<S>(const Algebra<S>&, const Representation<S>&, const Morphism<S>&);               \
  template SubQuotient<S> image<S>(const Algebra<S>&, const Representation<S>&, const Morphism<S>&);                \
  template SubQuotient<S> cokernel<S>(const Algebra<S>&, const Representation<S>&, const Morphism<S>&);             \
  template std::vector<Matrix<S>> radical_rows<S>(const Algebra<S>&, const Representation<S>&);                     \
  template std::vector<int> top_dims<S>(const Algebra<S>&, const Representation<S>&);                               \
  template std::pair<std::vector<int>, Morphism<S>> projective_cover<S>(const Algebra<S>&, const Representation<S>&); \
  template Morphism<S> projmap_to_morphism<S>(const Algebra<S>&, const ProjMap<S>&);                                \
  template Morphism<S> nakayama<S>(const Algebra<S>&, const ProjMap<S>&);                                           \
  template Presentation<S> minimal_projective_presentation<S>(const Algebra<S>&, const Representation<S>&);         \
  template Representation<S> tau<S>(const Algebra<S>&, const Representation<S>&);                                   \
  template int ext1_dim<S>(const Algebra<S>&, const Representation<S>&, const Representation<S>&);                  \
  template int stable_hom_dim<S>(const Algebra<S>&, const Representation<S>&, const Representation<S>&);            \
  template int costable_hom_dim<S>(const Algebra<S>&, const Representation<S>&, const Representation<S>&);          \
  template SubQuotient<S> trace<S>(const Algebra<S>&, const Representation<S>&, const Representation<S>&);          \
  template bool in_fac<S>(const Algebra<S>&, const Representation<S>&, const Representation<S>&);                   \
  template int annihilator_dim<S>(const Algebra<S>&, const Representation<S>&);                                     \
  template bool is_faithful<S>(const Algebra<S>&, const Representation<S>&);                                        \
  template bool is_projective<S>(const Algebra<S>&, const Representation<S>&);                                      \
  template std::vector<Representation<S>> decompose<S>(const Algebra<S>&, const Representation<S>&, std::uint64_t); \
  template bool is_indecomposable<S>(const Algebra<S>&, const Representation<S>&);                                  \
  template bool is_isomorphic<S>(const Algebra<S>&, const Representation<S>&, const Representation<S>&);

TTILT_INSTANTIATE(Rational)
TTILT_INSTANTIATE(Zp)

}  // namespace ttilt
