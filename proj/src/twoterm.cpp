#include "ttilt/twoterm.hpp"

#include <algorithm>
#include <tuple>

#include "ttilt/endo.hpp"

namespace ttilt {
namespace {

template <class S>
ProjMap<S> component(const ChainMap<S>& f, int deg, const std::vector<int>& rows, const std::vector<int>& cols) {
  auto it = f.f.find(deg);
  return it == f.f.end() ? ProjMap<S>(rows, cols) : it->second;
}

template <class S>
Complex<S> trimmed(Complex<S> c) {
  std::size_t a = 0, b = c.terms.size();
  while (a < b && c.terms[a].empty()) ++a;
  while (b > a && c.terms[b - 1].empty()) --b;
  if (a == b) return Complex<S>{};
  Complex<S> r;
  r.lo = c.lo + static_cast<int>(a);
  r.terms.assign(c.terms.begin() + static_cast<std::ptrdiff_t>(a), c.terms.begin() + static_cast<std::ptrdiff_t>(b));
  r.d.assign(c.d.begin() + static_cast<std::ptrdiff_t>(a), c.d.begin() + static_cast<std::ptrdiff_t>(b - 1));
  return r;
}

// Nonzero entries of a map grouped by row and by column.
template <class S>
struct Incidence {
  std::vector<std::vector<std::pair<std::size_t, const Elem<S>*>>> by_row, by_col;
  explicit Incidence(const ProjMap<S>& m) : by_row(m.nrows()), by_col(m.ncols()) {
    for (std::size_t t = 0; t < m.nrows(); ++t)
      for (std::size_t s = 0; s < m.ncols(); ++s) {
        const Elem<S>& x = m.at(t, s);
        if (x.empty()) continue;
        by_row[t].emplace_back(s, &x);
        by_col[s].emplace_back(t, &x);
      }
  }
};

template <class S>
SparseRow<S> merge_terms(std::vector<std::pair<Index, S>> v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseRow<S> out;
  for (auto& e : v) {
    if (!out.empty() && out.back().first == e.first) {
      out.back().second += e.second;
      if (out.back().second.is_zero()) out.pop_back();
    } else if (!e.second.is_zero()) {
      out.push_back(std::move(e));
    }
  }
  return out;
}

// Projective summand of a term cut out by an idempotent endomorphism e.
template <class S>
struct Split {
  std::vector<int> terms;
  ProjMap<S> iota;  // summand → term
  ProjMap<S> pi;    // term → summand
};

template <class S>
Split<S> split_term(const Algebra<S>& alg, const std::vector<int>& term, const ProjMap<S>& e) {
  Split<S> sp;
  Matrix<S> top = top_part(alg, e);
  Echelon<S> cols = rref<S>(top);
  std::vector<std::size_t> sel;
  for (Index p : cols.pivots) sel.push_back(static_cast<std::size_t>(p));
  std::vector<std::size_t> all(term.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  if (sel.empty()) {
    sp.iota = ProjMap<S>(term, {});
    sp.pi = ProjMap<S>({}, term);
    return sp;
  }
  Matrix<S> topsel(top.rows(), static_cast<Index>(sel.size()));
  for (std::size_t j = 0; j < sel.size(); ++j) topsel.col(static_cast<Index>(j)) = top.col(static_cast<Index>(sel[j]));
  Echelon<S> rows = rref<S>(Matrix<S>(topsel.transpose()));
  std::vector<std::size_t> rsel;
  for (Index p : rows.pivots) rsel.push_back(static_cast<std::size_t>(p));
  for (std::size_t s : sel) sp.terms.push_back(term[s]);
  sp.iota = restrict_map(e, all, sel);
  ProjMap<S> inv = invert_projmap(alg, restrict_map(e, rsel, sel));
  std::vector<int> rv;
  for (std::size_t r : rsel) rv.push_back(term[r]);
  ProjMap<S> proj(rv, term);
  for (std::size_t i = 0; i < rsel.size(); ++i) proj.at(i, rsel[i]) = alg.unit(term[rsel[i]]);
  sp.pi = compose(alg, compose(alg, inv, proj), e);
  return sp;
}

template <class S>
Complex<S> summand(const Algebra<S>& alg, const Complex<S>& c, const ChainMap<S>& e) {
  std::vector<Split<S>> parts;
  Complex<S> y;
  y.lo = c.lo;
  for (int deg = c.lo; deg <= c.hi(); ++deg) {
    const auto& t = c.at(deg);
    parts.push_back(split_term(alg, t, component(e, deg, t, t)));
    y.terms.push_back(parts.back().terms);
  }
  for (std::size_t k = 0; k + 1 < parts.size(); ++k)
    y.d.push_back(compose(alg, compose(alg, parts[k + 1].pi, c.d[k]), parts[k].iota));
  return trimmed(std::move(y));
}

template <class S>
FiniteAlgebra<S> end_algebra(const Algebra<S>& alg, const Complex<S>& c, const HomK<S>& end) {
  FiniteAlgebra<S> e;
  e.dim = end.dim();
  for (int i = 0; i < e.dim; ++i)
    for (int j = 0; j < e.dim; ++j)
      e.table.push_back(end.coords(compose(alg, end.basis()[static_cast<std::size_t>(i)], end.basis()[static_cast<std::size_t>(j)])));
  e.one = end.coords(identity_chain_map(alg, c));
  return e;
}

// Radical of a local End_K(T) as chain maps.
template <class S>
std::vector<ChainMap<S>> radical_maps(const Algebra<S>& alg, const Complex<S>& t, const HomK<S>& end) {
  std::vector<ChainMap<S>> out;
  if (end.dim() <= 1) return out;
  Matrix<S> g = trace_form(end_algebra(alg, t, end));
  Matrix<S> k = kernel_basis<S>(g);
  for (Index j = 0; j < k.cols(); ++j) out.push_back(end.combination(k.col(j)));
  return out;
}

template <class S>
bool same_shape(const Algebra<S>& alg, const Complex<S>& x, const Complex<S>& y) {
  if (x.is_zero() || y.is_zero()) return x.is_zero() && y.is_zero();
  if (x.lo != y.lo || x.hi() != y.hi()) return false;
  for (int deg = x.lo; deg <= x.hi(); ++deg)
    if (collect(x.at(deg), alg.n()) != collect(y.at(deg), alg.n())) return false;
  return true;
}

template <class S>
bool iso_indecomposable(const Algebra<S>& alg, const Complex<S>& x, const Complex<S>& y) {
  if (!same_shape(alg, x, y)) return false;
  if (x.is_zero()) return true;
  HomK<S> xy(alg, x, y), yx(alg, y, x);
  if (xy.dim() == 0 || yx.dim() == 0) return false;
  HomK<S> end(alg, x, x);
  if (end.dim() == 1) {
    for (const auto& f : xy.basis())
      for (const auto& g : yx.basis())
        if (!end.is_null_homotopic(compose(alg, g, f))) return true;
    return false;
  }
  Matrix<S> gram = trace_form(end_algebra(alg, x, end));
  for (const auto& f : xy.basis())
    for (const auto& g : yx.basis())
      if (outside_radical(gram, end.coords(compose(alg, g, f)))) return true;
  return false;
}

// Direct sum of copies of the T_j with the maps stacked as rows (left) or
// columns (right) of the approximation.
template <class S>
Approximation<S> assemble(const Algebra<S>& alg, const Complex<S>& x, const std::vector<Complex<S>>& t,
                          const std::vector<std::vector<ChainMap<S>>>& chosen, bool left) {
  Approximation<S> ap;
  Complex<S> obj;
  std::vector<const Complex<S>*> copies;
  std::vector<const ChainMap<S>*> maps;
  for (std::size_t j = 0; j < t.size(); ++j) {
    ap.mult.push_back(static_cast<int>(chosen[j].size()));
    for (const auto& f : chosen[j]) {
      obj = obj.terms.empty() ? t[j] : direct_sum(obj, t[j]);
      copies.push_back(&t[j]);
      maps.push_back(&f);
    }
  }
  ap.object = obj;
  int lo = std::min(x.lo, obj.terms.empty() ? x.lo : obj.lo);
  int hi = std::max(x.hi(), obj.terms.empty() ? x.hi() : obj.hi());
  for (int deg = lo; deg <= hi; ++deg) {
    const auto& xt = x.at(deg);
    const auto& ot = obj.at(deg);
    if (xt.empty() || ot.empty()) continue;
    ProjMap<S> m = left ? ProjMap<S>(ot, xt) : ProjMap<S>(xt, ot);
    std::size_t off = 0;
    for (std::size_t c = 0; c < copies.size(); ++c) {
      const auto& ct = copies[c]->at(deg);
      if (ct.empty()) continue;
      ProjMap<S> piece = left ? component(*maps[c], deg, ct, xt) : component(*maps[c], deg, xt, ct);
      for (std::size_t a = 0; a < piece.nrows(); ++a)
        for (std::size_t b = 0; b < piece.ncols(); ++b) {
          if (left)
            m.at(off + a, b) = piece.at(a, b);
          else
            m.at(a, off + b) = piece.at(a, b);
        }
      off += ct.size();
    }
    ap.map.f[deg] = std::move(m);
  }
  (void)alg;
  return ap;
}

template <class S>
std::vector<ChainMap<S>> complement_basis(const HomK<S>& h, const std::vector<ChainMap<S>>& w) {
  SparseEchelon<S> ech(h.unknowns());
  for (const auto& b : h.boundaries()) ech.add(b);
  for (const auto& f : w) ech.add(h.vectorize(f));
  std::vector<ChainMap<S>> out;
  for (const auto& f : h.basis())
    if (ech.add(h.vectorize(f))) out.push_back(f);
  return out;
}

}  // namespace

template <class S>
Complex<S> shift(const Complex<S>& x, int s) {
  Complex<S> y = x;
  y.lo = x.lo - s;
  if (s % 2 != 0)
    for (auto& m : y.d) m = scale(m, S(-1));
  return y;
}

template <class S>
Complex<S> direct_sum(const Complex<S>& x, const Complex<S>& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  Complex<S> z;
  z.lo = std::min(x.lo, y.lo);
  int hi = std::max(x.hi(), y.hi());
  for (int deg = z.lo; deg <= hi; ++deg) {
    std::vector<int> t = x.at(deg);
    t.insert(t.end(), y.at(deg).begin(), y.at(deg).end());
    z.terms.push_back(std::move(t));
  }
  for (int deg = z.lo; deg < hi; ++deg) {
    ProjMap<S> dx = x.diff(deg), dy = y.diff(deg);
    z.d.push_back(block_map(dx, ProjMap<S>(dx.rows, dy.cols), ProjMap<S>(dy.rows, dx.cols), dy));
  }
  return z;
}

template <class S>
ChainMap<S> identity_chain_map(const Algebra<S>& alg, const Complex<S>& x) {
  ChainMap<S> f;
  for (int deg = x.lo; deg <= x.hi(); ++deg)
    if (!x.at(deg).empty()) f.f[deg] = identity_projmap(alg, x.at(deg));
  return f;
}

template <class S>
ChainMap<S> compose(const Algebra<S>& alg, const ChainMap<S>& g, const ChainMap<S>& f) {
  ChainMap<S> h;
  for (const auto& [deg, fm] : f.f) {
    auto it = g.f.find(deg);
    if (it != g.f.end()) h.f[deg] = compose(alg, it->second, fm);
  }
  return h;
}

template <class S>
ChainMap<S> add(const ChainMap<S>& a, const ChainMap<S>& b, const S& c) {
  ChainMap<S> r = a;
  for (const auto& [deg, bm] : b.f) {
    auto it = r.f.find(deg);
    if (it == r.f.end())
      r.f[deg] = scale(bm, c);
    else
      it->second = add(it->second, bm, c);
  }
  return r;
}

template <class S>
bool is_chain_map(const Algebra<S>& alg, const Complex<S>& x, const Complex<S>& y, const ChainMap<S>& f) {
  int lo = std::min(x.lo, y.lo) - 1, hi = std::max(x.hi(), y.hi());
  for (int deg = lo; deg <= hi; ++deg) {
    ProjMap<S> a = compose(alg, y.diff(deg), component(f, deg, y.at(deg), x.at(deg)));
    ProjMap<S> b = compose(alg, component(f, deg + 1, y.at(deg + 1), x.at(deg + 1)), x.diff(deg));
    if (!add(a, b, S(-1)).is_zero()) return false;
  }
  return true;
}

template <class S>
HomK<S>::HomK(const Algebra<S>& alg, const Complex<S>& x, const Complex<S>& y) : alg_(&alg), pos_(block_positions(alg)) {
  // Unknowns: entries of f^deg : X^deg → Y^deg, one per basis path.
  for (int deg = x.lo; deg <= x.hi(); ++deg) {
    const auto& rows = y.at(deg);
    const auto& cols = x.at(deg);
    if (rows.empty() || cols.empty()) continue;
    Block b{deg, rows, cols, nvars_, {}};
    Index off = nvars_;
    for (int r : rows)
      for (int c : cols) {
        b.entry_off.push_back(off);
        off += static_cast<Index>(alg.between(r, c).size());
      }
    b.entry_off.push_back(off);
    nvars_ = off;
    blocks_.push_back(std::move(b));
  }
  auto var = [&](const Block& b, std::size_t t, std::size_t u, int path) {
    return b.entry_off[t * b.cols.size() + u] + pos_[static_cast<std::size_t>(path)];
  };

  // Chain condition d_Y f^deg − f^{deg+1} d_X = 0, one equation per entry and path.
  std::vector<std::tuple<Index, Index, S>> trip;
  Index neq = 0;
  for (int deg = x.lo; deg <= x.hi(); ++deg) {
    const auto& src = x.at(deg);
    const auto& tgt = y.at(deg + 1);
    if (src.empty() || tgt.empty()) continue;
    std::vector<Index> eq_off;
    for (int r : tgt)
      for (int c : src) {
        eq_off.push_back(neq);
        neq += static_cast<Index>(alg.between(r, c).size());
      }
    auto eq = [&](std::size_t t, std::size_t u, int path) {
      return eq_off[t * src.size() + u] + pos_[static_cast<std::size_t>(path)];
    };
    if (const Block* b = block(deg)) {
      ProjMap<S> dym = y.diff(deg);
      Incidence<S> dy(dym);
      for (std::size_t w = 0; w < b->rows.size(); ++w)
        for (std::size_t u = 0; u < src.size(); ++u)
          for (int p : alg.between(b->rows[w], src[u])) {
            Index v = var(*b, w, u, p);
            for (const auto& [t, dyx] : dy.by_col[w])
              for (const auto& [q, c] : alg.multiply(*dyx, alg.unit(p))) trip.emplace_back(eq(t, u, q), v, c);
          }
    }
    if (const Block* b = block(deg + 1)) {
      ProjMap<S> dxm = x.diff(deg);
      Incidence<S> dx(dxm);
      for (std::size_t t = 0; t < tgt.size(); ++t)
        for (std::size_t w = 0; w < b->cols.size(); ++w)
          for (int p : alg.between(tgt[t], b->cols[w])) {
            Index v = var(*b, t, w, p);
            for (const auto& [u, dxx] : dx.by_row[w])
              for (const auto& [q, c] : alg.multiply(alg.unit(p), *dxx)) trip.emplace_back(eq(t, u, q), v, -c);
          }
    }
  }
  std::sort(trip.begin(), trip.end(), [](const auto& a, const auto& b) {
    return std::get<0>(a) != std::get<0>(b) ? std::get<0>(a) < std::get<0>(b) : std::get<1>(a) < std::get<1>(b);
  });
  SparseEchelon<S> chain(nvars_);
  for (std::size_t i = 0; i < trip.size();) {
    std::size_t j = i;
    std::vector<std::pair<Index, S>> row;
    while (j < trip.size() && std::get<0>(trip[j]) == std::get<0>(trip[i])) {
      row.emplace_back(std::get<1>(trip[j]), std::get<2>(trip[j]));
      ++j;
    }
    SparseRow<S> r = merge_terms<S>(std::move(row));
    if (!r.empty()) chain.add(std::move(r));
    i = j;
  }

  // Null-homotopic maps f^deg = d_Y h^deg + h^{deg+1} d_X with h^deg : X^deg → Y^{deg−1}.
  SparseEchelon<S> quot(nvars_);
  for (int deg = x.lo; deg <= x.hi(); ++deg) {
    const auto& src = x.at(deg);
    const auto& tgt = y.at(deg - 1);
    if (src.empty() || tgt.empty()) continue;
    ProjMap<S> dym = y.diff(deg - 1), dxm = x.diff(deg - 1);
    Incidence<S> dy(dym), dx(dxm);
    const Block* here = block(deg);
    const Block* below = block(deg - 1);
    for (std::size_t t = 0; t < tgt.size(); ++t)
      for (std::size_t u = 0; u < src.size(); ++u)
        for (int p : alg.between(tgt[t], src[u])) {
          std::vector<std::pair<Index, S>> vec;
          if (here)
            for (const auto& [t2, dyx] : dy.by_col[t])
              for (const auto& [q, c] : alg.multiply(*dyx, alg.unit(p))) vec.emplace_back(var(*here, t2, u, q), c);
          if (below)
            for (const auto& [u2, dxx] : dx.by_row[u])
              for (const auto& [q, c] : alg.multiply(alg.unit(p), *dxx)) vec.emplace_back(var(*below, t, u2, q), c);
          SparseRow<S> r = merge_terms<S>(std::move(vec));
          if (!r.empty() && quot.add(r)) boundaries_.push_back(std::move(r));
        }
  }
  for (SparseRow<S>& z : chain.kernel()) {
    if (!quot.add(z)) continue;
    basis_vecs_.push_back(z);
    ChainMap<S> f;
    for (const Block& b : blocks_) f.f[b.deg] = ProjMap<S>(b.rows, b.cols);
    for (const auto& [idx, c] : z) {
      auto bi = std::upper_bound(blocks_.begin(), blocks_.end(), idx, [](Index i, const Block& b) { return i < b.offset; }) - 1;
      auto ei = std::upper_bound(bi->entry_off.begin(), bi->entry_off.end(), idx) - bi->entry_off.begin() - 1;
      std::size_t t = static_cast<std::size_t>(ei) / bi->cols.size(), u = static_cast<std::size_t>(ei) % bi->cols.size();
      int path = alg.between(bi->rows[t], bi->cols[u])[static_cast<std::size_t>(idx - bi->entry_off[static_cast<std::size_t>(ei)])];
      Elem<S>& e = f.f[bi->deg].at(t, u);
      e.emplace_back(path, c);
    }
    for (auto& [deg, m] : f.f)
      for (auto& e : m.entries) std::sort(e.begin(), e.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    basis_.push_back(std::move(f));
  }
}

template <class S>
const typename HomK<S>::Block* HomK<S>::block(int deg) const {
  for (const Block& b : blocks_)
    if (b.deg == deg) return &b;
  return nullptr;
}

template <class S>
SparseRow<S> HomK<S>::vectorize(const ChainMap<S>& f) const {
  std::vector<std::pair<Index, S>> v;
  for (const Block& b : blocks_) {
    auto it = f.f.find(b.deg);
    if (it == f.f.end()) continue;
    const ProjMap<S>& m = it->second;
    for (std::size_t t = 0; t < b.rows.size(); ++t)
      for (std::size_t u = 0; u < b.cols.size(); ++u)
        for (const auto& [p, c] : m.at(t, u)) v.emplace_back(b.entry_off[t * b.cols.size() + u] + pos_[static_cast<std::size_t>(p)], c);
  }
  return merge_terms<S>(std::move(v));
}

template <class S>
Vector<S> HomK<S>::coords(const ChainMap<S>& f) const {
  if (!coords_) {
    std::vector<SparseRow<S>> fam = boundaries_;
    fam.insert(fam.end(), basis_vecs_.begin(), basis_vecs_.end());
    coords_ = std::make_shared<SpanCoords<S>>(nvars_, fam);
  }
  auto c = coords_->coords(vectorize(f));
  if (!c) throw InvariantViolation("not a chain map between the given complexes");
  return c->tail(dim());
}

template <class S>
bool HomK<S>::is_null_homotopic(const ChainMap<S>& f) const {
  Vector<S> c = coords(f);
  for (Index i = 0; i < c.size(); ++i)
    if (!c(i).is_zero()) return false;
  return true;
}

template <class S>
ChainMap<S> HomK<S>::combination(const Vector<S>& c) const {
  ChainMap<S> f;
  for (const Block& b : blocks_) f.f[b.deg] = ProjMap<S>(b.rows, b.cols);
  for (int i = 0; i < dim(); ++i)
    if (!c(i).is_zero()) f = add(f, basis_[static_cast<std::size_t>(i)], c(i));
  return f;
}

template <class S>
int hom_homotopy_dim(const Algebra<S>& alg, const Complex<S>& x, const Complex<S>& y, int s) {
  return HomK<S>(alg, x, shift(y, s)).dim();
}

template <class S>
Complex<S> cone(const Algebra<S>& alg, const Complex<S>& x, const Complex<S>& y, const ChainMap<S>& f) {
  (void)alg;
  if (x.is_zero()) return y;
  if (y.is_zero()) return shift(x, 1);
  Complex<S> c;
  c.lo = std::min(x.lo - 1, y.lo);
  int hi = std::max(x.hi() - 1, y.hi());
  for (int k = c.lo; k <= hi; ++k) {
    std::vector<int> t = x.at(k + 1);
    t.insert(t.end(), y.at(k).begin(), y.at(k).end());
    c.terms.push_back(std::move(t));
  }
  for (int k = c.lo; k < hi; ++k) {
    ProjMap<S> dx = scale(x.diff(k + 1), S(-1));
    ProjMap<S> dy = y.diff(k);
    ProjMap<S> fk = component(f, k + 1, y.at(k + 1), x.at(k + 1));
    c.d.push_back(block_map(dx, ProjMap<S>(dx.rows, dy.cols), fk, dy));
  }
  return trimmed(std::move(c));
}

template <class S>
Complex<S> cocone(const Algebra<S>& alg, const Complex<S>& x, const Complex<S>& y, const ChainMap<S>& f) {
  return shift(cone(alg, x, y, f), -1);
}

template <class S>
Complex<S> strip_contractible(const Algebra<S>& alg, const Complex<S>& input) {
  Complex<S> c = input;
  const std::size_t nt = c.terms.size();
  std::vector<std::vector<char>> alive(nt);
  for (std::size_t k = 0; k < nt; ++k) alive[k].assign(c.terms[k].size(), 1);
  for (;;) {
    // Markowitz choice among unit entries of all differentials.
    std::size_t bk = 0, bt = 0, bs = 0;
    long best = -1;
    for (std::size_t k = 0; k + 1 < nt; ++k) {
      const ProjMap<S>& m = c.d[k];
      std::vector<long> rn(m.nrows(), 0), cn(m.ncols(), 0);
      bool any = false;
      for (std::size_t t = 0; t < m.nrows(); ++t) {
        if (!alive[k + 1][t]) continue;
        for (std::size_t s = 0; s < m.ncols(); ++s)
          if (alive[k][s] && !m.at(t, s).empty()) {
            ++rn[t];
            ++cn[s];
            if (m.rows[t] == m.cols[s]) any = true;
          }
      }
      if (!any) continue;
      for (std::size_t t = 0; t < m.nrows(); ++t) {
        if (!alive[k + 1][t]) continue;
        for (std::size_t s = 0; s < m.ncols(); ++s) {
          if (!alive[k][s] || m.rows[t] != m.cols[s] || m.at(t, s).empty()) continue;
          if (unit_part(alg, m.at(t, s), m.rows[t]).is_zero()) continue;
          long cost = (rn[t] - 1) * (cn[s] - 1);
          if (best < 0 || cost < best) {
            best = cost;
            bk = k;
            bt = t;
            bs = s;
          }
        }
      }
    }
    if (best < 0) break;
    ProjMap<S>& m = c.d[bk];
    Elem<S> phi_inv = invert_local(alg, m.at(bt, bs), m.rows[bt]);
    std::vector<std::size_t> srcs;
    for (std::size_t s = 0; s < m.ncols(); ++s)
      if (s != bs && alive[bk][s] && !m.at(bt, s).empty()) srcs.push_back(s);
    for (std::size_t t = 0; t < m.nrows(); ++t) {
      if (t == bt || !alive[bk + 1][t] || m.at(t, bs).empty()) continue;
      Elem<S> g = alg.multiply(m.at(t, bs), phi_inv);
      for (std::size_t s : srcs) m.at(t, s) = add(m.at(t, s), alg.multiply(g, m.at(bt, s)), S(-1));
    }
    alive[bk][bs] = 0;
    alive[bk + 1][bt] = 0;
  }
  std::vector<std::vector<std::size_t>> keep(nt);
  Complex<S> r;
  r.lo = c.lo;
  for (std::size_t k = 0; k < nt; ++k) {
    std::vector<int> t;
    for (std::size_t i = 0; i < alive[k].size(); ++i)
      if (alive[k][i]) {
        keep[k].push_back(i);
        t.push_back(c.terms[k][i]);
      }
    r.terms.push_back(std::move(t));
  }
  for (std::size_t k = 0; k + 1 < nt; ++k) r.d.push_back(restrict_map(c.d[k], keep[k + 1], keep[k]));
  return trimmed(std::move(r));
}

template <class S>
std::vector<Complex<S>> decompose_complex(const Algebra<S>& alg, const Complex<S>& input, std::uint64_t seed) {
  Complex<S> c = strip_contractible(alg, input);
  if (c.is_zero()) return {};
  HomK<S> end(alg, c, c);
  if (end.dim() == 1) return {c};
  auto idem = split_idempotent(end_algebra(alg, c, end), seed);
  if (!idem) return {c};
  // Lift the idempotent of End_K to an idempotent chain map.
  ChainMap<S> e = end.combination(*idem);
  for (int it = 0;; ++it) {
    if (it == 64) throw DecompositionFailure("idempotent lifting did not converge");
    ChainMap<S> e2 = compose(alg, e, e);
    if (end.vectorize(add(e2, e, S(-1))).empty()) break;
    e = add(add(ChainMap<S>{}, e2, S(3)), compose(alg, e2, e), S(-2));
  }
  ChainMap<S> f = add(identity_chain_map(alg, c), e, S(-1));
  auto left = decompose_complex(alg, summand(alg, c, e), seed);
  auto right = decompose_complex(alg, summand(alg, c, f), seed);
  if (left.empty() || right.empty()) throw DecompositionFailure("idempotent split produced a zero summand");
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

template <class S>
bool is_indecomposable_complex(const Algebra<S>& alg, const Complex<S>& c) {
  return decompose_complex(alg, c).size() == 1;
}

template <class S>
bool is_isomorphic(const Algebra<S>& alg, const Complex<S>& x, const Complex<S>& y) {
  Complex<S> a = strip_contractible(alg, x), b = strip_contractible(alg, y);
  if (!same_shape(alg, a, b)) return false;
  if (a.is_zero()) return true;
  auto da = decompose_complex(alg, a), db = decompose_complex(alg, b);
  if (da.size() != db.size()) return false;
  std::vector<bool> used(db.size(), false);
  for (const auto& p : da) {
    bool found = false;
    for (std::size_t j = 0; j < db.size() && !found; ++j)
      if (!used[j] && iso_indecomposable(alg, p, db[j])) used[j] = found = true;
    if (!found) return false;
  }
  return true;
}

template <class S>
Approximation<S> minimal_left_approximation(const Algebra<S>& alg, const Complex<S>& x,
                                            const std::vector<Complex<S>>& t) {
  std::vector<HomK<S>> out;
  for (const auto& tj : t) out.emplace_back(alg, x, tj);
  std::vector<std::vector<ChainMap<S>>> chosen(t.size());
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (out[j].dim() == 0) continue;
    std::vector<ChainMap<S>> w;
    for (std::size_t k = 0; k < t.size(); ++k) {
      if (out[k].dim() == 0) continue;
      std::vector<ChainMap<S>> rs;
      if (k == j) {
        rs = radical_maps(alg, t[j], HomK<S>(alg, t[j], t[j]));
      } else {
        rs = HomK<S>(alg, t[k], t[j]).basis();
      }
      for (const auto& r : rs)
        for (const auto& f : out[k].basis()) w.push_back(compose(alg, r, f));
    }
    chosen[j] = complement_basis(out[j], w);
  }
  return assemble(alg, x, t, chosen, true);
}

template <class S>
Approximation<S> minimal_right_approximation(const Algebra<S>& alg, const Complex<S>& x,
                                             const std::vector<Complex<S>>& t) {
  std::vector<HomK<S>> in;
  for (const auto& tj : t) in.emplace_back(alg, tj, x);
  std::vector<std::vector<ChainMap<S>>> chosen(t.size());
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (in[j].dim() == 0) continue;
    std::vector<ChainMap<S>> w;
    for (std::size_t k = 0; k < t.size(); ++k) {
      if (in[k].dim() == 0) continue;
      std::vector<ChainMap<S>> rs;
      if (k == j) {
        rs = radical_maps(alg, t[j], HomK<S>(alg, t[j], t[j]));
      } else {
        rs = HomK<S>(alg, t[j], t[k]).basis();
      }
      for (const auto& r : rs)
        for (const auto& g : in[k].basis()) w.push_back(compose(alg, g, r));
    }
    chosen[j] = complement_basis(in[j], w);
  }
  return assemble(alg, x, t, chosen, false);
}

template <class S>
Complex<S> cone_two_term(const Algebra<S>& alg, const Complex<S>& t, const ChainMap<S>& f) {
  std::vector<int> all(static_cast<std::size_t>(alg.n()));
  for (int v = 0; v < alg.n(); ++v) all[static_cast<std::size_t>(v)] = v;
  return strip_contractible(alg, cone(alg, stalk<S>(all, 0), t, f));
}

template <class S>
std::vector<int> g_vector(const Algebra<S>& alg, const Complex<S>& c) {
  std::vector<int> g(static_cast<std::size_t>(alg.n()), 0);
  for (int deg = c.lo; deg <= c.hi(); ++deg)
    for (int v : c.at(deg)) g[static_cast<std::size_t>(v)] += (deg % 2 == 0) ? 1 : -1;
  return g;
}

template <class S>
std::vector<std::vector<int>> g_matrix(const Algebra<S>& alg, const std::vector<Complex<S>>& cs) {
  std::vector<std::vector<int>> m;
  for (const auto& c : cs) m.push_back(g_vector(alg, c));
  return m;
}

template <class S>
Complex<S> pair_to_complex(const Algebra<S>& alg, const Representation<S>& m, const ProjectivePart& p) {
  std::vector<int> p1, p0;
  ProjMap<S> f;
  if (!m.is_zero()) {
    Presentation<S> pres = minimal_projective_presentation(alg, m);
    p1 = pres.p1;
    p0 = pres.p0;
    f = pres.f;
  }
  std::vector<int> q = expand(p);
  std::vector<int> deg1 = p1;
  deg1.insert(deg1.end(), q.begin(), q.end());
  ProjMap<S> d(p0, deg1);
  for (std::size_t t = 0; t < p0.size(); ++t)
    for (std::size_t s = 0; s < p1.size(); ++s) d.at(t, s) = f.at(t, s);
  return trimmed(two_term<S>(deg1, p0, d));
}

template <class S>
std::pair<Representation<S>, ProjectivePart> complex_to_pair(const Algebra<S>& alg, const Complex<S>& t) {
  Complex<S> c = strip_contractible(alg, t);
  if (!c.is_two_term()) throw DomainError("complex is not two-term");
  ProjectivePart q(static_cast<std::size_t>(alg.n()), 0);
  for (const auto& part : decompose_complex(alg, c))
    if (part.at(0).empty())
      for (int v : part.at(-1)) ++q[static_cast<std::size_t>(v)];
  const auto& p0 = c.at(0);
  if (p0.empty()) return {zero_module(alg), q};
  Representation<S> proj = projective_sum(alg, p0);
  Morphism<S> d = projmap_to_morphism(alg, c.diff(-1));
  return {cokernel(alg, proj, d).module, q};
}

template <class S>
bool is_presilting(const Algebra<S>& alg, const Complex<S>& t) {
  return hom_homotopy_dim(alg, t, t, 1) == 0;
}

template <class S>
bool is_two_term_silting(const Algebra<S>& alg, const Complex<S>& t) {
  Complex<S> c = strip_contractible(alg, t);
  if (!c.is_two_term() || !is_presilting(alg, c)) return false;
  std::vector<Complex<S>> distinct;
  for (const auto& p : decompose_complex(alg, c)) {
    bool seen = false;
    for (const auto& q : distinct) seen = seen || iso_indecomposable(alg, p, q);
    if (!seen) distinct.push_back(p);
  }
  return static_cast<int>(distinct.size()) == alg.n();
}

#define TTILT_INSTANTIATE(S)                                                                                       \
  template Complex<S> shift<S>(const Complex<S>&, int);                                                            \
  template Complex<S> direct_sum<S>(const Complex<S>&, const Complex<S>&);                                         \
  template ChainMap<S> identity_chain_map<S>(const Algebra<S>&, const Complex<S>&);                                \
  template ChainMap<S> compose<S>(const Algebra<S>&, const ChainMap<S>&, const ChainMap<S>&);                      \
  template ChainMap<S> add<S>(const ChainMap<S>&, const ChainMap<S>&, const S&);                                   \
  template bool is_chain_map<S>(const Algebra<S>&, const Complex<S>&, const Complex<S>&, const ChainMap<S>&);      \
  template class HomK<S>;                                                                                          \
  template int hom_homotopy_dim<S>(const Algebra<S>&, const Complex<S>&, const Complex<S>&, int);                  \
  template Complex<S> cone<S>(const Algebra<S>&, const Complex<S>&, const Complex<S>&, const ChainMap<S>&);        \
  template Complex<S> cocone<S>(const Algebra<S>&, const Complex<S>&, const Complex<S>&, const ChainMap<S>&);      \
  template Complex<S> strip_contractible<S>(const Algebra<S>&, const Complex<S>&);                                 \
  template std::vector<Complex<S>> decompose_complex<S>(const Algebra<S>&, const Complex<S>&, std::uint64_t);      \
  template bool is_indecomposable_complex<S>(const Algebra<S>&, const Complex<S>&);                                \
  template bool is_isomorphic<S>(const Algebra<S>&, const Complex<S>&, const Complex<S>&);                         \
  template Approximation<S> minimal_left_approximation<S>(const Algebra<S>&, const Complex<S>&,                    \
                                                          const std::vector<Complex<S>>&);                         \
  template Approximation<S> minimal_right_approximation<S>(const Algebra<S>&, const Complex<S>&,                   \
                                                           const std::vector<Complex<S>>&);                        \
  template Complex<S> cone_two_term<S>(const Algebra<S>&, const Complex<S>&, const ChainMap<S>&);                  \
  template std::vector<int> g_vector<S>(const Algebra<S>&, const Complex<S>&);                                     \
  template std::vector<std::vector<int>> g_matrix<S>(const Algebra<S>&, const std::vector<Complex<S>>&);           \
  template Complex<S> pair_to_complex<S>(const Algebra<S>&, const Representation<S>&, const ProjectivePart&);      \
  template std::pair<Representation<S>, ProjectivePart> complex_to_pair<S>(const Algebra<S>&, const Complex<S>&);  \
  template bool is_presilting<S>(const Algebra<S>&, const Complex<S>&);                                            \
  template bool is_two_term_silting<S>(const Algebra<S>&, const Complex<S>&);

TTILT_INSTANTIATE(Rational)
TTILT_INSTANTIATE(Zp)

}  // namespace ttilt
