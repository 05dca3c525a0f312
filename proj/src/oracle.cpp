#include "ttilt/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

#include "ttilt/errors.hpp"
#include "ttilt/zp.hpp"

namespace ttilt {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

struct Field {
  u64 p;
  u32 add(u32 a, u32 b) const { return static_cast<u32>((u64(a) + b) % p); }
  u32 sub(u32 a, u32 b) const { return static_cast<u32>((u64(a) + p - b) % p); }
  u32 mul(u32 a, u32 b) const { return static_cast<u32>((u64(a) * b) % p); }
  u32 inv(u32 a) const {
    u64 r = 1, b = a, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return static_cast<u32>(r);
  }
};

struct Mat {
  int r = 0, c = 0;
  std::vector<u32> a;
  Mat() = default;
  Mat(int rows, int cols) : r(rows), c(cols), a(static_cast<std::size_t>(rows * cols), 0) {}
  u32& operator()(int i, int j) { return a[static_cast<std::size_t>(i * c + j)]; }
  u32 operator()(int i, int j) const { return a[static_cast<std::size_t>(i * c + j)]; }
  bool is_zero() const {
    return std::all_of(a.begin(), a.end(), [](u32 x) { return x == 0; });
  }
};

Mat identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat mul(const Field& f, const Mat& x, const Mat& y) {
  Mat z(x.r, y.c);
  for (int i = 0; i < x.r; ++i)
    for (int k = 0; k < x.c; ++k) {
      u32 v = x(i, k);
      if (!v) continue;
      for (int j = 0; j < y.c; ++j) z(i, j) = f.add(z(i, j), f.mul(v, y(k, j)));
    }
  return z;
}

// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> rref(const Field& f, Mat& m) {
  std::vector<int> piv;
  int row = 0;
  for (int col = 0; col < m.c && row < m.r; ++col) {
    int p = row;
    while (p < m.r && m(p, col) == 0) ++p;
    if (p == m.r) continue;
    for (int j = 0; j < m.c; ++j) std::swap(m(p, j), m(row, j));
    u32 s = f.inv(m(row, col));
    for (int j = 0; j < m.c; ++j) m(row, j) = f.mul(m(row, j), s);
    for (int i = 0; i < m.r; ++i) {
      if (i == row || m(i, col) == 0) continue;
      u32 t = m(i, col);
      for (int j = 0; j < m.c; ++j) m(i, j) = f.sub(m(i, j), f.mul(t, m(row, j)));
    }
    piv.push_back(col);
    ++row;
  }
  return piv;
}

int rank(const Field& f, Mat m) { return static_cast<int>(rref(f, m).size()); }

// Basis (as rows) of {x : m x = 0}.
Mat nullspace(const Field& f, Mat m) {
  std::vector<int> piv = rref(f, m);
  std::vector<bool> is_piv(static_cast<std::size_t>(m.c), false);
  for (int c : piv) is_piv[static_cast<std::size_t>(c)] = true;
  Mat out(m.c - static_cast<int>(piv.size()), m.c);
  int k = 0;
  for (int free = 0; free < m.c; ++free) {
    if (is_piv[static_cast<std::size_t>(free)]) continue;
    out(k, free) = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) out(k, piv[i]) = f.sub(0, m(static_cast<int>(i), free));
    ++k;
  }
  return out;
}

Mat transpose(const Mat& m) {
  Mat t(m.c, m.r);
  for (int i = 0; i < m.r; ++i)
    for (int j = 0; j < m.c; ++j) t(j, i) = m(i, j);
  return t;
}

// Rows x with x m = 0.
Mat left_nullspace(const Field& f, const Mat& m) { return nullspace(f, transpose(m)); }

// X with X k = y, k of full row rank.
Mat solve_left(const Field& f, const Mat& k, const Mat& y) {
  // Augment kᵀ | yᵀ and reduce.
  Mat aug(k.c, k.r + y.r);
  for (int i = 0; i < k.c; ++i) {
    for (int j = 0; j < k.r; ++j) aug(i, j) = k(j, i);
    for (int j = 0; j < y.r; ++j) aug(i, k.r + j) = y(j, i);
  }
  std::vector<int> piv = rref(f, aug);
  if (!piv.empty() && piv.back() >= k.r) throw InvariantViolation("oracle: subspace not closed under arrows");
  Mat x(y.r, k.r);
  for (std::size_t i = 0; i < piv.size(); ++i)
    for (int j = 0; j < y.r; ++j) x(j, piv[i]) = aug(static_cast<int>(i), k.r + j);
  return x;
}

Mat stack(const Mat& a, const Mat& b) {
  if (a.r == 0) return b;
  if (b.r == 0) return a;
  Mat s(a.r + b.r, a.c);
  std::copy(a.a.begin(), a.a.end(), s.a.begin());
  std::copy(b.a.begin(), b.a.end(), s.a.begin() + static_cast<std::ptrdiff_t>(a.a.size()));
  return s;
}

// Working representation: arrow matrices with the row-vector convention.
struct Rep {
  std::vector<int> dims;
  std::vector<Mat> maps;
};

struct Context {
  const QuiverSpec& spec;
  Field f;
  Algebra<Zp> alg;

  Context(const QuiverSpec& s, std::int64_t p) : spec(s), f{static_cast<u64>(p)}, alg(build(s, p)) {}

  static Algebra<Zp> build(const QuiverSpec& s, std::int64_t p) {
    if (p < 2 || p > 46337 || !is_prime(p)) throw DomainError("oracle needs a small prime, got " + std::to_string(p));
    QuiverSpec q = s;
    q.field = FieldChoice::prime(p);
    return build_algebra<Zp>(q);
  }

  int n() const { return alg.n(); }
  u32 value(const Zp& z) const {
    std::int64_t p = static_cast<std::int64_t>(f.p);
    return static_cast<u32>(((z.value() % p) + p) % p);
  }
  int source(int a) const { return spec.arrows[static_cast<std::size_t>(a)].source; }
  int target(int a) const { return spec.arrows[static_cast<std::size_t>(a)].target; }

  // Coefficient of basis element b in the product x y of basis elements.
  u32 coeff(int x, int y, int b) const {
    for (const auto& [i, c] : alg.product(x, y))
      if (i == b) return value(c);
    return 0;
  }

  Mat along(const Rep& m, const std::vector<int>& arrows, int v) const {
    Mat acc = identity(m.dims[static_cast<std::size_t>(v)]);
    for (int a : arrows) acc = mul(f, acc, m.maps[static_cast<std::size_t>(a)]);
    return acc;
  }

  bool satisfies(const Rep& m) const {
    for (const auto& rel : spec.relations) {
      if (rel.empty()) continue;
      int s = source(rel.front().arrows.front());
      int t = target(rel.front().arrows.back());
      Mat sum(m.dims[static_cast<std::size_t>(s)], m.dims[static_cast<std::size_t>(t)]);
      for (const auto& term : rel) {
        u32 c = value(ScalarTraits<Zp>::from_rational(term.coeff, alg.field));
        Mat prod = along(m, term.arrows, s);
        for (std::size_t i = 0; i < sum.a.size(); ++i) sum.a[i] = f.add(sum.a[i], f.mul(c, prod.a[i]));
      }
      if (!sum.is_zero()) return false;
    }
    return true;
  }

  // Basis of Hom(M, N); each map is a list of per-vertex matrices.
  std::vector<std::vector<Mat>> hom(const Rep& m, const Rep& nn) const {
    std::vector<int> off(static_cast<std::size_t>(n()) + 1, 0);
    for (int v = 0; v < n(); ++v)
      off[static_cast<std::size_t>(v) + 1] =
          off[static_cast<std::size_t>(v)] + m.dims[static_cast<std::size_t>(v)] * nn.dims[static_cast<std::size_t>(v)];
    const int vars = off.back();
    auto var = [&](int v, int i, int j) { return off[static_cast<std::size_t>(v)] + i * nn.dims[static_cast<std::size_t>(v)] + j; };
    std::vector<std::vector<u32>> eqs;
    for (std::size_t a = 0; a < spec.arrows.size(); ++a) {
      int s = source(static_cast<int>(a)), t = target(static_cast<int>(a));
      const Mat& ma = m.maps[a];
      const Mat& na = nn.maps[a];
      // (M_a φ_t − φ_s N_a)(i, j) = 0.
      for (int i = 0; i < ma.r; ++i)
        for (int j = 0; j < na.c; ++j) {
          std::vector<u32> row(static_cast<std::size_t>(vars), 0);
          for (int k = 0; k < ma.c; ++k)
            if (ma(i, k)) row[static_cast<std::size_t>(var(t, k, j))] = f.add(row[static_cast<std::size_t>(var(t, k, j))], ma(i, k));
          for (int k = 0; k < na.r; ++k)
            if (na(k, j)) row[static_cast<std::size_t>(var(s, i, k))] = f.sub(row[static_cast<std::size_t>(var(s, i, k))], na(k, j));
          eqs.push_back(std::move(row));
        }
    }
    Mat sys(static_cast<int>(eqs.size()), vars);
    for (std::size_t i = 0; i < eqs.size(); ++i)
      std::copy(eqs[i].begin(), eqs[i].end(), sys.a.begin() + static_cast<std::ptrdiff_t>(i * static_cast<std::size_t>(vars)));
    Mat ker = eqs.empty() ? identity(vars) : nullspace(f, sys);
    std::vector<std::vector<Mat>> out;
    for (int k = 0; k < ker.r; ++k) {
      std::vector<Mat> phi;
      for (int v = 0; v < n(); ++v) {
        Mat b(m.dims[static_cast<std::size_t>(v)], nn.dims[static_cast<std::size_t>(v)]);
        for (int i = 0; i < b.r; ++i)
          for (int j = 0; j < b.c; ++j) b(i, j) = ker(k, var(v, i, j));
        phi.push_back(b);
      }
      out.push_back(std::move(phi));
    }
    return out;
  }

  // Calls visit on every linear combination of the basis; stops when it
  // returns true.
  bool any_combination(const Rep& m, const Rep& nn, const std::vector<std::vector<Mat>>& basis,
                       const std::function<bool(const std::vector<Mat>&)>& visit, u64 ceiling) const {
    u64 total = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      total *= f.p;
      if (total > ceiling) throw DomainError("oracle: Hom space too large to search");
    }
    std::vector<u32> c(basis.size(), 0);
    for (u64 step = 0; step < total; ++step) {
      u64 x = step;
      for (auto& ci : c) {
        ci = static_cast<u32>(x % f.p);
        x /= f.p;
      }
      std::vector<Mat> phi;
      for (int v = 0; v < n(); ++v) {
        Mat b(m.dims[static_cast<std::size_t>(v)], nn.dims[static_cast<std::size_t>(v)]);
        for (std::size_t k = 0; k < basis.size(); ++k)
          if (c[k])
            for (std::size_t e = 0; e < b.a.size(); ++e)
              b.a[e] = f.add(b.a[e], f.mul(c[k], basis[k][static_cast<std::size_t>(v)].a[e]));
        phi.push_back(std::move(b));
      }
      if (visit(phi)) return true;
    }
    return false;
  }

  bool indecomposable(const Rep& m, u64 ceiling) const {
    int total = 0;
    for (int d : m.dims) total += d;
    if (total == 0) return false;
    auto end = hom(m, m);
    if (end.size() == 1) return true;
    bool split = any_combination(
        m, m, end,
        [&](const std::vector<Mat>& e) {
          bool zero = true, one = true;
          for (int v = 0; v < n(); ++v) {
            const Mat& b = e[static_cast<std::size_t>(v)];
            if (!b.is_zero()) zero = false;
            if (b.a != identity(b.r).a) one = false;
            if (mul(f, b, b).a != b.a) return false;
          }
          return !zero && !one;
        },
        ceiling);
    return !split;
  }

  bool isomorphic(const Rep& m, const Rep& nn, u64 ceiling) const {
    if (m.dims != nn.dims) return false;
    auto h = hom(m, nn);
    if (h.size() != hom(nn, m).size() || hom(m, m).size() != hom(nn, nn).size()) return false;
    return any_combination(
        m, nn, h,
        [&](const std::vector<Mat>& phi) {
          for (const auto& b : phi)
            if (rank(f, b) != b.r) return false;
          return true;
        },
        ceiling);
  }

  // Rows spanning rad M at each vertex.
  Mat radical(const Rep& m, int w) const {
    Mat r(0, m.dims[static_cast<std::size_t>(w)]);
    for (std::size_t a = 0; a < spec.arrows.size(); ++a)
      if (target(static_cast<int>(a)) == w) r = stack(r, m.maps[a]);
    return r;
  }

  struct Generator {
    int vertex;
    Mat row;  // 1 × dims[vertex]
  };

  std::vector<Generator> top_generators(const Rep& m) const {
    std::vector<Generator> out;
    for (int w = 0; w < n(); ++w) {
      const int d = m.dims[static_cast<std::size_t>(w)];
      Mat span = radical(m, w);
      int r = span.r ? rank(f, span) : 0;
      for (int i = 0; i < d; ++i) {
        Mat e(1, d);
        e(0, i) = 1;
        Mat bigger = stack(span, e);
        int r2 = rank(f, bigger);
        if (r2 > r) {
          out.push_back({w, e});
          span = bigger;
          r = r2;
        }
      }
    }
    return out;
  }

  std::vector<int> top_dims(const Rep& m) const {
    std::vector<int> t(static_cast<std::size_t>(n()), 0);
    for (const auto& g : top_generators(m)) ++t[static_cast<std::size_t>(g.vertex)];
    return t;
  }

  // ⊕ P_v over the given vertices.
  Rep projective_sum(const std::vector<int>& vs) const {
    Rep r;
    r.dims.assign(static_cast<std::size_t>(n()), 0);
    for (int v : vs)
      for (int w = 0; w < n(); ++w) r.dims[static_cast<std::size_t>(w)] += static_cast<int>(alg.between(v, w).size());
    for (std::size_t a = 0; a < spec.arrows.size(); ++a) {
      int s = source(static_cast<int>(a)), t = target(static_cast<int>(a));
      Mat x(r.dims[static_cast<std::size_t>(s)], r.dims[static_cast<std::size_t>(t)]);
      int ro = 0, co = 0;
      for (int v : vs) {
        const auto& from = alg.between(v, s);
        const auto& to = alg.between(v, t);
        for (std::size_t i = 0; i < from.size(); ++i)
          for (std::size_t j = 0; j < to.size(); ++j)
            x(ro + static_cast<int>(i), co + static_cast<int>(j)) = coeff(from[i], alg.arrow_index(static_cast<int>(a)), to[j]);
        ro += static_cast<int>(from.size());
        co += static_cast<int>(to.size());
      }
      r.maps.push_back(x);
    }
    return r;
  }

  // ⊕ I_v; the space at w is dual to the paths w → v.
  Rep injective_sum(const std::vector<int>& vs) const {
    Rep r;
    r.dims.assign(static_cast<std::size_t>(n()), 0);
    for (int v : vs)
      for (int w = 0; w < n(); ++w) r.dims[static_cast<std::size_t>(w)] += static_cast<int>(alg.between(w, v).size());
    for (std::size_t a = 0; a < spec.arrows.size(); ++a) {
      int s = source(static_cast<int>(a)), t = target(static_cast<int>(a));
      Mat x(r.dims[static_cast<std::size_t>(s)], r.dims[static_cast<std::size_t>(t)]);
      int ro = 0, co = 0;
      for (int v : vs) {
        const auto& from = alg.between(s, v);
        const auto& to = alg.between(t, v);
        for (std::size_t i = 0; i < from.size(); ++i)
          for (std::size_t j = 0; j < to.size(); ++j)
            x(ro + static_cast<int>(i), co + static_cast<int>(j)) = coeff(alg.arrow_index(static_cast<int>(a)), to[j], from[i]);
        ro += static_cast<int>(from.size());
        co += static_cast<int>(to.size());
      }
      r.maps.push_back(x);
    }
    return r;
  }

  // Subrepresentation of r with the given basis rows per vertex.
  Rep restrict(const Rep& r, const std::vector<Mat>& k) const {
    Rep s;
    for (int v = 0; v < n(); ++v) s.dims.push_back(k[static_cast<std::size_t>(v)].r);
    for (std::size_t a = 0; a < spec.arrows.size(); ++a) {
      int src = source(static_cast<int>(a)), tgt = target(static_cast<int>(a));
      const Mat& ks = k[static_cast<std::size_t>(src)];
      const Mat& kt = k[static_cast<std::size_t>(tgt)];
      Mat y = mul(f, ks, r.maps[a]);
      s.maps.push_back(kt.r == 0 || ks.r == 0 ? Mat(ks.r, kt.r) : solve_left(f, kt, y));
    }
    return s;
  }

  // The projective cover ⊕ P_{g.vertex} → M as a matrix per vertex, and Ω M.
  struct Cover {
    std::vector<int> vertices;
    Rep proj;
    std::vector<Mat> kernel;  // basis rows of Ω M inside proj
  };

  Cover cover(const Rep& m) const {
    Cover c;
    auto gens = top_generators(m);
    for (const auto& g : gens) c.vertices.push_back(g.vertex);
    c.proj = projective_sum(c.vertices);
    for (int w = 0; w < n(); ++w) {
      Mat pi(c.proj.dims[static_cast<std::size_t>(w)], m.dims[static_cast<std::size_t>(w)]);
      int ro = 0;
      for (const auto& g : gens) {
        for (int b : alg.between(g.vertex, w)) {
          Mat img = mul(f, g.row, along(m, alg.basis[static_cast<std::size_t>(b)].arrows, g.vertex));
          for (int j = 0; j < pi.c; ++j) pi(ro, j) = img(0, j);
          ++ro;
        }
      }
      c.kernel.push_back(pi.c == 0 ? identity(pi.r) : left_nullspace(f, pi));
    }
    return c;
  }
};

Rep to_rep(const QuiverSpec& spec, const OracleModule& m) {
  Rep r{m.dims, {}};
  for (std::size_t a = 0; a < spec.arrows.size(); ++a) {
    Mat x(m.dims[static_cast<std::size_t>(spec.arrows[a].source)], m.dims[static_cast<std::size_t>(spec.arrows[a].target)]);
    x.a = m.maps[a];
    r.maps.push_back(x);
  }
  return r;
}

OracleModule from_rep(const Rep& r) {
  OracleModule m{r.dims, {}};
  for (const auto& x : r.maps) m.maps.push_back(x.a);
  return m;
}

Rep tau_of(const Context& ctx, const Rep& m) {
  Context::Cover c0 = ctx.cover(m);
  Rep omega = ctx.restrict(c0.proj, c0.kernel);
  auto gens = ctx.top_generators(omega);
  std::vector<int> p1;
  for (const auto& g : gens) p1.push_back(g.vertex);
  const std::vector<int>& p0 = c0.vertices;
  // x[j][i]: generator j of Ω M written in the summand P_{p0[i]}, as
  // coefficients on the paths p0[i] → p1[j].
  std::vector<std::vector<std::vector<u32>>> x(gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    const int u = gens[j].vertex;
    Mat inproj = mul(ctx.f, gens[j].row, c0.kernel[static_cast<std::size_t>(u)]);
    int off = 0;
    for (int v : p0) {
      const auto& paths = ctx.alg.between(v, u);
      std::vector<u32> coeffs(paths.size());
      for (std::size_t r = 0; r < paths.size(); ++r) coeffs[r] = inproj(0, off + static_cast<int>(r));
      off += static_cast<int>(paths.size());
      x[j].push_back(std::move(coeffs));
    }
  }
  Rep ip1 = ctx.injective_sum(p1);
  std::vector<Mat> ker;
  for (int w = 0; w < ctx.n(); ++w) {
    int rows = 0, cols = 0;
    for (int u : p1) rows += static_cast<int>(ctx.alg.between(w, u).size());
    for (int v : p0) cols += static_cast<int>(ctx.alg.between(w, v).size());
    Mat nf(rows, cols);
    int ro = 0;
    for (std::size_t j = 0; j < p1.size(); ++j) {
      const auto& ps = ctx.alg.between(w, p1[j]);
      int co = 0;
      for (std::size_t i = 0; i < p0.size(); ++i) {
        const auto& qs = ctx.alg.between(w, p0[i]);
        const auto& rs = ctx.alg.between(p0[i], p1[j]);
        for (std::size_t a = 0; a < ps.size(); ++a)
          for (std::size_t b = 0; b < qs.size(); ++b) {
            u32 acc = 0;
            for (std::size_t r = 0; r < rs.size(); ++r)
              if (x[j][i][r]) acc = ctx.f.add(acc, ctx.f.mul(x[j][i][r], ctx.coeff(qs[b], rs[r], ps[a])));
            nf(ro + static_cast<int>(a), co + static_cast<int>(b)) = acc;
          }
        co += static_cast<int>(qs.size());
      }
      ro += static_cast<int>(ps.size());
    }
    ker.push_back(cols == 0 ? identity(rows) : left_nullspace(ctx.f, nf));
  }
  return ctx.restrict(ip1, ker);
}

std::vector<int> g_of(const Context& ctx, const Rep& m) {
  Context::Cover c0 = ctx.cover(m);
  Rep omega = ctx.restrict(c0.proj, c0.kernel);
  std::vector<int> g = ctx.top_dims(m);
  std::vector<int> t1 = ctx.top_dims(omega);
  for (std::size_t v = 0; v < g.size(); ++v) g[v] -= t1[v];
  return g;
}

// X ∈ Fac(⊕ ms): the images of all maps into X fill X.
bool in_fac(const Context& ctx, const Rep& x, const std::vector<const Rep*>& ms) {
  for (int w = 0; w < ctx.n(); ++w) {
    const int d = x.dims[static_cast<std::size_t>(w)];
    if (d == 0) continue;
    Mat span(0, d);
    for (const Rep* m : ms)
      for (const auto& phi : ctx.hom(*m, x)) span = stack(span, phi[static_cast<std::size_t>(w)]);
    if (span.r == 0 || rank(ctx.f, span) != d) return false;
  }
  return true;
}

void for_each_dim_vector(const std::vector<int>& bound, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> d(bound.size(), 0);
  while (true) {
    std::size_t k = 0;
    while (k < d.size() && d[k] == bound[k]) d[k++] = 0;
    if (k == d.size()) return;
    ++d[k];
    visit(d);
  }
}

}  // namespace

std::vector<int> default_dim_bound(const QuiverSpec& spec) {
  std::vector<Path> basis = path_basis(spec);
  const std::size_t n = spec.vertices.size();
  std::vector<int> into(n * n, 0);
  for (const auto& p : basis) ++into[static_cast<std::size_t>(p.source) * n + static_cast<std::size_t>(p.target)];
  std::vector<int> bound(n, 0);
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t v = 0; v < n; ++v) bound[w] = std::max({bound[w], into[v * n + w], into[w * n + v]});
  return bound;
}

std::vector<OracleModule> brute_force_indecomposables(const QuiverSpec& spec, const OracleConfig& cfg) {
  Context ctx(spec, cfg.prime);
  std::vector<int> bound = cfg.dim_bound.empty() ? default_dim_bound(spec) : cfg.dim_bound;
  if (bound.size() != static_cast<std::size_t>(ctx.n())) throw DomainError("oracle: dimension bound has the wrong length");
  // Count candidates before touching any of them.
  u64 total = 0;
  for_each_dim_vector(bound, [&](const std::vector<int>& d) {
    u64 c = 1;
    for (const auto& a : spec.arrows) {
      int e = d[static_cast<std::size_t>(a.source)] * d[static_cast<std::size_t>(a.target)];
      for (int i = 0; i < e && c <= cfg.ceiling; ++i) c *= ctx.f.p;
    }
    total += c;
    if (total > cfg.ceiling) throw DomainError("oracle: more than " + std::to_string(cfg.ceiling) + " candidates");
  });

  std::vector<Rep> found;
  for_each_dim_vector(bound, [&](const std::vector<int>& d) {
    std::vector<int> sizes;
    int entries = 0;
    for (const auto& a : spec.arrows) {
      sizes.push_back(d[static_cast<std::size_t>(a.source)] * d[static_cast<std::size_t>(a.target)]);
      entries += sizes.back();
    }
    std::vector<u32> digits(static_cast<std::size_t>(entries), 0);
    while (true) {
      Rep r{d, {}};
      int off = 0;
      for (std::size_t a = 0; a < spec.arrows.size(); ++a) {
        Mat x(d[static_cast<std::size_t>(spec.arrows[a].source)], d[static_cast<std::size_t>(spec.arrows[a].target)]);
        std::copy(digits.begin() + off, digits.begin() + off + sizes[a], x.a.begin());
        off += sizes[a];
        r.maps.push_back(std::move(x));
      }
      if (ctx.satisfies(r) && ctx.indecomposable(r, cfg.ceiling)) {
        bool seen = false;
        for (const auto& q : found) seen = seen || ctx.isomorphic(r, q, cfg.ceiling);
        if (!seen) found.push_back(std::move(r));
      }
      // Next tuple, last entry fastest.
      int k = entries - 1;
      while (k >= 0 && digits[static_cast<std::size_t>(k)] + 1 == ctx.f.p) digits[static_cast<std::size_t>(k--)] = 0;
      if (k < 0) break;
      ++digits[static_cast<std::size_t>(k)];
    }
  });
  std::vector<OracleModule> out;
  for (const auto& r : found) out.push_back(from_rep(r));
  return out;
}

OracleResult brute_force_sttilt(const QuiverSpec& spec, const OracleConfig& cfg) {
  Context ctx(spec, cfg.prime);
  OracleResult res;
  res.indecomposables = brute_force_indecomposables(spec, cfg);
  const int n = ctx.n();
  std::vector<Rep> reps, taus;
  std::vector<std::vector<int>> gs;
  for (const auto& m : res.indecomposables) {
    reps.push_back(to_rep(spec, m));
    taus.push_back(tau_of(ctx, reps.back()));
    res.tau_rigid.push_back(ctx.hom(reps.back(), taus.back()).empty());
    gs.push_back(g_of(ctx, reps.back()));
  }
  // Items: rigid modules, then P_v[1] as item count + v.
  std::vector<int> items;
  for (std::size_t i = 0; i < reps.size(); ++i)
    if (res.tau_rigid[i]) items.push_back(static_cast<int>(i));
  const int nm = static_cast<int>(reps.size());
  for (int v = 0; v < n; ++v) items.push_back(nm + v);
  auto compatible = [&](int a, int b) {
    if (a >= nm && b >= nm) return true;
    if (a >= nm) std::swap(a, b);
    if (b >= nm) return reps[static_cast<std::size_t>(a)].dims[static_cast<std::size_t>(b - nm)] == 0;
    return ctx.hom(reps[static_cast<std::size_t>(a)], taus[static_cast<std::size_t>(b)]).empty() &&
           ctx.hom(reps[static_cast<std::size_t>(b)], taus[static_cast<std::size_t>(a)]).empty();
  };
  const std::size_t m = items.size();
  std::vector<std::vector<bool>> ok(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) ok[i][j] = ok[j][i] = compatible(items[i], items[j]);

  std::vector<std::size_t> chosen;
  std::function<void(std::size_t)> extend = [&](std::size_t from) {
    if (static_cast<int>(chosen.size()) == n) {
      OraclePair p;
      p.projective.assign(static_cast<std::size_t>(n), 0);
      for (std::size_t c : chosen) {
        int it = items[c];
        if (it >= nm) {
          p.projective[static_cast<std::size_t>(it - nm)] = 1;
          std::vector<int> g(static_cast<std::size_t>(n), 0);
          g[static_cast<std::size_t>(it - nm)] = -1;
          p.g_matrix.push_back(g);
        } else {
          p.modules.push_back(it);
          p.g_matrix.push_back(gs[static_cast<std::size_t>(it)]);
        }
      }
      std::sort(p.g_matrix.begin(), p.g_matrix.end());
      res.pairs.push_back(std::move(p));
      return;
    }
    for (std::size_t k = from; k < m; ++k) {
      bool fits = true;
      for (std::size_t c : chosen) fits = fits && ok[c][k];
      if (!fits) continue;
      chosen.push_back(k);
      extend(k + 1);
      chosen.pop_back();
    }
  };
  extend(0);
  std::sort(res.pairs.begin(), res.pairs.end(),
            [](const OraclePair& a, const OraclePair& b) { return a.g_matrix < b.g_matrix; });

  const std::size_t np = res.pairs.size();
  std::vector<std::vector<bool>> geq(np, std::vector<bool>(np, false));
  for (std::size_t a = 0; a < np; ++a) {
    std::vector<const Rep*> gen;
    for (int i : res.pairs[a].modules) gen.push_back(&reps[static_cast<std::size_t>(i)]);
    for (std::size_t b = 0; b < np; ++b) {
      bool inside = true;
      for (int i : res.pairs[b].modules)
        inside = inside && in_fac(ctx, reps[static_cast<std::size_t>(i)], gen);
      geq[a][b] = inside;
    }
  }
  for (std::size_t a = 0; a < np; ++a)
    for (std::size_t b = 0; b < np; ++b) {
      if (a == b || !geq[a][b]) continue;
      bool between = false;
      for (std::size_t c = 0; c < np && !between; ++c) between = c != a && c != b && geq[a][c] && geq[c][b];
      if (!between) res.edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  return res;
}

OracleModule oracle_tau(const QuiverSpec& spec, const OracleModule& m, std::int64_t prime) {
  Context ctx(spec, prime);
  return from_rep(tau_of(ctx, to_rep(spec, m)));
}

int oracle_hom_dim(const QuiverSpec& spec, const OracleModule& m, const OracleModule& n, std::int64_t prime) {
  Context ctx(spec, prime);
  return static_cast<int>(ctx.hom(to_rep(spec, m), to_rep(spec, n)).size());
}

std::vector<int> oracle_g_vector(const QuiverSpec& spec, const OracleModule& m, std::int64_t prime) {
  Context ctx(spec, prime);
  return g_of(ctx, to_rep(spec, m));
}

Representation<Rational> lift_to_rationals(const Algebra<Rational>& alg, const OracleModule& m) {
  Representation<Rational> r;
  r.dims = m.dims;
  for (std::size_t a = 0; a < alg.arrows.size(); ++a) {
    const Index rows = m.dims[static_cast<std::size_t>(alg.arrows[a].source)];
    const Index cols = m.dims[static_cast<std::size_t>(alg.arrows[a].target)];
    Matrix<Rational> x(rows, cols);
    for (Index i = 0; i < rows; ++i)
      for (Index j = 0; j < cols; ++j) x(i, j) = Rational(static_cast<long long>(m.maps[a][static_cast<std::size_t>(i * cols + j)]));
    r.maps.push_back(x);
  }
  if (!satisfies_relations(alg, r)) throw DomainError("module does not lift to the rationals");
  return r;
}

}  // namespace ttilt
