// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <string>

#include "ttilt/errors.hpp"
#include "ttilt/io.hpp"

using namespace ttilt;

namespace {

using Alg = Algebra<Rational>;
using Graph = HasseGraph<Rational>;
using Pair = TauRigidPair<Rational>;
using Key = std::vector<std::vector<int>>;

QuiverSpec corpus(const std::string& name) { return parse_algebra(read_file(std::string(TTILT_CORPUS_DIR) + "/" + name)); }

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const std::vector<std::string> finite_corpus = {"k.alg", "a2.alg", "a3.alg", "a4.alg", "dual.alg", "preproj_a2.alg", "square.alg"};

// Degrees, a single source at (A, 0), a single sink at (0, A), no cycles.
void check_shape(const Alg& alg, const Graph& g, const std::string& name) {
  require(g.complete, name + ": enumeration incomplete");
  const std::size_t n = g.nodes.size();
  std::vector<int> in(n, 0), out(n, 0);
  std::set<std::pair<int, int>> seen;
  for (const auto& e : g.edges) {
    require(e.src != e.dst && seen.insert({e.src, e.dst}).second, name + ": loop or repeated edge");
    ++out[static_cast<std::size_t>(e.src)];
    ++in[static_cast<std::size_t>(e.dst)];
  }
  int sources = 0, sinks = 0;
  for (std::size_t i = 0; i < n; ++i) {
    require(in[i] + out[i] == alg.n(), name + ": node " + std::to_string(i) + " has degree " + std::to_string(in[i] + out[i]));
    sources += in[i] == 0;
    sinks += out[i] == 0;
  }
  require(sources == 1 && sinks == 1, name + ": sources/sinks not unique");
  require(in[static_cast<std::size_t>(g.max_node)] == 0, name + ": (A,0) is not the source");
  require(g.min_node >= 0 && out[static_cast<std::size_t>(g.min_node)] == 0, name + ": (0,A) is not the sink");
  // Kahn's algorithm.
  std::vector<int> indeg = in;
  std::vector<int> ready;
  for (std::size_t i = 0; i < n; ++i)
    if (indeg[i] == 0) ready.push_back(static_cast<int>(i));
  std::size_t removed = 0;
  while (!ready.empty()) {
    int v = ready.back();
    ready.pop_back();
    ++removed;
    for (const auto& e : g.edges)
      if (e.src == v && --indeg[static_cast<std::size_t>(e.dst)] == 0) ready.push_back(e.dst);
  }
  require(removed == n, name + ": cycle in the Hasse quiver");
}

std::set<std::pair<Key, Key>> keyed_edges(const Graph& g) {
  std::set<std::pair<Key, Key>> out;
  for (const auto& e : g.edges)
    out.insert({g.nodes[static_cast<std::size_t>(e.src)].key, g.nodes[static_cast<std::size_t>(e.dst)].key});
  return out;
}

void matches_oracle(const QuiverSpec& spec, const Graph& g, const std::string& name) {
  OracleResult r = brute_force_sttilt(spec);
  std::set<Key> keys;
  for (const auto& p : r.pairs) keys.insert(p.g_matrix);
  std::set<Key> engine;
  for (const auto& node : g.nodes) engine.insert(node.key);
  require(keys == engine, name + ": pairs differ from the oracle");
  std::set<std::pair<Key, Key>> oe;
  for (const auto& [a, b] : r.edges)
    oe.insert({r.pairs[static_cast<std::size_t>(a)].g_matrix, r.pairs[static_cast<std::size_t>(b)].g_matrix});
  require(oe == keyed_edges(g), name + ": Hasse edges differ from the oracle");
}

bool same_pair(const Alg& alg, const Pair& a, const Pair& b) {
  if (a.projective_part != b.projective_part || a.module_summands.size() != b.module_summands.size()) return false;
  return is_isomorphic(alg, module_of(alg, a), module_of(alg, b));
}

// Exact determinant by fraction-free elimination.
long long determinant(Key cols) {
  const std::size_t n = cols.size();
  std::vector<std::vector<long long>> m(n, std::vector<long long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = cols[j][i];
  long long sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

void criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  QuiverSpec spec = corpus("a2.alg");
  Alg alg = build_algebra<Rational>(spec);
  Graph g = enumerate_sttilt(alg);
  double dt = seconds_since(t0);
  require(g.complete && g.nodes.size() == 5, "expected 5 pairs, got " + std::to_string(g.nodes.size()));
  require(g.edges.size() == 5, "expected the 5 pentagon edges, got " + std::to_string(g.edges.size()));
  check_shape(alg, g, "A2");
  // The two maximal chains have lengths 3 and 2.
  std::vector<int> out(5, 0);
  for (const auto& e : g.edges) ++out[static_cast<std::size_t>(e.src)];
  require(out[static_cast<std::size_t>(g.max_node)] == 2, "top should have two lower neighbours");
  matches_oracle(spec, g, "A2");
  require(dt < 1.0, "took " + std::to_string(dt) + " s");
}

void criterion2() {
  auto t0 = std::chrono::steady_clock::now();
  QuiverSpec s3 = corpus("a3.alg"), s4 = corpus("a4.alg");
  Alg a3 = build_algebra<Rational>(s3), a4 = build_algebra<Rational>(s4);
  Graph g3 = enumerate_sttilt(a3), g4 = enumerate_sttilt(a4);
  double dt = seconds_since(t0);
  require(g3.nodes.size() == 14, "A3 gave " + std::to_string(g3.nodes.size()));
  require(g4.nodes.size() == 42, "A4 gave " + std::to_string(g4.nodes.size()));
  check_shape(a3, g3, "A3");
  check_shape(a4, g4, "A4");
  require(dt < 10.0, "took " + std::to_string(dt) + " s");
  matches_oracle(s3, g3, "A3");
  SiltingPoset<Rational> sp = enumerate_silting(a4);
  require(sp.complete && sp.objects.size() == 42, "A4 silting side gave " + std::to_string(sp.objects.size()));
}

void criterion3() {
  QuiverSpec spec = corpus("dual.alg");
  Alg alg = build_algebra<Rational>(spec);
  Graph g = enumerate_sttilt(alg);
  require(g.complete && g.nodes.size() == 2, "expected 2 pairs");
  require(g.edges.size() == 1 && g.edges[0].src == g.max_node && g.edges[0].dst == g.min_node, "expected (A,0) -> (0,A)");
  Pair top = pair_from_complexes(alg, g.nodes[static_cast<std::size_t>(g.max_node)].summands);
  Pair bottom = pair_from_complexes(alg, g.nodes[static_cast<std::size_t>(g.min_node)].summands);
  require(top.module_summands.size() == 1 && is_projective(alg, top.module_summands[0]), "top is not (A,0)");
  require(bottom.module_summands.empty() && bottom.projective_part == ProjectivePart{1}, "bottom is not (0,A)");
  matches_oracle(spec, g, "k[x]/(x^2)");
}

void criterion4() {
  QuiverSpec spec = corpus("preproj_a2.alg");
  Alg alg = build_algebra<Rational>(spec);
  Graph g = enumerate_sttilt(alg);
  require(g.complete && g.nodes.size() == 6, "expected 6 pairs, got " + std::to_string(g.nodes.size()));
  check_shape(alg, g, "preprojective A2");
  matches_oracle(spec, g, "preprojective A2");
}

void criterion5() {
  for (const auto& name : finite_corpus) {
    Alg alg = build_algebra<Rational>(corpus(name));
    Graph g = enumerate_sttilt(alg);
    check_shape(alg, g, name);
    for (const auto& e : g.edges) {
      const auto& src = g.nodes[static_cast<std::size_t>(e.src)];
      const auto& dst = g.nodes[static_cast<std::size_t>(e.dst)];
      // Position of the new summand in dst: the one not isomorphic to a summand of src.
      std::size_t pos = dst.summands.size();
      for (std::size_t j = 0; j < dst.summands.size() && pos == dst.summands.size(); ++j) {
        bool old = false;
        for (const auto& x : src.summands) old = old || is_isomorphic(alg, dst.summands[j], x);
        if (!old) pos = j;
      }
      require(pos < dst.summands.size(), name + ": edge without an exchanged summand");
      auto [back, dir] = mutate_silting(alg, dst.summands, pos);
      require(dir == Direction::up, name + ": reverse mutation is not up");
      require(sorted_columns(g_matrix(alg, back)) == src.key, name + ": mutation is not an involution");
      for (std::size_t j = 0; j < back.size(); ++j)
        require(is_isomorphic(alg, back[j], src.summands[j]), name + ": involution changes a summand");
    }
  }
}

void criterion6() {
  for (const auto& name : finite_corpus) {
    Alg alg = build_algebra<Rational>(corpus(name));
    Graph g = enumerate_sttilt(alg);
    SiltingPoset<Rational> sp = enumerate_silting(alg);
    require(sp.complete && sp.objects.size() == g.nodes.size(), name + ": different numbers of objects");
    std::vector<Pair> module_side, silting_side;
    for (const auto& node : g.nodes) module_side.push_back(pair_from_complexes(alg, node.summands));
    for (const auto& o : sp.objects) silting_side.push_back(pair_from_complexes(alg, o));
    // H⁰ matching.
    std::vector<int> image(silting_side.size(), -1);
    std::vector<bool> hit(module_side.size(), false);
    for (std::size_t a = 0; a < silting_side.size(); ++a)
      for (std::size_t b = 0; b < module_side.size() && image[a] < 0; ++b)
        if (!hit[b] && same_pair(alg, silting_side[a], module_side[b])) {
          image[a] = static_cast<int>(b);
          hit[b] = true;
        }
    for (int x : image) require(x >= 0, name + ": H0 of a silting object is not an enumerated pair");
    // Orders agree on all pairs.
    for (std::size_t a = 0; a < sp.objects.size(); ++a)
      for (std::size_t b = 0; b < sp.objects.size(); ++b)
        require(sp.geq[a][b] == leq(alg, silting_side[b], silting_side[a]), name + ": order tests disagree");
    // Covering relations of the silting order are the module-side Hasse edges.
    std::set<std::pair<int, int>> covers, edges;
    for (const auto& [a, b] : covering_relations(sp.geq))
      covers.insert({image[static_cast<std::size_t>(a)], image[static_cast<std::size_t>(b)]});
    for (const auto& e : g.edges) edges.insert({e.src, e.dst});
    require(covers == edges, name + ": Hasse quivers differ");
  }
}

void criterion7() {
  for (const auto& name : finite_corpus) {
    QuiverSpec spec = corpus(name);
    Alg alg = build_algebra<Rational>(spec);
    const int n = alg.n();
    std::vector<Pair> pieces;
    for (const auto& m : brute_force_indecomposables(spec)) {
      Representation<Rational> x = lift_to_rationals(alg, m);
      if (is_tau_rigid_pair(alg, x, ProjectivePart{})) pieces.push_back(Pair{{x}, ProjectivePart(static_cast<std::size_t>(n), 0)});
    }
    for (int v = 0; v < n; ++v) {
      Pair p{{}, ProjectivePart(static_cast<std::size_t>(n), 0)};
      p.projective_part[static_cast<std::size_t>(v)] = 1;
      pieces.push_back(p);
    }
    std::vector<Pair> inputs{Pair{{}, ProjectivePart(static_cast<std::size_t>(n), 0)}};
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      inputs.push_back(pieces[i]);
      for (std::size_t j = i + 1; j < pieces.size(); ++j) {
        Pair p = pieces[i];
        for (const auto& m : pieces[j].module_summands) p.module_summands.push_back(m);
        for (int v = 0; v < n; ++v) p.projective_part[static_cast<std::size_t>(v)] += pieces[j].projective_part[static_cast<std::size_t>(v)];
        if (is_tau_rigid_pair(alg, p)) inputs.push_back(p);
      }
    }
    for (const auto& u : inputs) {
      Pair big = bongartz_completion(alg, u);
      Pair small = minimal_completion(alg, u);
      require(is_tau_tilting_pair(alg, big) && is_tau_tilting_pair(alg, small), name + ": completion is not tau-tilting");
      require(leq(alg, small, big), name + ": minimal completion above Bongartz completion");
      const bool tilting = u.size() == n;
      require(same_pair(alg, big, small) == tilting, name + ": completions coincide exactly for tau-tilting input");
      for (const Pair* c : {&big, &small}) {
        for (const auto& m : u.module_summands) {
          bool found = false;
          for (const auto& x : c->module_summands) found = found || is_isomorphic(alg, m, x);
          require(found, name + ": completion lost a module summand");
        }
        for (int v = 0; v < n; ++v)
          require(c->projective_part[static_cast<std::size_t>(v)] >= u.projective_part[static_cast<std::size_t>(v)],
                  name + ": completion lost a projective summand");
      }
      if (u.size() == 0) {
        require(big.projective_part == ProjectivePart(static_cast<std::size_t>(n), 0) && is_projective(alg, module_of(alg, big)) &&
                    static_cast<int>(big.module_summands.size()) == n,
                name + ": Bongartz completion of (0,0) is not (A,0)");
        require(small.module_summands.empty() && small.projective_part == ProjectivePart(static_cast<std::size_t>(n), 1),
                name + ": minimal completion of (0,0) is not (0,A)");
      }
    }
  }
}

void criterion8() {
  for (const std::string name : {"a2.alg", "a3.alg", "dual.alg"}) {
    QuiverSpec spec = corpus(name);
    Alg alg = build_algebra<Rational>(spec);
    std::vector<Representation<Rational>> ms;
    for (const auto& m : brute_force_indecomposables(spec)) ms.push_back(lift_to_rationals(alg, m));
    for (const auto& x : ms) {
      Representation<Rational> tx = tau(alg, x);
      for (const auto& y : ms)
        require(ext1_dim(alg, x, y) == costable_hom_dim(alg, y, tx), name + ": Ext and Hom modulo injectives differ");
    }
  }
}

void criterion9() {
  for (const auto& name : finite_corpus) {
    Alg alg = build_algebra<Rational>(corpus(name));
    Graph g = enumerate_sttilt(alg);
    std::set<Key> keys;
    for (const auto& node : g.nodes) {
      long long d = determinant(g_matrix(alg, node.summands));
      require(d == 1 || d == -1, name + ": g-matrix with determinant " + std::to_string(d));
      require(keys.insert(node.key).second, name + ": repeated g-matrix");
    }
  }
}

void criterion10() {
  auto t0 = std::chrono::steady_clock::now();
  Alg alg = build_algebra<Rational>(corpus("kronecker.alg"));
  EnumerationLimits lim;
  lim.max_nodes = 100;
  Graph g = enumerate_sttilt(alg, lim);
  double dt = seconds_since(t0);
  require(!g.complete, "enumeration claims to be complete");
  require(g.nodes.size() == 100, "expected 100 pairs, got " + std::to_string(g.nodes.size()));
  // g-vectors are invariants of the homotopy class, so distinct keys mean
  // pairwise non-isomorphic pairs.
  std::set<Key> keys;
  for (const auto& node : g.nodes) keys.insert(sorted_columns(g_matrix(alg, node.summands)));
  require(keys.size() == 100, "two discovered pairs share a g-matrix");
  require(dt < 30.0, "took " + std::to_string(dt) + " s");
  Finiteness f = is_tau_tilting_finite(alg, lim);
  require(!f.finite, "reported as tau-tilting finite");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void()>>> criteria = {
      {"pentagon for A2, equal to the oracle", criterion1},
      {"Catalan counts 14 and 42 for A3 and A4", criterion2},
      {"k[x]/(x^2) has exactly two pairs", criterion3},
      {"preprojective A2 has six pairs", criterion4},
      {"regularity, extremes, acyclicity, involution", criterion5},
      {"silting and module posets agree under H0", criterion6},
      {"completion sandwich", criterion7},
      {"AR duality on oracle indecomposables", criterion8},
      {"g-matrices unimodular and distinct", criterion9},
      {"Kronecker stays incomplete at 100 nodes", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      criteria[i].second();
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    char time[32];
    std::snprintf(time, sizeof time, "%.2f s", seconds_since(t0));
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << i + 1 << " " << criteria[i].first << " (" << time << ")";
    if (!ok) std::cout << ": " << detail;
    std::cout << std::endl;
    failed += !ok;
  }
  return failed == 0 ? 0 : 1;
}
