#include "ttilt/algebra.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace ttilt {
namespace {

using Word = std::vector<int>;

// Length-lex order on words, letters compared by arrow-name rank.
struct WordLess {
  const std::vector<int>* rank;
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
      int ra = (*rank)[static_cast<std::size_t>(a[i])], rb = (*rank)[static_cast<std::size_t>(b[i])];
      if (ra != rb) return ra < rb;
    }
    return false;
  }
};

template <class S>
using Poly = std::map<Word, S, WordLess>;

template <class S>
void add_term(Poly<S>& f, const Word& w, const S& c) {
  if (c.is_zero()) return;
  auto it = f.find(w);
  if (it == f.end()) {
    f.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) f.erase(it);
}

Word concat(const Word& a, const Word& b, const Word& c) {
  Word w;
  w.reserve(a.size() + b.size() + c.size());
  w.insert(w.end(), a.begin(), a.end());
  w.insert(w.end(), b.begin(), b.end());
  w.insert(w.end(), c.begin(), c.end());
  return w;
}

std::ptrdiff_t find_sub(const Word& w, const Word& sub) {
  if (sub.size() > w.size()) return -1;
  auto it = std::search(w.begin(), w.end(), sub.begin(), sub.end());
  return it == w.end() ? -1 : it - w.begin();
}

template <class S>
struct Rule {
  Word lead;
  Poly<S> tail;  // lead is rewritten to tail
  bool alive = true;
};

// Rewrites f until no term contains the lead word of a live rule.
template <class S>
Poly<S> rewrite(Poly<S> f, const std::vector<Rule<S>>& rules) {
  for (;;) {
    const Rule<S>* hit = nullptr;
    Word w;
    std::ptrdiff_t pos = -1;
    for (auto it = f.rbegin(); it != f.rend() && !hit; ++it)
      for (const Rule<S>& r : rules) {
        if (!r.alive) continue;
        pos = find_sub(it->first, r.lead);
        if (pos < 0) continue;
        hit = &r;
        w = it->first;
        break;
      }
    if (!hit) return f;
    Word pre(w.begin(), w.begin() + pos);
    Word suf(w.begin() + pos + static_cast<std::ptrdiff_t>(hit->lead.size()), w.end());
    auto node = f.find(w);
    S c = node->second;
    f.erase(node);
    for (const auto& [t, tc] : hit->tail) add_term(f, concat(pre, t, suf), c * tc);
  }
}

template <class S>
class Completion {
 public:
  Completion(const std::vector<int>* rank, int bound) : less_{rank}, bound_(bound) {}

  Poly<S> empty() const { return Poly<S>(less_); }

  Poly<S> reduce(Poly<S> f) const { return rewrite(std::move(f), rules_); }

  void run(std::deque<Poly<S>> work) {
    while (!work.empty()) {
      Poly<S> f = reduce(std::move(work.front()));
      work.pop_front();
      if (f.empty()) continue;
      auto lt = std::prev(f.end());
      Word lead = lt->first;
      S inv = lt->second.inverse();
      Poly<S> tail = empty();
      for (auto it = f.begin(); it != lt; ++it) add_term(tail, it->first, -(it->second * inv));
      for (Rule<S>& r : rules_) {
        if (!r.alive || find_sub(r.lead, lead) < 0) continue;
        r.alive = false;
        Poly<S> back = r.tail;
        for (auto& kv : back) kv.second = -kv.second;
        add_term(back, r.lead, S(1));
        work.push_back(std::move(back));
      }
      rules_.push_back({lead, std::move(tail), true});
      std::size_t ni = rules_.size() - 1;
      for (std::size_t i = 0; i < rules_.size(); ++i) {
        if (!rules_[i].alive) continue;
        overlaps(ni, i, work);
        if (i != ni) overlaps(i, ni, work);
      }
    }
    for (Rule<S>& r : rules_) {
      if (!r.alive) continue;
      Poly<S> t = r.tail;
      r.alive = false;
      r.tail = reduce(std::move(t));
      r.alive = true;
    }
  }

  const std::vector<Rule<S>>& rules() const { return rules_; }

 private:
  // Overlaps u = x o, v = o y with o nonempty and x, y nonempty.
  void overlaps(std::size_t iu, std::size_t iv, std::deque<Poly<S>>& work) const {
    const Word& u = rules_[iu].lead;
    const Word& v = rules_[iv].lead;
    for (std::size_t k = 1; k < std::min(u.size(), v.size()); ++k) {
      if (!std::equal(u.end() - static_cast<std::ptrdiff_t>(k), u.end(), v.begin())) continue;
      Word x(u.begin(), u.end() - static_cast<std::ptrdiff_t>(k));
      Word y(v.begin() + static_cast<std::ptrdiff_t>(k), v.end());
      Poly<S> s = empty();
      for (const auto& [t, c] : rules_[iu].tail) add_term(s, concat({}, t, y), c);
      for (const auto& [t, c] : rules_[iv].tail) add_term(s, concat(x, t, {}), -c);
      if (static_cast<int>(u.size() + y.size()) > bound_) {
        if (!reduce(std::move(s)).empty())
          throw DomainError("relation completion passes path length bound " + std::to_string(bound_) +
                            ": increase bound or ideal not admissible");
        continue;
      }
      work.push_back(std::move(s));
    }
  }

  WordLess less_;
  int bound_;
  std::vector<Rule<S>> rules_;
};

std::vector<int> arrow_ranks(const QuiverSpec& spec) {
  std::vector<int> order(spec.arrows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return spec.arrows[static_cast<std::size_t>(a)].name < spec.arrows[static_cast<std::size_t>(b)].name; });
  std::vector<int> rank(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  return rank;
}

void validate(const QuiverSpec& spec) {
  if (spec.vertices.empty()) throw DomainError("algebra has no vertices");
  if (spec.field.is_prime() && !is_prime(spec.field.p))
    throw DomainError("field characteristic " + std::to_string(spec.field.p) + " is not prime");
  if (spec.path_length_bound < 1) throw DomainError("path_length_bound must be positive");
  std::set<std::string> seen;
  for (const auto& v : spec.vertices)
    if (!seen.insert(v).second) throw DomainError("duplicate vertex '" + v + "'");
  seen.clear();
  for (const auto& a : spec.arrows) {
    if (!seen.insert(a.name).second) throw DomainError("duplicate arrow '" + a.name + "'");
    if (a.source < 0 || a.target < 0 || a.source >= static_cast<int>(spec.vertices.size()) ||
        a.target >= static_cast<int>(spec.vertices.size()))
      throw DomainError("arrow '" + a.name + "' has an unknown endpoint");
  }
  for (const Relation& rel : spec.relations) {
    int s = -1, t = -1;
    for (const RelationTerm& term : rel) {
      std::string text;
      for (int a : term.arrows) text += (text.empty() ? "" : "*") + spec.arrows[static_cast<std::size_t>(a)].name;
      if (term.arrows.size() < 2)
        throw DomainError("relation term '" + text + "' has length < 2; the ideal must lie in J^2");
      for (std::size_t i = 0; i + 1 < term.arrows.size(); ++i)
        if (spec.arrows[static_cast<std::size_t>(term.arrows[i])].target !=
            spec.arrows[static_cast<std::size_t>(term.arrows[i + 1])].source)
          throw DomainError("relation term '" + text + "': paths not composable");
      int ts = spec.arrows[static_cast<std::size_t>(term.arrows.front())].source;
      int tt = spec.arrows[static_cast<std::size_t>(term.arrows.back())].target;
      if (s >= 0 && (ts != s || tt != t)) throw DomainError("relation mixes paths with different endpoints");
      s = ts;
      t = tt;
    }
  }
}

template <class S>
std::vector<Rule<S>> complete(const QuiverSpec& spec, const std::vector<int>& rank) {
  Completion<S> comp(&rank, spec.path_length_bound);
  std::deque<Poly<S>> work;
  for (const Relation& rel : spec.relations) {
    Poly<S> f = comp.empty();
    for (const RelationTerm& term : rel) add_term(f, term.arrows, ScalarTraits<S>::from_rational(term.coeff, spec.field));
    work.push_back(std::move(f));
  }
  comp.run(std::move(work));
  std::vector<Rule<S>> live;
  for (const Rule<S>& r : comp.rules())
    if (r.alive) live.push_back(r);
  return live;
}

std::vector<Path> enumerate_basis(const QuiverSpec& spec, const std::vector<Word>& leads, const std::vector<int>& rank) {
  std::vector<Path> basis;
  for (int v = 0; v < static_cast<int>(spec.vertices.size()); ++v) basis.push_back({v, v, {}});
  std::vector<Path> layer = basis;
  WordLess less{&rank};
  while (!layer.empty()) {
    std::vector<Path> next;
    for (const Path& p : layer)
      for (int a = 0; a < static_cast<int>(spec.arrows.size()); ++a) {
        const ArrowSpec& ar = spec.arrows[static_cast<std::size_t>(a)];
        if (ar.source != p.target) continue;
        Path q{p.source, ar.target, p.arrows};
        q.arrows.push_back(a);
        bool reducible = false;
        for (const Word& u : leads)
          if (u.size() <= q.arrows.size() && std::equal(u.begin(), u.end(), q.arrows.end() - static_cast<std::ptrdiff_t>(u.size()))) {
            reducible = true;
            break;
          }
        if (reducible) continue;
        if (static_cast<int>(q.length()) >= spec.path_length_bound)
          throw DomainError("basis generation reached path length bound " + std::to_string(spec.path_length_bound) +
                            ": increase bound or ideal not admissible");
        next.push_back(std::move(q));
      }
    std::sort(next.begin(), next.end(), [&](const Path& a, const Path& b) { return less(a.arrows, b.arrows); });
    basis.insert(basis.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return basis;
}

template <class S>
std::vector<Path> basis_over(const QuiverSpec& spec) {
  std::vector<int> rank = arrow_ranks(spec);
  std::vector<Word> leads;
  for (const auto& r : complete<S>(spec, rank)) leads.push_back(r.lead);
  return enumerate_basis(spec, leads, rank);
}

}  // namespace

template <class S>
Elem<S> add(const Elem<S>& a, const Elem<S>& b, const S& f) {
  Elem<S> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, f * b[j].second);
      ++j;
    } else {
      S v = a[i].second + f * b[j].second;
      if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

template <class S>
Elem<S> scale(const Elem<S>& a, const S& f) {
  if (f.is_zero()) return {};
  Elem<S> out = a;
  for (auto& e : out) e.second *= f;
  return out;
}

template <class S>
Elem<S> Algebra<S>::multiply(const Elem<S>& x, const Elem<S>& y) const {
  if (x.empty() || y.empty()) return {};
  std::vector<S> acc(static_cast<std::size_t>(dim()), S(0));
  std::vector<char> hit(static_cast<std::size_t>(dim()), 0);
  for (const auto& [b, cb] : x)
    for (const auto& [c, cc] : y) {
      if (target(b) != source(c)) continue;
      S f = cb * cc;
      for (const auto& [d, cd] : product(b, c)) {
        acc[static_cast<std::size_t>(d)] += f * cd;
        hit[static_cast<std::size_t>(d)] = 1;
      }
    }
  Elem<S> out;
  for (int d = 0; d < dim(); ++d)
    if (hit[static_cast<std::size_t>(d)] && !acc[static_cast<std::size_t>(d)].is_zero())
      out.emplace_back(d, acc[static_cast<std::size_t>(d)]);
  return out;
}

template <class S>
Elem<S> Algebra<S>::one() const {
  Elem<S> e;
  for (int v = 0; v < n(); ++v) e.emplace_back(v, S(1));
  return e;
}

template <class S>
int Algebra<S>::vertex_index(const std::string& label) const {
  for (int v = 0; v < n(); ++v)
    if (vertices[static_cast<std::size_t>(v)] == label) return v;
  return -1;
}

template <class S>
int Algebra<S>::arrow_by_name(const std::string& name) const {
  for (int a = 0; a < static_cast<int>(arrows.size()); ++a)
    if (arrows[static_cast<std::size_t>(a)].name == name) return a;
  return -1;
}

template <class S>
int Algebra<S>::find(const Path& p) const {
  if (p.arrows.empty()) return p.source;
  auto it = index_.find(p.arrows);
  return it == index_.end() ? -1 : it->second;
}

template <class S>
std::string Algebra<S>::path_name(int b) const {
  const Path& p = basis[static_cast<std::size_t>(b)];
  if (p.arrows.empty()) return "e" + vertices[static_cast<std::size_t>(p.source)];
  std::string s;
  for (int a : p.arrows) s += (s.empty() ? "" : "*") + arrows[static_cast<std::size_t>(a)].name;
  return s;
}

template <class S>
Algebra<S> build_algebra(const QuiverSpec& spec) {
  validate(spec);
  if (!ScalarTraits<S>::matches(spec.field))
    throw DomainError("algebra over " + spec.field.str() + " requested with the wrong scalar type");
  std::vector<int> rank = arrow_ranks(spec);
  std::vector<Rule<S>> rules = complete<S>(spec, rank);
  std::vector<Word> leads;
  for (const auto& r : rules) leads.push_back(r.lead);

  Algebra<S> alg;
  alg.field = spec.field;
  alg.vertices = spec.vertices;
  alg.arrows = spec.arrows;
  alg.basis = enumerate_basis(spec, leads, rank);
  for (const Relation& rel : spec.relations) {
    std::vector<std::pair<S, std::vector<int>>> r;
    for (const RelationTerm& t : rel) r.emplace_back(alg.from_rational(t.coeff), t.arrows);
    alg.relations.push_back(std::move(r));
  }
  const int d = alg.dim(), n = alg.n();
  for (int b = n; b < d; ++b) alg.index_[alg.basis[static_cast<std::size_t>(b)].arrows] = b;
  for (int a = 0; a < static_cast<int>(spec.arrows.size()); ++a) alg.arrow_basis_.push_back(alg.index_.at({a}));
  alg.between_.assign(static_cast<std::size_t>(n * n), {});
  for (int b = 0; b < d; ++b) alg.between_[static_cast<std::size_t>(alg.source(b) * n + alg.target(b))].push_back(b);

  alg.table_.assign(static_cast<std::size_t>(d * d), {});
  for (int b = 0; b < d; ++b)
    for (int c = 0; c < d; ++c) {
      if (alg.target(b) != alg.source(c)) continue;
      const Path& pb = alg.basis[static_cast<std::size_t>(b)];
      const Path& pc = alg.basis[static_cast<std::size_t>(c)];
      Elem<S>& out = alg.table_[static_cast<std::size_t>(b * d + c)];
      if (pb.arrows.empty()) {
        out = {{c, S(1)}};
        continue;
      }
      if (pc.arrows.empty()) {
        out = {{b, S(1)}};
        continue;
      }
      Word w = concat(pb.arrows, pc.arrows, {});
      auto it = alg.index_.find(w);
      if (it != alg.index_.end()) {
        out = {{it->second, S(1)}};
        continue;
      }
      Poly<S> f(WordLess{&rank});
      f.emplace(w, S(1));
      f = rewrite(std::move(f), rules);
      for (const auto& [t, tc] : f) out.emplace_back(alg.index_.at(t), tc);
      std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    }
  return alg;
}

std::vector<Path> path_basis(const QuiverSpec& spec) {
  validate(spec);
  if (spec.field.is_prime()) return basis_over<Zp>(spec);
  return basis_over<Rational>(spec);
}

template <class S>
bool check_algebra_axioms(const Algebra<S>& alg) {
  const int d = alg.dim(), n = alg.n();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Elem<S> p = alg.multiply(alg.unit(i), alg.unit(j));
      Elem<S> want = i == j ? alg.unit(i) : Elem<S>{};
      if (p != want) return false;
    }
  for (int b = 0; b < d; ++b) {
    if (alg.multiply(alg.one(), alg.unit(b)) != alg.unit(b)) return false;
    if (alg.multiply(alg.unit(b), alg.one()) != alg.unit(b)) return false;
    Elem<S> sandwich = alg.multiply(alg.multiply(alg.unit(alg.source(b)), alg.unit(b)), alg.unit(alg.target(b)));
    if (sandwich != alg.unit(b)) return false;
  }
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c) {
        Elem<S> l = alg.multiply(alg.multiply(alg.unit(a), alg.unit(b)), alg.unit(c));
        Elem<S> r = alg.multiply(alg.unit(a), alg.multiply(alg.unit(b), alg.unit(c)));
        if (l != r) return false;
      }
  return true;
}

#define TTILT_INSTANTIATE(S)                                             \
  template class Algebra<S>;                                             \
  template Algebra<S> build_algebra<S>(const QuiverSpec&);               \
  template bool check_algebra_axioms<S>(const Algebra<S>&);              \
  template Elem<S> add<S>(const Elem<S>&, const Elem<S>&, const S&);     \
  template Elem<S> scale<S>(const Elem<S>&, const S&);

TTILT_INSTANTIATE(Rational)
TTILT_INSTANTIATE(Zp)

}  // namespace ttilt
