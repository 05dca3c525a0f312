#include "ttilt/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>
#include <tuple>

#include "ttilt/errors.hpp"

namespace ttilt {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

ParseError parse_error(int line, const std::string& what) {
  return ParseError("line " + std::to_string(line) + ": " + what);
}

// Splits "key = value" lines, skipping blanks and comments.
std::vector<std::tuple<int, std::string, std::string>> assignments(const std::string& text) {
  std::vector<std::tuple<int, std::string, std::string>> out;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = trim(raw);
    if (s.empty() || s[0] == '#') continue;
    std::size_t eq = s.find('=');
    if (eq == std::string::npos) throw parse_error(line, "expected 'key = value'");
    out.emplace_back(line, trim(s.substr(0, eq)), trim(s.substr(eq + 1)));
  }
  return out;
}

Json json_value(int line, const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error&) {
    throw parse_error(line, "malformed value '" + text + "'");
  }
}

Rational rational_value(int line, const Json& j) {
  try {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
  } catch (const std::exception&) {
  }
  throw parse_error(line, "expected an integer or a \"p/q\" string, got " + j.dump());
}

int label_index(int line, const std::vector<std::string>& labels, const std::string& label) {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw parse_error(line, "unknown vertex '" + label + "'");
  return static_cast<int>(it - labels.begin());
}

Relation parse_relation(int line, const std::vector<ArrowSpec>& arrows, const std::string& text) {
  Relation rel;
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '\t') s += ch;
  if (s.empty()) throw parse_error(line, "empty relation");
  std::size_t pos = 0;
  while (pos < s.size()) {
    Rational sign(1);
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sign = Rational(-1);
      ++pos;
    } else if (!rel.empty()) {
      throw parse_error(line, "expected '+' or '-' in relation '" + text + "'");
    }
    std::size_t end = s.find_first_of("+-", pos);
    std::string term = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    pos = end == std::string::npos ? s.size() : end;
    RelationTerm t{sign, {}};
    std::size_t k = 0;
    bool first = true;
    while (k <= term.size()) {
      std::size_t star = term.find('*', k);
      std::string factor = term.substr(k, star == std::string::npos ? std::string::npos : star - k);
      k = star == std::string::npos ? term.size() + 1 : star + 1;
      if (factor.empty()) throw parse_error(line, "empty factor in relation '" + text + "'");
      if (first && (std::isdigit(static_cast<unsigned char>(factor[0])) != 0)) {
        try {
          t.coeff *= Rational::parse(factor);
        } catch (const std::exception&) {
          throw parse_error(line, "bad coefficient '" + factor + "'");
        }
      } else {
        auto it = std::find_if(arrows.begin(), arrows.end(), [&](const ArrowSpec& a) { return a.name == factor; });
        if (it == arrows.end()) throw parse_error(line, "unknown arrow '" + factor + "'");
        t.arrows.push_back(static_cast<int>(it - arrows.begin()));
      }
      first = false;
    }
    if (t.arrows.empty()) throw parse_error(line, "relation term without a path in '" + text + "'");
    rel.push_back(std::move(t));
  }
  return rel;
}

template <class S>
Json matrix_json(const Matrix<S>& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(ScalarTraits<S>::str(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

template <class S>
Matrix<S> matrix_from_json(const Algebra<S>& alg, int line, const Json& j, Index rows, Index cols) {
  if (!j.is_array() || static_cast<Index>(j.size()) != rows) throw parse_error(line, "matrix needs " + std::to_string(rows) + " rows");
  Matrix<S> m = zero_matrix<S>(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols)
      throw parse_error(line, "matrix rows need " + std::to_string(cols) + " entries");
    for (Index c = 0; c < cols; ++c) m(i, c) = alg.from_rational(rational_value(line, row[static_cast<std::size_t>(c)]));
  }
  return m;
}

Json g_matrix_json(const std::vector<std::vector<int>>& cols) {
  Json out = Json::array();
  for (const auto& c : cols) out.push_back(c);
  return out;
}

// 1-based position of the column of src missing from dst.
int exchanged_index(const std::vector<std::vector<int>>& src, const std::vector<std::vector<int>>& dst) {
  for (std::size_t i = 0; i < src.size(); ++i)
    if (std::find(dst.begin(), dst.end(), src[i]) == dst.end()) return static_cast<int>(i) + 1;
  return 0;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

QuiverSpec parse_algebra(const std::string& text) {
  QuiverSpec spec;
  std::vector<std::pair<int, std::string>> relations;
  bool have_vertices = false;
  static const std::regex field_re(R"((\w+)\s*=\s*"([^"]*)\")");
  for (const auto& [line, key, value] : assignments(text)) {
    if (key == "field") {
      Json j = json_value(line, value);
      std::string f = j.is_string() ? j.get<std::string>() : "";
      if (f == "Q") {
        spec.field = FieldChoice::rationals();
      } else if (f.rfind("Fp:", 0) == 0) {
        try {
          spec.field = FieldChoice::prime(std::stoll(f.substr(3)));
        } catch (const std::exception&) {
          throw parse_error(line, "bad prime in '" + f + "'");
        }
      } else {
        throw parse_error(line, "field must be \"Q\" or \"Fp:<p>\"");
      }
    } else if (key == "vertices") {
      Json j = json_value(line, value);
      if (!j.is_array()) throw parse_error(line, "vertices must be a list");
      for (const auto& v : j) {
        if (!v.is_string()) throw parse_error(line, "vertex labels must be strings");
        spec.vertices.push_back(v.get<std::string>());
      }
      have_vertices = true;
    } else if (key == "arrow") {
      if (!have_vertices) throw parse_error(line, "arrows must follow the vertex list");
      if (value.size() < 2 || value.front() != '{' || value.back() != '}') throw parse_error(line, "arrow needs { ... }");
      std::map<std::string, std::string> fields;
      std::string body = value.substr(1, value.size() - 2);
      for (auto it = std::sregex_iterator(body.begin(), body.end(), field_re); it != std::sregex_iterator(); ++it)
        fields[(*it)[1]] = (*it)[2];
      for (const char* k : {"name", "source", "target"})
        if (!fields.count(k)) throw parse_error(line, std::string("arrow is missing ") + k);
      for (const auto& a : spec.arrows)
        if (a.name == fields["name"]) throw parse_error(line, "duplicate arrow '" + a.name + "'");
      spec.arrows.push_back({fields["name"], label_index(line, spec.vertices, fields["source"]),
                             label_index(line, spec.vertices, fields["target"])});
    } else if (key == "relations") {
      Json j = json_value(line, value);
      if (!j.is_array()) throw parse_error(line, "relations must be a list");
      for (const auto& r : j) {
        if (!r.is_string()) throw parse_error(line, "relations must be strings");
        relations.emplace_back(line, r.get<std::string>());
      }
    } else if (key == "path_length_bound") {
      Json j = json_value(line, value);
      if (!j.is_number_integer() || j.get<int>() < 1) throw parse_error(line, "path_length_bound must be a positive integer");
      spec.path_length_bound = j.get<int>();
    } else {
      throw parse_error(line, "unknown key '" + key + "'");
    }
  }
  if (spec.vertices.empty()) throw ParseError("no vertices given");
  for (const auto& [line, r] : relations) spec.relations.push_back(parse_relation(line, spec.arrows, r));
  return spec;
}

template <class S>
Representation<S> parse_module(const Algebra<S>& alg, const std::string& text) {
  Representation<S> m;
  std::vector<std::pair<int, Json>> blocks(alg.arrows.size(), {0, Json()});
  for (const auto& [line, key, value] : assignments(text)) {
    Json j = json_value(line, value);
    if (key == "dim_vector") {
      if (!j.is_array() || static_cast<int>(j.size()) != alg.n())
        throw parse_error(line, "dim_vector needs " + std::to_string(alg.n()) + " entries");
      m.dims.clear();
      for (const auto& d : j) {
        if (!d.is_number_integer() || d.get<int>() < 0) throw parse_error(line, "dimensions must be nonnegative integers");
        m.dims.push_back(d.get<int>());
      }
    } else {
      int a = alg.arrow_by_name(key);
      if (a < 0) throw parse_error(line, "unknown arrow '" + key + "'");
      blocks[static_cast<std::size_t>(a)] = {line, j};
    }
  }
  if (m.dims.empty()) throw ParseError("module file has no dim_vector");
  for (std::size_t a = 0; a < alg.arrows.size(); ++a) {
    const Index r = m.dims[static_cast<std::size_t>(alg.arrows[a].source)];
    const Index c = m.dims[static_cast<std::size_t>(alg.arrows[a].target)];
    const auto& [line, j] = blocks[a];
    m.maps.push_back(j.is_null() ? zero_matrix<S>(r, c) : matrix_from_json(alg, line, j, r, c));
  }
  if (!satisfies_relations(alg, m)) throw DomainError("module does not satisfy the relations");
  return m;
}

template <class S>
Json module_to_json(const Algebra<S>& alg, const Representation<S>& m) {
  Json j;
  j["dim_vector"] = m.dims;
  Json mats = Json::object();
  for (std::size_t a = 0; a < alg.arrows.size(); ++a) mats[alg.arrows[a].name] = matrix_json(m.maps[a]);
  j["matrices"] = mats;
  return j;
}

template <class S>
Representation<S> module_from_json(const Algebra<S>& alg, const Json& j) {
  if (!j.is_object() || !j.contains("dim_vector")) throw ParseError("module object needs dim_vector");
  Representation<S> m;
  for (const auto& d : j["dim_vector"]) m.dims.push_back(d.get<int>());
  if (static_cast<int>(m.dims.size()) != alg.n()) throw ParseError("dim_vector has the wrong length");
  const Json mats = j.value("matrices", Json::object());
  for (std::size_t a = 0; a < alg.arrows.size(); ++a) {
    const Index r = m.dims[static_cast<std::size_t>(alg.arrows[a].source)];
    const Index c = m.dims[static_cast<std::size_t>(alg.arrows[a].target)];
    m.maps.push_back(mats.contains(alg.arrows[a].name) ? matrix_from_json(alg, 0, mats[alg.arrows[a].name], r, c)
                                                       : zero_matrix<S>(r, c));
  }
  if (!satisfies_relations(alg, m)) throw DomainError("module does not satisfy the relations");
  return m;
}

template <class S>
Json pair_to_json(const Algebra<S>& alg, const TauRigidPair<S>& p) {
  Json j;
  Json ms = Json::array();
  for (const auto& m : p.module_summands) ms.push_back(module_to_json(alg, m));
  j["module_summands"] = ms;
  j["projective_part"] = p.projective_part;
  j["g_matrix"] = g_matrix_json(sorted_columns(g_matrix(alg, pair_complexes(alg, p))));
  return j;
}

template <class S>
TauRigidPair<S> pair_from_json(const Algebra<S>& alg, const Json& j, std::uint64_t seed) {
  if (!j.is_object()) throw ParseError("pair must be a JSON object");
  Representation<S> m = zero_module(alg);
  for (const auto& x : j.value("module_summands", Json::array())) m = direct_sum(m, module_from_json(alg, x));
  ProjectivePart p(static_cast<std::size_t>(alg.n()), 0);
  if (j.contains("projective_part")) {
    const Json& q = j["projective_part"];
    if (!q.is_array() || static_cast<int>(q.size()) != alg.n()) throw ParseError("projective_part has the wrong length");
    for (std::size_t v = 0; v < q.size(); ++v) p[v] = q[v].get<int>();
  }
  return make_pair(alg, m, p, seed);
}

template <class S>
Json complex_to_json(const Algebra<S>& alg, const Complex<S>& c) {
  Complex<S> t = as_two_term(c);
  auto labels = [&](const std::vector<int>& vs) {
    Json out = Json::array();
    for (int v : vs) out.push_back(alg.vertices[static_cast<std::size_t>(v)]);
    return out;
  };
  Json j;
  j["p_minus1"] = labels(t.at(-1));
  j["p_zero"] = labels(t.at(0));
  ProjMap<S> d = t.diff(-1);
  Json rows = Json::array();
  for (std::size_t r = 0; r < d.nrows(); ++r) {
    Json row = Json::array();
    for (std::size_t s = 0; s < d.ncols(); ++s) {
      Json terms = Json::array();
      for (const auto& [b, x] : d.at(r, s)) terms.push_back({alg.path_name(b), ScalarTraits<S>::str(x)});
      row.push_back(terms);
    }
    rows.push_back(row);
  }
  j["d"] = rows;
  return j;
}

template <class S>
Json graph_to_json(const Algebra<S>& alg, const HasseGraph<S>& g) {
  Json j;
  Json nodes = Json::array();
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    TauRigidPair<S> p = pair_from_complexes(alg, g.nodes[i].summands);
    Json n;
    n["id"] = i;
    Json ms = Json::array();
    for (const auto& m : p.module_summands) ms.push_back(module_to_json(alg, m));
    n["module_summands"] = ms;
    n["projective_part"] = p.projective_part;
    n["g_matrix"] = g_matrix_json(g.nodes[i].key);
    nodes.push_back(n);
  }
  Json edges = Json::array();
  for (const auto& e : g.edges) edges.push_back({{"src", e.src}, {"dst", e.dst}, {"index", e.index}});
  j["nodes"] = nodes;
  j["edges"] = edges;
  j["complete"] = g.complete;
  return j;
}

std::string g_matrix_label(const std::vector<std::vector<int>>& columns) {
  std::string s;
  for (const auto& c : columns) {
    s += s.empty() ? "(" : " (";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    s += ")";
  }
  return s;
}

template <class S>
std::string graph_to_dot(const Algebra<S>&, const HasseGraph<S>& g) {
  std::ostringstream out;
  out << "digraph sttilt {\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    out << "  n" << i << " [label=\"" << g_matrix_label(g.nodes[i].key) << "\"];\n";
  for (const auto& e : g.edges) out << "  n" << e.src << " -> n" << e.dst << " [label=\"" << e.index << "\"];\n";
  out << "}\n";
  return out.str();
}

Json oracle_to_json(const QuiverSpec& spec, const OracleResult& r) {
  Json j;
  Json nodes = Json::array();
  for (std::size_t i = 0; i < r.pairs.size(); ++i) {
    const OraclePair& p = r.pairs[i];
    Json n;
    n["id"] = i;
    Json ms = Json::array();
    for (int k : p.modules) {
      const OracleModule& m = r.indecomposables[static_cast<std::size_t>(k)];
      Json mj;
      mj["dim_vector"] = m.dims;
      Json mats = Json::object();
      for (std::size_t a = 0; a < spec.arrows.size(); ++a) {
        const int rows = m.dims[static_cast<std::size_t>(spec.arrows[a].source)];
        const int cols = m.dims[static_cast<std::size_t>(spec.arrows[a].target)];
        Json rj = Json::array();
        for (int x = 0; x < rows; ++x) {
          Json row = Json::array();
          for (int y = 0; y < cols; ++y) row.push_back(std::to_string(m.maps[a][static_cast<std::size_t>(x * cols + y)]));
          rj.push_back(row);
        }
        mats[spec.arrows[a].name] = rj;
      }
      mj["matrices"] = mats;
      ms.push_back(mj);
    }
    n["module_summands"] = ms;
    n["projective_part"] = p.projective;
    n["g_matrix"] = g_matrix_json(p.g_matrix);
    nodes.push_back(n);
  }
  Json edges = Json::array();
  for (const auto& [a, b] : r.edges)
    edges.push_back({{"src", a},
                     {"dst", b},
                     {"index", exchanged_index(r.pairs[static_cast<std::size_t>(a)].g_matrix,
                                               r.pairs[static_cast<std::size_t>(b)].g_matrix)}});
  j["nodes"] = nodes;
  j["edges"] = edges;
  j["complete"] = true;
  return j;
}

#define TTILT_INSTANTIATE(S)                                                                 \
  template Representation<S> parse_module<S>(const Algebra<S>&, const std::string&);         \
  template Json module_to_json<S>(const Algebra<S>&, const Representation<S>&);              \
  template Representation<S> module_from_json<S>(const Algebra<S>&, const Json&);            \
  template Json pair_to_json<S>(const Algebra<S>&, const TauRigidPair<S>&);                  \
  template TauRigidPair<S> pair_from_json<S>(const Algebra<S>&, const Json&, std::uint64_t); \
  template Json complex_to_json<S>(const Algebra<S>&, const Complex<S>&);                    \
  template Json graph_to_json<S>(const Algebra<S>&, const HasseGraph<S>&);                   \
  template std::string graph_to_dot<S>(const Algebra<S>&, const HasseGraph<S>&);

TTILT_INSTANTIATE(Rational)
TTILT_INSTANTIATE(Zp)

}  // namespace ttilt
