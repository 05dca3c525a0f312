#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>

#include "ttilt/errors.hpp"
#include "ttilt/io.hpp"

using namespace ttilt;

namespace {

struct Options {
  std::string algebra;
  std::string module;
  std::string pair;
  std::string format = "table";
  std::uint64_t seed = 0;
  std::size_t max_nodes = 1000000;
  int max_depth = -1;
  int index = 0;
  std::vector<int> dim_bound;
};

// Exits with status 2: the input could not be read or understood.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string load(const std::string& path, const char* what) {
  if (path.empty()) throw UsageError(std::string("--") + what + " is required");
  try {
    return read_file(path);
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
}

std::string dims_str(const std::vector<int>& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

template <class S>
void print_module(const Algebra<S>& alg, const Representation<S>& m, std::ostream& out) {
  out << "dim vector " << dims_str(m.dims) << "\n";
  for (std::size_t a = 0; a < alg.arrows.size(); ++a) {
    if (m.maps[a].size() == 0) continue;
    out << "  " << alg.arrows[a].name << ":";
    for (Index i = 0; i < m.maps[a].rows(); ++i) {
      out << (i ? " |" : "");
      for (Index j = 0; j < m.maps[a].cols(); ++j) out << " " << ScalarTraits<S>::str(m.maps[a](i, j));
    }
    out << "\n";
  }
}

template <class S>
void print_pair(const Algebra<S>& alg, const TauRigidPair<S>& p, const Options& opt) {
  if (opt.format == "json") {
    std::cout << pair_to_json(alg, p).dump(2) << "\n";
    return;
  }
  std::cout << "module summands: " << p.module_summands.size() << "\n";
  for (const auto& m : p.module_summands) print_module(alg, m, std::cout);
  std::cout << "projective part: " << dims_str(p.projective_part) << "\n";
  std::cout << "g-matrix: " << g_matrix_label(sorted_columns(g_matrix(alg, pair_complexes(alg, p)))) << "\n";
}

template <class S>
TauRigidPair<S> input_pair(const Algebra<S>& alg, const Options& opt) {
  if (!opt.pair.empty()) {
    std::string text = opt.pair.front() == '{' ? opt.pair : load(opt.pair, "pair");
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw ParseError(std::string("pair: ") + e.what());
    }
    return pair_from_json(alg, j, opt.seed);
  }
  if (!opt.module.empty()) return make_pair(alg, parse_module(alg, load(opt.module, "module")), ProjectivePart{}, opt.seed);
  throw UsageError("--pair or --module is required");
}

template <class S>
int run(const std::string& command, const QuiverSpec& spec, const Options& opt) {
  Algebra<S> alg = build_algebra<S>(spec);
  if (command == "check") {
    Representation<S> m = parse_module(alg, load(opt.module, "module"));
    Representation<S> t = tau(alg, m);
    bool rigid = hom_dim(alg, m, t) == 0;
    if (opt.format == "json") {
      std::cout << Json{{"tau_rigid", rigid}, {"dim_tau", t.total_dim()}, {"tau_dim_vector", t.dims}}.dump(2) << "\n";
    } else {
      std::cout << "tau-rigid: " << (rigid ? "true" : "false") << "\n";
      std::cout << "dim tau M: " << t.total_dim() << "\n";
    }
  } else if (command == "tau") {
    Representation<S> t = tau(alg, parse_module(alg, load(opt.module, "module")));
    if (opt.format == "json")
      std::cout << module_to_json(alg, t).dump(2) << "\n";
    else
      print_module(alg, t, std::cout);
  } else if (command == "enumerate") {
    EnumerationLimits lim{opt.max_nodes, opt.max_depth};
    HasseGraph<S> g = enumerate_sttilt(alg, lim);
    if (opt.format == "json") {
      std::cout << graph_to_json(alg, g).dump(2) << "\n";
    } else if (opt.format == "dot") {
      std::cout << graph_to_dot(alg, g);
    } else {
      std::cout << "pairs: " << g.nodes.size() << (g.complete ? " (complete)" : " (incomplete)") << "\n";
      for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        TauRigidPair<S> p = pair_from_complexes(alg, g.nodes[i].summands);
        std::cout << i << "  g " << g_matrix_label(g.nodes[i].key) << "  M";
        for (const auto& m : p.module_summands) std::cout << " " << dims_str(m.dims);
        std::cout << "  P " << dims_str(p.projective_part) << "\n";
      }
      std::cout << "edges: " << g.edges.size() << "\n";
      for (const auto& e : g.edges) std::cout << e.src << " -> " << e.dst << "  [" << e.index << "]\n";
    }
  } else if (command == "mutate") {
    TauRigidPair<S> p = input_pair(alg, opt);
    Mutation<S> m = mutate(alg, p, opt.index);
    const char* dir = m.direction == Direction::down ? "down" : "up";
    if (opt.format == "json") {
      std::cout << Json{{"pair", pair_to_json(alg, m.pair)}, {"direction", dir}}.dump(2) << "\n";
    } else {
      print_pair(alg, m.pair, opt);
      std::cout << "direction: " << dir << "\n";
    }
  } else if (command == "bongartz") {
    print_pair(alg, bongartz_completion(alg, input_pair(alg, opt)), opt);
  } else if (command == "cocompletion") {
    print_pair(alg, minimal_completion(alg, input_pair(alg, opt)), opt);
  } else if (command == "gvectors") {
    TauRigidPair<S> p = input_pair(alg, opt);
    auto cs = pair_complexes(alg, p);
    auto g = g_matrix(alg, cs);
    if (opt.format == "json") {
      Json out = Json::array();
      for (std::size_t i = 0; i < cs.size(); ++i) out.push_back({{"g_vector", g[i]}, {"complex", complex_to_json(alg, cs[i])}});
      std::cout << out.dump(2) << "\n";
    } else {
      for (const auto& col : g) std::cout << dims_str(col) << "\n";
    }
  } else if (command == "tilting") {
    Representation<S> m = parse_module(alg, load(opt.module, "module"));
    bool t = is_classical_tilting(alg, m);
    if (opt.format == "json")
      std::cout << Json{{"classical_tilting", t}}.dump(2) << "\n";
    else
      std::cout << "classical tilting: " << (t ? "true" : "false") << "\n";
  }
  return 0;
}

int run_oracle(const QuiverSpec& spec, const Options& opt) {
  OracleConfig cfg;
  cfg.dim_bound = opt.dim_bound;
  if (spec.field.is_prime()) cfg.prime = spec.field.p;
  OracleResult r = brute_force_sttilt(spec, cfg);
  if (opt.format == "json") {
    std::cout << oracle_to_json(spec, r).dump(2) << "\n";
    return 0;
  }
  std::cout << "field: Fp:" << cfg.prime << "\n";
  std::cout << "indecomposables: " << r.indecomposables.size() << "\n";
  for (std::size_t i = 0; i < r.indecomposables.size(); ++i)
    std::cout << "  " << dims_str(r.indecomposables[i].dims) << (r.tau_rigid[i] ? "  tau-rigid" : "") << "\n";
  std::cout << "pairs: " << r.pairs.size() << "\n";
  for (std::size_t i = 0; i < r.pairs.size(); ++i) std::cout << i << "  g " << g_matrix_label(r.pairs[i].g_matrix) << "\n";
  std::cout << "edges: " << r.edges.size() << "\n";
  for (const auto& [a, b] : r.edges) std::cout << a << " -> " << b << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Support tau-tilting pairs of bound quiver algebras"};
  app.require_subcommand(1);
  Options opt;
  struct Sub {
    const char* name;
    const char* help;
    bool module, pair, limits, index, bound;
  };
  const Sub subs[] = {
      {"check", "tau-rigidity of a module and dim tau M", true, false, false, false, false},
      {"tau", "Auslander-Reiten translate of a module", true, false, false, false, false},
      {"enumerate", "Hasse quiver of support tau-tilting pairs", false, false, true, false, false},
      {"mutate", "mutate a support tau-tilting pair at one summand", true, true, false, true, false},
      {"bongartz", "largest completion of a tau-rigid pair", true, true, false, false, false},
      {"cocompletion", "smallest completion of a tau-rigid pair", true, true, false, false, false},
      {"gvectors", "g-vectors of the summands of a pair", true, true, false, false, false},
      {"oracle", "brute-force enumeration over a prime field", false, false, false, false, true},
      {"tilting", "whether a module is classical tilting", true, false, false, false, false},
  };
  for (const Sub& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("--algebra", opt.algebra, "algebra file")->required();
    sub->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"table", "json", "dot"}));
    sub->add_option("--seed", opt.seed, "seed for idempotent search");
    sub->add_option("--max-nodes", opt.max_nodes, "node limit for enumeration");
    if (s.module) sub->add_option("--module", opt.module, "module file");
    if (s.pair) sub->add_option("--pair", opt.pair, "pair as a JSON file or inline JSON");
    if (s.limits) sub->add_option("--max-depth", opt.max_depth, "depth limit for enumeration");
    if (s.index) sub->add_option("--index", opt.index, "summand to exchange, 1-based")->required();
    if (s.bound) sub->add_option("--dim-bound", opt.dim_bound, "per-vertex dimension bound")->delimiter(',');
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  const std::string command = app.get_subcommands().front()->get_name();
  if (opt.format == "dot" && command != "enumerate") {
    std::cerr << "error: --format dot is only available for enumerate\n";
    return 2;
  }
  try {
    QuiverSpec spec = parse_algebra(load(opt.algebra, "algebra"));
    if (command == "oracle") return run_oracle(spec, opt);
    return spec.field.is_prime() ? run<Zp>(command, spec, opt) : run<Rational>(command, spec, opt);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
