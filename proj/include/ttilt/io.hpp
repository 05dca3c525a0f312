#pragma once

#include <string>

#include <json.hpp>

#include "ttilt/algebra.hpp"
#include "ttilt/modrep.hpp"
#include "ttilt/oracle.hpp"
#include "ttilt/tautilt.hpp"
#include "ttilt/twoterm.hpp"

namespace ttilt {

using Json = nlohmann::ordered_json;

/// Throws std::runtime_error when the file cannot be read.
std::string read_file(const std::string& path);

/// Line-oriented algebra description:
///   field = "Q" | "Fp:<p>"
///   vertices = ["1", "2"]
///   arrow = { name = "a", source = "1", target = "2" }
///   relations = ["a*b", "a*b - 2*c*d"]
///   path_length_bound = 64
/// Lines starting with '#' are comments.
QuiverSpec parse_algebra(const std::string& text);

/// dim_vector = [d1, ...] followed by one `<arrow> = [[...], ...]` line per
/// nonzero arrow, entries as integers or "p/q" strings.
template <class S>
Representation<S> parse_module(const Algebra<S>& alg, const std::string& text);

template <class S>
Json module_to_json(const Algebra<S>& alg, const Representation<S>& m);
template <class S>
Representation<S> module_from_json(const Algebra<S>& alg, const Json& j);

template <class S>
Json pair_to_json(const Algebra<S>& alg, const TauRigidPair<S>& p);
/// Module summands are decomposed on input.
template <class S>
TauRigidPair<S> pair_from_json(const Algebra<S>& alg, const Json& j, std::uint64_t seed = 0);

template <class S>
Json complex_to_json(const Algebra<S>& alg, const Complex<S>& c);

template <class S>
Json graph_to_json(const Algebra<S>& alg, const HasseGraph<S>& g);
template <class S>
std::string graph_to_dot(const Algebra<S>& alg, const HasseGraph<S>& g);

/// Same schema as graph_to_json.
Json oracle_to_json(const QuiverSpec& spec, const OracleResult& r);

std::string g_matrix_label(const std::vector<std::vector<int>>& columns);

}  // namespace ttilt
