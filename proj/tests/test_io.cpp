#include <gtest/gtest.h>

#include <set>

#include "ttilt/errors.hpp"
#include "ttilt/io.hpp"

using namespace ttilt;

namespace {

std::string corpus_file(const std::string& name) { return read_file(std::string(TTILT_CORPUS_DIR) + "/" + name); }

const char* a2_text = R"(field = "Q"
vertices = ["1", "2"]
arrow = { name = "a", source = "1", target = "2" }
)";

}  // namespace

TEST(Io, ParsesAlgebraFiles) {
  QuiverSpec a2 = parse_algebra(a2_text);
  EXPECT_EQ(a2.vertices.size(), 2u);
  ASSERT_EQ(a2.arrows.size(), 1u);
  EXPECT_EQ(a2.arrows[0].source, 0);
  EXPECT_EQ(a2.arrows[0].target, 1);
  EXPECT_EQ(build_algebra<Rational>(a2).dim(), 3);

  QuiverSpec sq = parse_algebra(corpus_file("square.alg"));
  ASSERT_EQ(sq.relations.size(), 1u);
  ASSERT_EQ(sq.relations[0].size(), 2u);
  EXPECT_EQ(sq.relations[0][1].coeff, Rational(-1));
  EXPECT_EQ(build_algebra<Rational>(sq).dim(), 9);

  QuiverSpec f2 = parse_algebra(corpus_file("a2_f2.alg"));
  EXPECT_TRUE(f2.field.is_prime());
  EXPECT_EQ(f2.field.p, 2);
}

TEST(Io, RelationCoefficients) {
  std::string text = std::string(R"(field = "Q"
vertices = ["1", "2", "3", "4"]
arrow = { name = "a", source = "1", target = "2" }
arrow = { name = "b", source = "2", target = "4" }
arrow = { name = "c", source = "1", target = "3" }
arrow = { name = "d", source = "3", target = "4" }
relations = ["a*b - 2*c*d", "1/2*a*b - 3*c*d"]
path_length_bound = 10
)");
  QuiverSpec q = parse_algebra(text);
  ASSERT_EQ(q.relations.size(), 2u);
  EXPECT_EQ(q.relations[0][1].coeff, Rational(-2));
  EXPECT_EQ(q.relations[1][0].coeff, Rational(1, 2));
  EXPECT_EQ(q.relations[1][1].coeff, Rational(-3));
  EXPECT_EQ(q.path_length_bound, 10);
}

TEST(Io, RejectsMalformedInput) {
  EXPECT_THROW(parse_algebra("field = \"R\"\nvertices = [\"1\"]\n"), ParseError);
  EXPECT_THROW(parse_algebra("vertices = [\"1\"]\nbogus = 3\n"), ParseError);
  EXPECT_THROW(parse_algebra("vertices = [\"1\"\n"), ParseError);
  EXPECT_THROW(parse_algebra("vertices = [\"1\"]\narrow = { name = \"a\", source = \"1\", target = \"9\" }\n"), ParseError);
  EXPECT_THROW(parse_algebra(std::string(a2_text) + "relations = [\"a*z\"]\n"), ParseError);
  EXPECT_THROW(parse_algebra("field = \"Q\"\n"), ParseError);
  // Not composable: a ends at 2 and starts at 1.
  EXPECT_THROW(build_algebra<Rational>(parse_algebra(std::string(a2_text) + "relations = [\"a*a\"]\n")), DomainError);
  EXPECT_THROW(build_algebra<Zp>(parse_algebra("field = \"Fp:4\"\nvertices = [\"1\"]\n")), DomainError);
}

TEST(Io, ParsesModules) {
  Algebra<Rational> alg = build_algebra<Rational>(parse_algebra(a2_text));
  auto s1 = parse_module(alg, corpus_file("s1.mod"));
  EXPECT_EQ(s1.dims, (std::vector<int>{1, 0}));
  auto p1 = parse_module(alg, corpus_file("p1.mod"));
  EXPECT_TRUE(is_projective(alg, p1));
  auto half = parse_module(alg, "dim_vector = [1, 1]\na = [[\"1/2\"]]\n");
  EXPECT_EQ(half.maps[0](0, 0), Rational(1, 2));
  EXPECT_THROW(parse_module(alg, "dim_vector = [1]\n"), ParseError);
  EXPECT_THROW(parse_module(alg, "dim_vector = [1, 1]\na = [[1, 2]]\n"), ParseError);
  EXPECT_THROW(parse_module(alg, "dim_vector = [1, 1]\nq = [[1]]\n"), ParseError);
  Algebra<Rational> dual = build_algebra<Rational>(parse_algebra(corpus_file("dual.alg")));
  EXPECT_THROW(parse_module(dual, "dim_vector = [1]\nx = [[1]]\n"), DomainError);
}

TEST(Io, PairJsonRoundTrip) {
  Algebra<Rational> alg = build_algebra<Rational>(parse_algebra(a2_text));
  auto p = pair_from_json(alg, Json::parse(corpus_file("s1_p2.pair.json")));
  EXPECT_EQ(p.size(), 2);
  EXPECT_TRUE(is_tau_tilting_pair(alg, p));
  Json j = pair_to_json(alg, p);
  auto q = pair_from_json(alg, j);
  EXPECT_EQ(pair_to_json(alg, q), j);
  EXPECT_EQ(j["g_matrix"], Json::parse("[[0,-1],[1,-1]]"));
}

TEST(Io, GraphJsonSchema) {
  Algebra<Rational> alg = build_algebra<Rational>(parse_algebra(a2_text));
  auto g = enumerate_sttilt(alg);
  Json j = graph_to_json(alg, g);
  ASSERT_EQ(j["nodes"].size(), 5u);
  EXPECT_EQ(j["edges"].size(), 5u);
  EXPECT_TRUE(j["complete"].get<bool>());
  for (const auto& n : j["nodes"]) {
    EXPECT_TRUE(n.contains("id"));
    EXPECT_TRUE(n.contains("module_summands"));
    EXPECT_TRUE(n.contains("projective_part"));
    EXPECT_TRUE(n.contains("g_matrix"));
  }
  for (const auto& e : j["edges"]) {
    EXPECT_TRUE(e.contains("src") && e.contains("dst") && e.contains("index"));
  }
  // Every node's modules read back as modules of the algebra.
  for (const auto& n : j["nodes"])
    for (const auto& m : n["module_summands"]) EXPECT_NO_THROW(module_from_json(alg, m));
  std::string dot = graph_to_dot(alg, g);
  EXPECT_EQ(dot.rfind("digraph", 0), 0u);
  EXPECT_EQ(std::count(dot.begin(), dot.end(), '>'), 5);
}

TEST(Io, OracleJsonMatchesEngineJson) {
  for (const std::string name : {"a2.alg", "a3.alg", "preproj_a2.alg", "dual.alg"}) {
    QuiverSpec spec = parse_algebra(corpus_file(name));
    Algebra<Rational> alg = build_algebra<Rational>(spec);
    Json engine = graph_to_json(alg, enumerate_sttilt(alg));
    Json oracle = oracle_to_json(spec, brute_force_sttilt(spec));
    ASSERT_EQ(engine["nodes"].size(), oracle["nodes"].size()) << name;
    for (std::size_t i = 0; i < engine["nodes"].size(); ++i) {
      EXPECT_EQ(engine["nodes"][i]["g_matrix"], oracle["nodes"][i]["g_matrix"]) << name;
      EXPECT_EQ(engine["nodes"][i]["projective_part"], oracle["nodes"][i]["projective_part"]) << name;
    }
    EXPECT_EQ(engine["edges"], oracle["edges"]) << name;
  }
}

TEST(Io, ComplexJson) {
  Algebra<Rational> alg = build_algebra<Rational>(parse_algebra(a2_text));
  auto s1 = parse_module(alg, corpus_file("s1.mod"));
  Json j = complex_to_json(alg, pair_to_complex(alg, s1, ProjectivePart{}));
  EXPECT_EQ(j["p_minus1"], Json::parse(R"(["2"])"));
  EXPECT_EQ(j["p_zero"], Json::parse(R"(["1"])"));
  EXPECT_EQ(j["d"][0][0][0][0], "a");
}
