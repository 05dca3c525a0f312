#pragma once

// Brute-force ground truth for tiny algebras over a prime field. Shares only
// the path algebra with the main engine: module maps, τ, Hom and Fac are all
// recomputed here from their definitions.

#include <cstdint>
#include <utility>
#include <vector>

#include "ttilt/algebra.hpp"
#include "ttilt/modrep.hpp"

namespace ttilt {

struct OracleConfig {
  std::vector<int> dim_bound;  // empty: largest projective or injective dimension per vertex
  std::int64_t prime = 2;
  std::uint64_t ceiling = 100000000;  // candidate arrow-matrix tuples
};

/// Arrow matrices over F_p, row-major, acting on row vectors.
struct OracleModule {
  std::vector<int> dims;
  std::vector<std::vector<std::uint32_t>> maps;
  friend bool operator==(const OracleModule&, const OracleModule&) = default;
};

struct OraclePair {
  std::vector<int> modules;                // indices into OracleResult::indecomposables
  std::vector<int> projective;             // 0/1 per vertex
  std::vector<std::vector<int>> g_matrix;  // columns sorted
};

struct OracleResult {
  std::vector<OracleModule> indecomposables;
  std::vector<bool> tau_rigid;
  std::vector<OraclePair> pairs;            // sorted by g-matrix
  std::vector<std::pair<int, int>> edges;  // covering relations (larger, smaller)
};

std::vector<int> default_dim_bound(const QuiverSpec& spec);

/// All indecomposables up to isomorphism with dimension vector below the bound.
std::vector<OracleModule> brute_force_indecomposables(const QuiverSpec& spec, const OracleConfig& cfg = {});

/// Every support τ-tilting pair built from the brute-force indecomposables.
OracleResult brute_force_sttilt(const QuiverSpec& spec, const OracleConfig& cfg = {});

OracleModule oracle_tau(const QuiverSpec& spec, const OracleModule& m, std::int64_t prime = 2);
int oracle_hom_dim(const QuiverSpec& spec, const OracleModule& m, const OracleModule& n, std::int64_t prime = 2);
std::vector<int> oracle_g_vector(const QuiverSpec& spec, const OracleModule& m, std::int64_t prime = 2);

/// Reads entries 0..p-1 as integers. Throws DomainError if the relations fail
/// over the rationals.
Representation<Rational> lift_to_rationals(const Algebra<Rational>& alg, const OracleModule& m);

}  // namespace ttilt
