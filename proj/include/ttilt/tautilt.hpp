#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ttilt/modrep.hpp"
#include "ttilt/twoterm.hpp"

namespace ttilt {

/// (M, P) with M given by its indecomposable summands, one per
/// isomorphism class.
template <class S>
struct TauRigidPair {
  std::vector<Representation<S>> module_summands;
  ProjectivePart projective_part;

  int size() const {
    int k = static_cast<int>(module_summands.size());
    for (int m : projective_part) k += m;
    return k;
  }
};

/// Splits M into indecomposables and drops repeated isomorphism classes.
template <class S>
TauRigidPair<S> make_pair(const Algebra<S>& alg, const Representation<S>& m, const ProjectivePart& p,
                          std::uint64_t seed = 0);
template <class S>
Representation<S> module_of(const Algebra<S>& alg, const TauRigidPair<S>& pair);

template <class S>
bool is_tau_rigid_pair(const Algebra<S>& alg, const Representation<S>& m, const ProjectivePart& p);
template <class S>
bool is_tau_rigid_pair(const Algebra<S>& alg, const TauRigidPair<S>& pair);
template <class S>
bool is_tau_tilting_pair(const Algebra<S>& alg, const TauRigidPair<S>& pair);

/// One indecomposable two-term complex per summand: module summands first,
/// then P_v[1] for the projective part.
template <class S>
std::vector<Complex<S>> pair_complexes(const Algebra<S>& alg, const TauRigidPair<S>& pair);
/// The complexes must be indecomposable.
template <class S>
TauRigidPair<S> pair_from_complexes(const Algebra<S>& alg, const std::vector<Complex<S>>& cs);

/// Columns sorted lexicographically: the canonical node key.
std::vector<std::vector<int>> sorted_columns(std::vector<std::vector<int>> m);

template <class S>
TauRigidPair<S> bongartz_completion(const Algebra<S>& alg, const TauRigidPair<S>& pair);
template <class S>
TauRigidPair<S> minimal_completion(const Algebra<S>& alg, const TauRigidPair<S>& pair);

/// Fac U ⊆ Fac T.
template <class S>
bool leq(const Algebra<S>& alg, const TauRigidPair<S>& u, const TauRigidPair<S>& t);

enum class Direction { up, down };

template <class S>
struct Mutation {
  TauRigidPair<S> pair;
  Direction direction;
};

/// Summand i (1-based) in the order of pair_complexes.
template <class S>
Mutation<S> mutate(const Algebra<S>& alg, const TauRigidPair<S>& pair, int i);

/// Mutation of a basic two-term silting object at summand i (0-based):
/// the other completion of the remaining summands, and whether it lies below.
template <class S>
std::pair<std::vector<Complex<S>>, Direction> mutate_silting(const Algebra<S>& alg, const std::vector<Complex<S>>& t,
                                                            std::size_t i);

struct EnumerationLimits {
  std::size_t max_nodes = 1000000;
  int max_depth = -1;  // negative: unlimited
};

template <class S>
struct HasseNode {
  std::vector<Complex<S>> summands;   // ordered by g-vector
  std::vector<std::vector<int>> key;  // g-vectors of the summands, sorted
  int depth = 0;
};

struct HasseEdge {
  int src = 0;
  int dst = 0;
  int index = 0;  // 1-based position of the exchanged summand in src
  friend bool operator==(const HasseEdge&, const HasseEdge&) = default;
};

template <class S>
struct HasseGraph {
  std::vector<HasseNode<S>> nodes;
  std::vector<HasseEdge> edges;
  bool complete = false;
  int max_node = 0;
  int min_node = -1;
};

/// Breadth-first search by downward mutation from (A, 0). Nodes are numbered
/// in key order and edges sorted.
template <class S>
HasseGraph<S> enumerate_sttilt(const Algebra<S>& alg, const EnumerationLimits& limits = {});

struct Finiteness {
  bool finite = false;
  std::size_t count = 0;  // exact when finite, otherwise the number seen
};

template <class S>
Finiteness is_tau_tilting_finite(const Algebra<S>& alg, const EnumerationLimits& limits = {});

template <class S>
bool is_classical_tilting(const Algebra<S>& alg, const Representation<S>& m);

/// Two-term silting objects found by mutation in both directions, told apart
/// by isomorphism alone, with the order Hom(T, U[1]) = 0.
template <class S>
struct SiltingPoset {
  std::vector<std::vector<Complex<S>>> objects;
  std::vector<std::vector<bool>> geq;  // geq[i][j]: objects[i] ≥ objects[j]
  bool complete = false;
};

template <class S>
SiltingPoset<S> enumerate_silting(const Algebra<S>& alg, std::size_t max_objects = 100000);

/// Covering relations of a finite order given by geq.
std::vector<std::pair<int, int>> covering_relations(const std::vector<std::vector<bool>>& geq);

}  // namespace ttilt
