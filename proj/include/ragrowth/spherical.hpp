// Spherical growth functions of graph monoids, right-angled Artin groups and
// right-angled Coxeter groups.

#ifndef RAGROWTH_SPHERICAL_HPP
#define RAGROWTH_SPHERICAL_HPP

#include "ragrowth/graph.hpp"
#include "ragrowth/matrix.hpp"
#include "ragrowth/rational_function.hpp"
#include "ragrowth/series.hpp"
#include "ragrowth/structure.hpp"

#include <span>
#include <string>
#include <vector>

namespace ragrowth {

/// 1 / p(-t), 1 / p(-2t/(1+t)), 1 / p(-t/(1+t)) for monoid, RAAG, RACG.
RationalFunction spherical_gf_closed(const Graph& g, Structure s);

/// Generating function of the elements whose type lies inside `allowed`:
/// p_{G-M}(u) / p_G(u) with u the structure's substitution.
RationalFunction spherical_gf_restricted(const Graph& g, Structure s, std::span<const int> allowed);

/// B0(i, j) = 1 iff clique j branches to clique i: the new vertex is the
/// largest vertex of clique i.
IntMatrix branching_matrix_strict(const Graph& g, const CliqueIndex& idx);

/// I + B0, I + 2 B0 or B0.
IntMatrix spherical_transfer_matrix(const IntMatrix& strict, Structure s);

/// Per-type counts at length 1: one (two for RAAG) on each single-vertex clique.
IntVector length_one_vector(const CliqueIndex& idx, Structure s);

/// Element counts by (length, type) for lengths 0..order. Length 0 holds the
/// identity with empty type.
TypeCountTable spherical_type_series(const Graph& g, Structure s, int order);

struct RelationMismatch {
  std::string relation;
  /// Clique the per-type relation was checked on, or "total".
  std::string scope;
  int n = 0;
  Integer expected;
  Integer actual;
};

struct RelationReport {
  int order = 0;
  std::vector<std::string> relations;
  std::size_t checks = 0;
  std::vector<RelationMismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
};

/// Checks M^C(t) = W^C(t/(1-t)), A^C(t) = W^C(2t/(1-t)), W^C(t) = M^C(t/(1+t)),
/// A^C(t) = M^C(2t/(1+t)) per non-empty clique C and for the summed series.
RelationReport verify_functional_relations(const Graph& g, int order);

}  // namespace ragrowth

#endif  // RAGROWTH_SPHERICAL_HPP
