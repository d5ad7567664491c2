// Geodesic growth of link-regular graphs from the link profile alone.
//
// For a k-clique C and S ⊆ C with |S| = r, G(k, r) counts the vertices outside C
// adjacent to all of S and F(k, r) those whose neighbourhood meets C in exactly
// S. Both depend only on (k, r) when the graph is link-regular, and C weakly
// branches to binom(k, r) F(k, r) cliques of size r + 1.

#ifndef RAGROWTH_LINK_REGULAR_HPP
#define RAGROWTH_LINK_REGULAR_HPP

#include "ragrowth/graph.hpp"
#include "ragrowth/matrix.hpp"
#include "ragrowth/rational_function.hpp"
#include "ragrowth/structure.hpp"

#include <array>
#include <vector>

namespace ragrowth {

/// Throws std::invalid_argument unless L has d + 1 entries, L[0] = m and all entries are >= 0.
void validate_profile(const LinkProfile& profile);

/// L_r - (k - r). Throws std::domain_error("inconsistent profile") if negative.
long g_count(const LinkProfile& profile, int k, int r);

/// sum_{i=r}^{k} (-1)^{i-r} binom(k-r, i-r) G(k, i). Throws std::domain_error if negative.
long f_count(const LinkProfile& profile, int k, int r);

struct BranchCountFns {
  int d = 0;
  /// g[k][r], f[k][r] for 0 <= r <= k <= d.
  std::vector<std::vector<long>> g;
  std::vector<std::vector<long>> f;
};

BranchCountFns branch_count_fns(const LinkProfile& profile);

/// d x d matrix with entry (i, j) = binom(j, i-1) F(j, i-1), 1-based.
IntMatrix reduced_weak_matrix(const LinkProfile& profile);
/// diag(1, 2, ..., d).
IntMatrix reduced_diagonal_matrix(const LinkProfile& profile);
/// (m, 0, ..., 0), doubled for RAAG.
IntVector reduced_start_vector(const LinkProfile& profile, Structure s);

/// Geodesic word counts by (length, type cardinality).
struct AggregatedCounts {
  Structure structure = Structure::Monoid;
  int order = 0;
  /// counts[n][k] for n = 0..order, k = 0..d; counts[0][0] = 1 is the empty word.
  std::vector<std::vector<Integer>> counts;

  std::vector<Integer> totals() const;
};

AggregatedCounts aggregated_geodesic_series(const LinkProfile& profile, Structure s, int order);

RationalFunction geodesic_gf_link_regular(const LinkProfile& profile, Structure s);

struct EquivalenceReport {
  IntPolynomial clique_polynomial_1;
  IntPolynomial clique_polynomial_2;
  bool same_clique_polynomial = false;
  /// Full-method geodesic growth functions, indexed like kAllStructures.
  /// Filled only when the clique polynomials agree.
  std::array<RationalFunction, 3> gf_1;
  std::array<RationalFunction, 3> gf_2;

  bool functions_equal() const { return gf_1 == gf_2; }
};

/// Throws GraphError if either graph is not link-regular.
EquivalenceReport profile_equivalence_check(const Graph& g1, const Graph& g2);

}  // namespace ragrowth

#endif  // RAGROWTH_LINK_REGULAR_HPP
