// Geodesic (reduced-word) growth functions via weak branching of cliques.

#ifndef RAGROWTH_GEODESIC_HPP
#define RAGROWTH_GEODESIC_HPP

#include "ragrowth/graph.hpp"
#include "ragrowth/matrix.hpp"
#include "ragrowth/rational_function.hpp"
#include "ragrowth/structure.hpp"

namespace ragrowth {

/// B1(i, j) = 1 iff clique i is node x together with its neighbours in clique j,
/// for some node x outside clique j.
IntMatrix branching_matrix_weak(const Graph& g, const CliqueIndex& idx);

/// diag(|C_1|, |C_2|, ...).
IntMatrix diagonal_matrix(const CliqueIndex& idx);

/// D + B1, D + 2 B1 or B1.
IntMatrix geodesic_transfer_matrix(const IntMatrix& diagonal, const IntMatrix& weak, Structure s);

/// Reduced-word counts by (length, type) for lengths 0..order.
GeodesicCountTable geodesic_type_series(const Graph& g, Structure s, int order);

/// 1 + 1' t [I - T t]^{-1} v_1 with T the geodesic transfer matrix.
RationalFunction geodesic_gf_exact(const Graph& g, Structure s);

}  // namespace ragrowth

#endif  // RAGROWTH_GEODESIC_HPP
