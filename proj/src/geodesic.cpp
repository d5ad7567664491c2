#include "ragrowth/geodesic.hpp"

#include "ragrowth/resolvent.hpp"
#include "ragrowth/spherical.hpp"
#include "transfer.hpp"

#include <stdexcept>

namespace ragrowth {

IntMatrix branching_matrix_weak(const Graph& g, const CliqueIndex& idx) {
  IntMatrix b(idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j) {
    const Clique& from = idx[j];
    for (int i = 1; i <= g.node_count(); ++i) {
      if (from.contains(i)) continue;
      b(idx.position(branch_target(g, from, i)), j) = 1;
    }
  }
  return b;
}

IntMatrix diagonal_matrix(const CliqueIndex& idx) {
  IntVector sizes;
  sizes.reserve(idx.size());
  for (const auto& c : idx) sizes.emplace_back(static_cast<unsigned long>(c.size()));
  return IntMatrix::diagonal(sizes);
}

IntMatrix geodesic_transfer_matrix(const IntMatrix& diagonal, const IntMatrix& weak, Structure s) {
  switch (s) {
    case Structure::Monoid:
      return diagonal + weak;
    case Structure::Raag:
      return diagonal + Integer(2) * weak;
    case Structure::Racg:
      return weak;
  }
  throw std::invalid_argument("unknown structure");
}

GeodesicCountTable geodesic_type_series(const Graph& g, Structure s, int order) {
  const CliqueIndex idx = enumerate_cliques(g);
  const IntMatrix transfer = geodesic_transfer_matrix(diagonal_matrix(idx), branching_matrix_weak(g, idx), s);
  return detail::counts_from_transfer(idx, s, transfer, length_one_vector(idx, s), order);
}

RationalFunction geodesic_gf_exact(const Graph& g, Structure s) {
  const CliqueIndex idx = enumerate_cliques(g);
  const IntMatrix transfer = geodesic_transfer_matrix(diagonal_matrix(idx), branching_matrix_weak(g, idx), s);
  const IntVector ones(idx.size(), Integer(1));
  return RationalFunction(IntPolynomial{1}) + resolvent_weighted_sum(transfer, length_one_vector(idx, s), ones);
}

}  // namespace ragrowth
