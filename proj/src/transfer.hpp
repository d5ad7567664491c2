// Shared helper: per-type count tables from a transfer matrix.

#ifndef RAGROWTH_SRC_TRANSFER_HPP
#define RAGROWTH_SRC_TRANSFER_HPP

#include "ragrowth/graph.hpp"
#include "ragrowth/matrix.hpp"
#include "ragrowth/resolvent.hpp"
#include "ragrowth/structure.hpp"

#include <stdexcept>

namespace ragrowth::detail {

/// Table with (0, {}) -> 1 and (n, idx[i]) -> (transfer^{n-1} start)_i.
inline CountTable counts_from_transfer(const CliqueIndex& idx, Structure s, const IntMatrix& transfer,
                                       const IntVector& start, int order) {
  if (order < 0) throw std::invalid_argument("order must be non-negative");
  CountTable table(s, order);
  table.add(0, Clique{}, 1);
  const auto vectors = resolvent_apply(transfer, start, order);
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    for (std::size_t i = 0; i < idx.size(); ++i) table.add(static_cast<int>(k) + 1, idx[i], vectors[k][i]);
  }
  return table;
}

}  // namespace ragrowth::detail

#endif  // RAGROWTH_SRC_TRANSFER_HPP
