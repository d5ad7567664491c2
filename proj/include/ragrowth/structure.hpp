// The three structures attached to a graph, and tables of counts by type.

#ifndef RAGROWTH_STRUCTURE_HPP
#define RAGROWTH_STRUCTURE_HPP

#include "ragrowth/graph.hpp"
#include "ragrowth/polynomial.hpp"

#include <array>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ragrowth {

/// Graph monoid (trace monoid), right-angled Artin group, right-angled Coxeter group.
enum class Structure { Monoid, Raag, Racg };

inline constexpr std::array<Structure, 3> kAllStructures{Structure::Monoid, Structure::Raag, Structure::Racg};

std::string_view to_string(Structure s);
/// Accepts "monoid", "raag", "racg"; throws std::invalid_argument otherwise.
Structure parse_structure(std::string_view name);

/// Counts keyed by (length, type). Only nonzero entries are stored, so two
/// tables over the same range compare equal iff every count agrees.
class CountTable {
 public:
  CountTable() = default;
  CountTable(Structure s, int order) : structure_(s), order_(order) {}

  Structure structure() const { return structure_; }
  int order() const { return order_; }

  void add(int length, const Clique& type, const Integer& amount);
  Integer count(int length, const Clique& type) const;
  const std::map<std::pair<int, Clique>, Integer>& entries() const { return entries_; }

  /// totals()[n] = sum over types of count(n, type), n = 0..order.
  std::vector<Integer> totals() const;
  /// Same, restricted to types contained in the sorted node set `allowed`.
  std::vector<Integer> restricted_totals(std::span<const int> allowed) const;
  /// Counts of one type for n = 0..order.
  std::vector<Integer> type_counts(const Clique& type) const;

  friend bool operator==(const CountTable&, const CountTable&) = default;

 private:
  Structure structure_ = Structure::Monoid;
  int order_ = 0;
  std::map<std::pair<int, Clique>, Integer> entries_;
};

/// (length, type) -> number of elements.
using TypeCountTable = CountTable;
/// (length, type) -> number of geodesic words.
using GeodesicCountTable = CountTable;

/// Human-readable list of entries that differ, empty when equal.
std::vector<std::string> diff_tables(const CountTable& expected, const CountTable& actual, std::size_t limit = 10);

}  // namespace ragrowth

#endif  // RAGROWTH_STRUCTURE_HPP
