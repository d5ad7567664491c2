// Finite simple graphs, their cliques, links and link-regularity.

#ifndef RAGROWTH_GRAPH_HPP
#define RAGROWTH_GRAPH_HPP

#include "ragrowth/polynomial.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ragrowth {

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A set of nodes, stored as a strictly increasing sequence of 1-based labels.
/// Default ordering is lexicographic on the node sequence.
struct Clique {
  std::vector<int> nodes;

  Clique() = default;
  explicit Clique(std::vector<int> sorted_nodes) : nodes(std::move(sorted_nodes)) {}
  Clique(std::initializer_list<int> sorted_nodes) : nodes(sorted_nodes) {}

  std::size_t size() const { return nodes.size(); }
  bool empty() const { return nodes.empty(); }
  bool contains(int node) const;
  int max() const { return nodes.back(); }
  bool is_subset_of(std::span<const int> sorted_set) const;

  friend auto operator<=>(const Clique&, const Clique&) = default;
  friend bool operator==(const Clique&, const Clique&) = default;
};

/// Cardinality first, then lexicographic.
bool canonical_less(const Clique& a, const Clique& b);

std::string to_string(const Clique& c);

/// Simple undirected graph on nodes 1..m.
class Graph {
 public:
  Graph() = default;
  /// Throws GraphError on out-of-range endpoints, self-loops or repeated edges.
  Graph(int node_count, std::span<const std::pair<int, int>> edges);
  Graph(int node_count, std::initializer_list<std::pair<int, int>> edges)
      : Graph(node_count, std::span<const std::pair<int, int>>(edges.begin(), edges.size())) {}

  static Graph complete(int m);
  static Graph empty(int m);
  static Graph path(int m);
  static Graph cycle(int m);
  static Graph complete_bipartite(int p, int q);

  int node_count() const { return m_; }
  /// Edges (i, j) with i < j in lexicographic order.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool adjacent(int i, int j) const;
  /// Sorted neighbour labels of node i.
  const std::vector<int>& neighbors(int i) const;

  bool is_clique(std::span<const int> nodes) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.m_ == b.m_ && a.edges_ == b.edges_; }

 private:
  void check_node(int i) const;

  int m_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<char> adjacency_;
  std::vector<std::vector<int>> neighbors_;
};

/// All non-empty cliques of a graph in canonical order, with reverse lookup.
class CliqueIndex {
 public:
  CliqueIndex() = default;
  explicit CliqueIndex(std::vector<Clique> cliques);

  std::size_t size() const { return cliques_.size(); }
  const Clique& operator[](std::size_t i) const { return cliques_[i]; }
  const std::vector<Clique>& cliques() const { return cliques_; }
  auto begin() const { return cliques_.begin(); }
  auto end() const { return cliques_.end(); }

  std::optional<std::size_t> find(const Clique& c) const;
  /// Throws std::out_of_range if c is not listed.
  std::size_t position(const Clique& c) const;

 private:
  std::vector<Clique> cliques_;
  std::map<Clique, std::size_t> lookup_;
};

CliqueIndex enumerate_cliques(const Graph& g);

/// 1 + c_1 t + c_2 t^2 + ..., c_i = number of i-node cliques.
IntPolynomial clique_polynomial(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  /// original_labels[k - 1] is the label in the parent graph of node k.
  std::vector<int> original_labels;
};

/// Induced subgraph on the nodes not in `remove`, relabeled 1..m' in increasing order.
InducedSubgraph induced_delete(const Graph& g, std::span<const int> remove);

/// Nodes outside c adjacent to every node of c; the link of the empty clique is
/// every node. Throws GraphError if c is not a clique of g.
std::vector<int> link(const Graph& g, const Clique& c);

/// The maximal clique of from ∪ {node} that contains node, i.e. node together
/// with its neighbours in from. node must not belong to from.
Clique branch_target(const Graph& g, const Clique& from, int node);

/// Link sizes indexed by clique cardinality for a link-regular graph.
struct LinkProfile {
  int m = 0;
  /// Largest clique cardinality.
  int d = 0;
  /// L[r] is the link size of every r-clique, r = 0..d, with L[0] = m.
  std::vector<long> L;

  friend bool operator==(const LinkProfile&, const LinkProfile&) = default;
};

/// The link profile, or nullopt when two cliques of equal size have links of different size.
std::optional<LinkProfile> link_regular_profile(const Graph& g);

}  // namespace ragrowth

#endif  // RAGROWTH_GRAPH_HPP
