#include "ragrowth/graph.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace ragrowth {

bool Clique::contains(int node) const { return std::binary_search(nodes.begin(), nodes.end(), node); }

bool Clique::is_subset_of(std::span<const int> sorted_set) const {
  return std::includes(sorted_set.begin(), sorted_set.end(), nodes.begin(), nodes.end());
}

bool canonical_less(const Clique& a, const Clique& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.nodes < b.nodes;
}

std::string to_string(const Clique& c) {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < c.nodes.size(); ++k) os << (k ? "," : "") << c.nodes[k];
  os << '}';
  return os.str();
}

Graph::Graph(int node_count, std::span<const std::pair<int, int>> edges) : m_(node_count) {
  if (node_count < 0) throw GraphError("node count must be non-negative");
  const auto m = static_cast<std::size_t>(m_);
  adjacency_.assign(m * m, 0);
  neighbors_.assign(m, {});
  for (auto [i, j] : edges) {
    if (i < 1 || i > m_ || j < 1 || j > m_) {
      throw GraphError("edge " + std::to_string(i) + "-" + std::to_string(j) + " has an endpoint outside 1.." +
                       std::to_string(m_));
    }
    if (i == j) throw GraphError("self-loop at node " + std::to_string(i));
    if (i > j) std::swap(i, j);
    char& slot = adjacency_[static_cast<std::size_t>(i - 1) * m + static_cast<std::size_t>(j - 1)];
    if (slot) throw GraphError("repeated edge " + std::to_string(i) + "-" + std::to_string(j));
    slot = 1;
    adjacency_[static_cast<std::size_t>(j - 1) * m + static_cast<std::size_t>(i - 1)] = 1;
    edges_.emplace_back(i, j);
    neighbors_[static_cast<std::size_t>(i - 1)].push_back(j);
    neighbors_[static_cast<std::size_t>(j - 1)].push_back(i);
  }
  std::sort(edges_.begin(), edges_.end());
  for (auto& nb : neighbors_) std::sort(nb.begin(), nb.end());
}

Graph Graph::complete(int m) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) e.emplace_back(i, j);
  return Graph(m, e);
}

Graph Graph::empty(int m) { return Graph(m, std::span<const std::pair<int, int>>()); }

Graph Graph::path(int m) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < m; ++i) e.emplace_back(i, i + 1);
  return Graph(m, e);
}

Graph Graph::cycle(int m) {
  if (m < 3) throw GraphError("a cycle needs at least 3 nodes");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < m; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(1, m);
  return Graph(m, e);
}

Graph Graph::complete_bipartite(int p, int q) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= p; ++i)
    for (int j = p + 1; j <= p + q; ++j) e.emplace_back(i, j);
  return Graph(p + q, e);
}

void Graph::check_node(int i) const {
  if (i < 1 || i > m_) throw GraphError("node " + std::to_string(i) + " outside 1.." + std::to_string(m_));
}

bool Graph::adjacent(int i, int j) const {
  check_node(i);
  check_node(j);
  return adjacency_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(m_) + static_cast<std::size_t>(j - 1)] != 0;
}

const std::vector<int>& Graph::neighbors(int i) const {
  check_node(i);
  return neighbors_[static_cast<std::size_t>(i - 1)];
}

bool Graph::is_clique(std::span<const int> nodes) const {
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    if (nodes[a] < 1 || nodes[a] > m_) return false;
    for (std::size_t b = a + 1; b < nodes.size(); ++b) {
      if (!adjacent(nodes[a], nodes[b])) return false;
    }
  }
  return true;
}

CliqueIndex::CliqueIndex(std::vector<Clique> cliques) : cliques_(std::move(cliques)) {
  for (std::size_t i = 0; i < cliques_.size(); ++i) {
    if (!lookup_.emplace(cliques_[i], i).second) throw std::invalid_argument("duplicate clique in index");
  }
}

std::optional<std::size_t> CliqueIndex::find(const Clique& c) const {
  auto it = lookup_.find(c);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t CliqueIndex::position(const Clique& c) const {
  auto pos = find(c);
  if (!pos) throw std::out_of_range("clique " + to_string(c) + " not in index");
  return *pos;
}

CliqueIndex enumerate_cliques(const Graph& g) {
  std::vector<Clique> out;
  std::vector<int> current;
  // Extend only with higher-labelled common neighbours, so each clique is reached once.
  std::function<void(const std::vector<int>&)> extend = [&](const std::vector<int>& candidates) {
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      const int v = candidates[k];
      current.push_back(v);
      out.emplace_back(current);
      std::vector<int> next;
      const auto& nb = g.neighbors(v);
      std::set_intersection(candidates.begin() + static_cast<std::ptrdiff_t>(k) + 1, candidates.end(), nb.begin(),
                            nb.end(), std::back_inserter(next));
      extend(next);
      current.pop_back();
    }
  };
  std::vector<int> all(static_cast<std::size_t>(g.node_count()));
  for (int i = 1; i <= g.node_count(); ++i) all[static_cast<std::size_t>(i - 1)] = i;
  extend(all);
  std::sort(out.begin(), out.end(), canonical_less);
  return CliqueIndex(std::move(out));
}

IntPolynomial clique_polynomial(const Graph& g) {
  std::vector<Integer> coeffs{1};
  for (const auto& c : enumerate_cliques(g)) {
    if (coeffs.size() <= c.size()) coeffs.resize(c.size() + 1);
    ++coeffs[c.size()];
  }
  return IntPolynomial(std::move(coeffs));
}

InducedSubgraph induced_delete(const Graph& g, std::span<const int> remove) {
  std::set<int> removed;
  for (int v : remove) {
    if (v < 1 || v > g.node_count()) throw GraphError("cannot delete node " + std::to_string(v));
    removed.insert(v);
  }
  InducedSubgraph sub;
  std::vector<int> new_label(static_cast<std::size_t>(g.node_count()) + 1, 0);
  for (int v = 1; v <= g.node_count(); ++v) {
    if (removed.count(v)) continue;
    sub.original_labels.push_back(v);
    new_label[static_cast<std::size_t>(v)] = static_cast<int>(sub.original_labels.size());
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [i, j] : g.edges()) {
    if (new_label[static_cast<std::size_t>(i)] && new_label[static_cast<std::size_t>(j)]) {
      edges.emplace_back(new_label[static_cast<std::size_t>(i)], new_label[static_cast<std::size_t>(j)]);
    }
  }
  sub.graph = Graph(static_cast<int>(sub.original_labels.size()), edges);
  return sub;
}

std::vector<int> link(const Graph& g, const Clique& c) {
  if (!std::is_sorted(c.nodes.begin(), c.nodes.end()) ||
      std::adjacent_find(c.nodes.begin(), c.nodes.end()) != c.nodes.end() || !g.is_clique(c.nodes)) {
    throw GraphError(to_string(c) + " is not a clique of the graph");
  }
  std::vector<int> out;
  for (int v = 1; v <= g.node_count(); ++v) {
    if (c.contains(v)) continue;
    bool all = true;
    for (int u : c.nodes) {
      if (!g.adjacent(u, v)) {
        all = false;
        break;
      }
    }
    if (all) out.push_back(v);
  }
  return out;
}

Clique branch_target(const Graph& g, const Clique& from, int node) {
  if (from.contains(node)) throw GraphError("node already in clique");
  std::vector<int> nodes;
  nodes.reserve(from.size() + 1);
  bool placed = false;
  for (int u : from.nodes) {
    if (!placed && node < u) {
      nodes.push_back(node);
      placed = true;
    }
    if (g.adjacent(u, node)) nodes.push_back(u);
  }
  if (!placed) nodes.push_back(node);
  return Clique(std::move(nodes));
}

std::optional<LinkProfile> link_regular_profile(const Graph& g) {
  const CliqueIndex idx = enumerate_cliques(g);
  LinkProfile p;
  p.m = g.node_count();
  p.d = idx.size() ? static_cast<int>(idx.cliques().back().size()) : 0;
  p.L.assign(static_cast<std::size_t>(p.d) + 1, -1);
  p.L[0] = p.m;
  for (const auto& c : idx) {
    const auto size = static_cast<long>(link(g, c).size());
    long& slot = p.L[c.size()];
    if (slot < 0) {
      slot = size;
    } else if (slot != size) {
      return std::nullopt;
    }
  }
  // n c_n = c_{n-1} L_{n-1} follows from double counting (clique, link vertex) pairs.
  const IntPolynomial cp = clique_polynomial(g);
  for (int n = 2; n <= p.d; ++n) {
    if (n * cp.coeff(static_cast<std::size_t>(n)) !=
        cp.coeff(static_cast<std::size_t>(n - 1)) * p.L[static_cast<std::size_t>(n - 1)]) {
      throw std::logic_error("link profile disagrees with clique polynomial at n = " + std::to_string(n));
    }
  }
  return p;
}

}  // namespace ragrowth
