#include <doctest.h>

#include "ragrowth/graph.hpp"
#include "test_util.hpp"

#include <algorithm>
#include <random>

using namespace ragrowth;

namespace {

Graph random_graph(std::mt19937& rng, int max_nodes) {
  std::uniform_int_distribution<int> nodes(1, max_nodes);
  std::bernoulli_distribution coin(0.5);
  const int m = nodes(rng);
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      if (coin(rng)) e.emplace_back(i, j);
  return Graph(m, e);
}

// Every subset of nodes checked pairwise, independent of the DFS.
std::vector<Clique> cliques_by_subsets(const Graph& g) {
  std::vector<Clique> out;
  const int m = g.node_count();
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> nodes;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) nodes.push_back(i + 1);
    bool ok = true;
    for (std::size_t a = 0; a < nodes.size() && ok; ++a)
      for (std::size_t b = a + 1; b < nodes.size() && ok; ++b) ok = g.adjacent(nodes[a], nodes[b]);
    if (ok) out.emplace_back(nodes);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace

TEST_CASE("graph construction validates input") {
  CHECK_THROWS_AS(Graph(2, {{1, 3}}), GraphError);
  CHECK_THROWS_AS(Graph(2, {{0, 1}}), GraphError);
  CHECK_THROWS_AS(Graph(2, {{1, 1}}), GraphError);
  CHECK_THROWS_AS(Graph(2, {{1, 2}, {2, 1}}), GraphError);
  CHECK_THROWS_AS(Graph::cycle(2), GraphError);
  const Graph g(3, {{3, 1}});
  CHECK(g.adjacent(1, 3));
  CHECK(g.adjacent(3, 1));
  CHECK_FALSE(g.adjacent(1, 2));
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{1, 3}});
}

TEST_CASE("enumerate_cliques examples") {
  CHECK(enumerate_cliques(Graph(2, {{1, 2}})).cliques() == std::vector<Clique>{{1}, {2}, {1, 2}});
  const CliqueIndex sq = enumerate_cliques(Graph::cycle(4));
  CHECK(sq.size() == 8);
  CHECK(std::count_if(sq.begin(), sq.end(), [](const Clique& c) { return c.size() == 2; }) == 4);
  CHECK(enumerate_cliques(Graph::empty(3)).cliques() == std::vector<Clique>{{1}, {2}, {3}});
  CHECK(enumerate_cliques(Graph::empty(0)).size() == 0);
  CHECK(enumerate_cliques(Graph::complete(3)).cliques() ==
        std::vector<Clique>{{1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}});
  CHECK(sq.position(Clique{3, 4}) == 7);
  CHECK_FALSE(sq.find(Clique{1, 3}).has_value());
  CHECK_THROWS_AS(sq.position(Clique{1, 3}), std::out_of_range);
}

TEST_CASE("clique_polynomial examples") {
  CHECK(clique_polynomial(Graph::cycle(4)) == IntPolynomial{1, 4, 4});
  CHECK(clique_polynomial(Graph::cycle(4)) == IntPolynomial{1, 2}.pow(2));
  for (int m = 1; m <= 7; ++m) {
    CHECK(clique_polynomial(Graph::path(m)) == IntPolynomial{1, m, m - 1});
    CHECK(clique_polynomial(Graph::empty(m)) == IntPolynomial{1, m});
  }
  CHECK(clique_polynomial(Graph::complete(4)) == IntPolynomial{1, 4, 6, 4, 1});
  CHECK(clique_polynomial(Graph::empty(0)) == IntPolynomial{1});
}

TEST_CASE("induced_delete examples") {
  const std::vector<int> one{1};
  const InducedSubgraph p = induced_delete(Graph::cycle(4), one);
  CHECK(p.graph == Graph::path(3));  // 2-3-4 relabeled 1-2-3
  CHECK(p.original_labels == std::vector<int>{2, 3, 4});

  const Graph c5 = Graph::cycle(5);
  CHECK(induced_delete(c5, std::vector<int>{}).graph == c5);

  const InducedSubgraph single = induced_delete(Graph::complete(3), std::vector<int>{2, 3});
  CHECK(single.graph == Graph::empty(1));
  CHECK(single.original_labels == std::vector<int>{1});

  CHECK_THROWS_AS(induced_delete(c5, std::vector<int>{6}), GraphError);
}

TEST_CASE("link examples") {
  const Graph sq = Graph::cycle(4);
  CHECK(link(sq, Clique{1}) == std::vector<int>{2, 4});
  CHECK(link(sq, Clique{1, 2}).empty());
  CHECK(link(sq, Clique{}) == std::vector<int>{1, 2, 3, 4});
  const Graph k5 = Graph::complete(5);
  CHECK(link(k5, Clique{2, 4}) == std::vector<int>{1, 3, 5});
  CHECK_THROWS_AS(link(sq, Clique{1, 3}), GraphError);
  CHECK_THROWS_AS(link(sq, Clique{2, 1}), GraphError);
}

TEST_CASE("branch_target") {
  const Graph sq = Graph::cycle(4);
  CHECK(branch_target(sq, Clique{1}, 2) == Clique{1, 2});
  CHECK(branch_target(sq, Clique{1}, 3) == Clique{3});
  CHECK(branch_target(sq, Clique{2, 3}, 1) == Clique{1, 2});
  CHECK(branch_target(sq, Clique{}, 4) == Clique{4});
  CHECK_THROWS_AS(branch_target(sq, Clique{1}, 1), GraphError);
}

TEST_CASE("link_regular_profile examples") {
  auto c5 = link_regular_profile(Graph::cycle(5));
  REQUIRE(c5.has_value());
  CHECK(*c5 == LinkProfile{5, 2, {5, 2, 0}});
  for (int m = 1; m <= 6; ++m) {
    auto k = link_regular_profile(Graph::complete(m));
    REQUIRE(k.has_value());
    CHECK(k->d == m);
    for (int r = 0; r <= m; ++r) CHECK(k->L[static_cast<std::size_t>(r)] == m - r);
  }
  CHECK_FALSE(link_regular_profile(Graph::path(3)).has_value());
  CHECK(link_regular_profile(Graph::empty(3)) == LinkProfile{3, 1, {3, 0}});
  CHECK(link_regular_profile(Graph::complete_bipartite(2, 2)) == LinkProfile{4, 2, {4, 2, 0}});
}

TEST_CASE("clique invariants on random graphs") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = random_graph(rng, 8);
    const CliqueIndex idx = enumerate_cliques(g);
    CHECK(idx.cliques() == cliques_by_subsets(g));
    CHECK(clique_polynomial(g).evaluate(1) == Integer(1 + static_cast<long>(idx.size())));

    for (const auto& c : idx) {
      // Closed under subsets: dropping any one node stays listed.
      for (std::size_t k = 0; k < c.size() && c.size() > 1; ++k) {
        std::vector<int> sub = c.nodes;
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(k));
        CHECK(idx.find(Clique(sub)).has_value());
      }
      for (int x : link(g, c)) {
        std::vector<int> grown = c.nodes;
        grown.insert(std::upper_bound(grown.begin(), grown.end(), x), x);
        CHECK(g.is_clique(grown));
      }
    }

    if (auto p = link_regular_profile(g)) {
      const IntPolynomial cp = clique_polynomial(g);
      for (int n = 2; n <= p->d; ++n) {
        CHECK(n * cp.coeff(static_cast<std::size_t>(n)) ==
              cp.coeff(static_cast<std::size_t>(n - 1)) * p->L[static_cast<std::size_t>(n - 1)]);
      }
    }
  }
}
