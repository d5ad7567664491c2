#include <doctest.h>

#include "graph_search.hpp"
#include "ragrowth/geodesic.hpp"
#include "ragrowth/link_regular.hpp"
#include "test_util.hpp"

#include <algorithm>

using namespace ragrowth;

namespace {

long binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

LinkProfile profile_of(const Graph& g) {
  auto p = link_regular_profile(g);
  REQUIRE(p.has_value());
  return *p;
}

std::vector<Graph> link_regular_graphs() {
  std::vector<Graph> out{Graph::cycle(4), Graph::cycle(5), Graph::cycle(6), Graph::complete_bipartite(2, 2),
                         Graph::complete_bipartite(3, 3), Graph::empty(3)};
  for (int m = 1; m <= 5; ++m) out.push_back(Graph::complete(m));
  // Octahedron K_{2,2,2}.
  out.push_back(Graph(6, {{1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 5}, {3, 6}, {4, 5}, {4, 6}}));
  return out;
}

}  // namespace

TEST_CASE("validate_profile") {
  CHECK_NOTHROW(validate_profile(LinkProfile{5, 2, {5, 2, 0}}));
  CHECK_THROWS_AS(validate_profile(LinkProfile{5, 2, {4, 2, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(validate_profile(LinkProfile{5, 2, {5, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(validate_profile(LinkProfile{5, 2, {5, -1, 0}}), std::invalid_argument);
}

TEST_CASE("g_count examples") {
  for (int m = 1; m <= 5; ++m) {
    const LinkProfile k = profile_of(Graph::complete(m));
    for (int kk = 0; kk <= m; ++kk)
      for (int r = 0; r <= kk; ++r) CHECK(g_count(k, kk, r) == m - kk);
  }
  const LinkProfile c5{5, 2, {5, 2, 0}};
  CHECK(g_count(c5, 2, 1) == 1);
  CHECK(g_count(c5, 2, 2) == 0);
  CHECK(g_count(c5, 1, 1) == 2);
  CHECK_THROWS_WITH_AS(g_count(LinkProfile{3, 2, {3, 0, 0}}, 2, 1), "inconsistent profile", std::domain_error);
}

TEST_CASE("f_count examples") {
  for (int m = 1; m <= 5; ++m) {
    const LinkProfile k = profile_of(Graph::complete(m));
    for (int kk = 0; kk <= m; ++kk)
      for (int r = 0; r <= kk; ++r) CHECK(f_count(k, kk, r) == (r == kk ? m - kk : 0));
  }
  const LinkProfile c5{5, 2, {5, 2, 0}};
  CHECK(f_count(c5, 2, 1) == 1);
  CHECK(f_count(c5, 2, 0) == 1);
  CHECK(f_count(c5, 1, 0) == 2);
  CHECK(f_count(c5, 1, 1) == 2);
}

TEST_CASE("reduced_weak_matrix examples") {
  for (int m = 1; m <= 5; ++m) {
    const IntMatrix b = reduced_weak_matrix(profile_of(Graph::complete(m)));
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= m; ++j) CHECK(b(i - 1, j - 1) == (i == j + 1 ? m - j : 0));
  }
  CHECK(reduced_weak_matrix(LinkProfile{5, 2, {5, 2, 0}}) == IntMatrix{{2, 1}, {2, 2}});
  CHECK(reduced_weak_matrix(LinkProfile{1, 1, {1, 0}}).is_zero());
  CHECK(reduced_diagonal_matrix(LinkProfile{5, 2, {5, 2, 0}}) == IntMatrix{{1, 0}, {0, 2}});
  CHECK(reduced_start_vector(LinkProfile{5, 2, {5, 2, 0}}, Structure::Raag) == ragrowth::testing::ints({10, 0}));
}

TEST_CASE("reduced matrix aggregates the full weak branching matrix") {
  for (const Graph& g : link_regular_graphs()) {
    const LinkProfile p = profile_of(g);
    const CliqueIndex idx = enumerate_cliques(g);
    const IntMatrix full = branching_matrix_weak(g, idx), reduced = reduced_weak_matrix(p);
    // Column sums of the full matrix from any j-clique into i-cliques equal reduced(i, j).
    for (std::size_t col = 0; col < idx.size(); ++col) {
      const auto j = idx[col].size();
      std::vector<Integer> into(static_cast<std::size_t>(p.d) + 1);
      for (std::size_t row = 0; row < idx.size(); ++row) into[idx[row].size()] += full(row, col);
      for (int i = 1; i <= p.d; ++i) CHECK(into[static_cast<std::size_t>(i)] == reduced(i - 1, j - 1));
    }
  }
}

TEST_CASE("link-regular fast path equals the full method") {
  for (const Graph& g : link_regular_graphs()) {
    const LinkProfile p = profile_of(g);
    for (Structure s : kAllStructures) {
      CAPTURE(g.node_count());
      CAPTURE(to_string(s));
      CHECK(geodesic_gf_link_regular(p, s) == geodesic_gf_exact(g, s));
      const GeodesicCountTable full = geodesic_type_series(g, s, 8);
      const AggregatedCounts agg = aggregated_geodesic_series(p, s, 8);
      CHECK(agg.totals() == full.totals());
      for (int n = 0; n <= 8; ++n) {
        std::vector<Integer> by_size(static_cast<std::size_t>(p.d) + 1);
        for (const auto& [key, count] : full.entries())
          if (key.first == n) by_size[key.second.size()] += count;
        CHECK(agg.counts[static_cast<std::size_t>(n)] == by_size);
      }
    }
  }
  CHECK(geodesic_gf_link_regular(profile_of(Graph::complete(1)), Structure::Raag) == rf_normalize({1, 1}, {1, -1}));
  CHECK(geodesic_gf_link_regular(LinkProfile{7, 1, {7, 0}}, Structure::Monoid) == rf_normalize({1}, {1, -7}));
}

TEST_CASE("branch count functions") {
  for (const Graph& g : link_regular_graphs()) {
    const LinkProfile p = profile_of(g);
    const BranchCountFns fns = branch_count_fns(p);
    for (int k = 0; k <= p.d; ++k) {
      for (int r = 0; r <= k; ++r) {
        const auto uk = static_cast<std::size_t>(k), ur = static_cast<std::size_t>(r);
        CHECK(fns.f[uk][ur] >= 0);
        long sum = 0;
        for (int i = r; i <= k; ++i) sum += binom(k - r, i - r) * fns.f[uk][static_cast<std::size_t>(i)];
        CHECK(sum == fns.g[uk][ur]);
      }
    }
    // Direct count: for each clique C and S subset of C, vertices x outside C with N(x) cap C = S.
    for (const auto& c : enumerate_cliques(g)) {
      const auto k = c.size();
      for (unsigned mask = 0; mask < (1u << k); ++mask) {
        long direct = 0;
        for (int x = 1; x <= g.node_count(); ++x) {
          if (c.contains(x)) continue;
          unsigned hit = 0;
          for (std::size_t b = 0; b < k; ++b)
            if (g.adjacent(x, c.nodes[b])) hit |= 1u << b;
          if (hit == mask) ++direct;
        }
        const auto r = static_cast<std::size_t>(__builtin_popcount(mask));
        CHECK(direct == fns.f[k][r]);
      }
    }
  }
}

TEST_CASE("profile_equivalence_check") {
  const EquivalenceReport same = profile_equivalence_check(Graph::cycle(5), Graph::cycle(5));
  CHECK(same.same_clique_polynomial);
  CHECK(same.functions_equal());

  const Graph k4 = Graph::complete(4);
  const Graph k4b(4, {{4, 3}, {4, 2}, {4, 1}, {3, 2}, {3, 1}, {2, 1}});
  CHECK(profile_equivalence_check(k4, k4b).functions_equal());

  CHECK_THROWS_AS(profile_equivalence_check(Graph::path(3), Graph::cycle(4)), GraphError);

  // C8 against two disjoint squares: both link-regular with clique polynomial 1 + 8t + 8t^2.
  const Graph c8 = Graph::cycle(8);
  const Graph two_squares(8, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {5, 6}, {6, 7}, {7, 8}, {5, 8}});
  const EquivalenceReport pair = profile_equivalence_check(c8, two_squares);
  CHECK(pair.same_clique_polynomial);
  CHECK(pair.functions_equal());
}

TEST_CASE("small search finds a non-isomorphic pair") {
  const auto result = ragrowth::testing::search_link_regular_pairs(8);
  CHECK(result.classes > 0);
  REQUIRE_FALSE(result.pairs.empty());
  for (const auto& [a, b] : result.pairs) {
    const EquivalenceReport r = profile_equivalence_check(a, b);
    CHECK(r.same_clique_polynomial);
    CHECK(r.functions_equal());
  }
}
