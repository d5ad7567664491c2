#include "ragrowth/spherical.hpp"

#include "transfer.hpp"

#include <stdexcept>

namespace ragrowth {

namespace {

struct Mobius {
  long a, b, c;
};

// p is evaluated at a t / (b + c t).
Mobius substitution_for(Structure s) {
  switch (s) {
    case Structure::Monoid:
      return {-1, 1, 0};
    case Structure::Raag:
      return {-2, 1, 1};
    case Structure::Racg:
      return {-1, 1, 1};
  }
  throw std::invalid_argument("unknown structure");
}

RationalFunction clique_poly_at(const Graph& g, Structure s) {
  const Mobius mob = substitution_for(s);
  return poly_substitute_mobius(clique_polynomial(g), mob.a, mob.b, mob.c);
}

}  // namespace

RationalFunction spherical_gf_closed(const Graph& g, Structure s) { return clique_poly_at(g, s).reciprocal(); }

RationalFunction spherical_gf_restricted(const Graph& g, Structure s, std::span<const int> allowed) {
  const InducedSubgraph rest = induced_delete(g, allowed);
  return clique_poly_at(rest.graph, s) / clique_poly_at(g, s);
}

IntMatrix branching_matrix_strict(const Graph& g, const CliqueIndex& idx) {
  IntMatrix b(idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j) {
    const Clique& from = idx[j];
    for (int i = 1; i <= g.node_count(); ++i) {
      if (from.contains(i)) continue;
      Clique to = branch_target(g, from, i);
      if (to.max() != i) continue;
      b(idx.position(to), j) = 1;
    }
  }
  return b;
}

IntMatrix spherical_transfer_matrix(const IntMatrix& strict, Structure s) {
  switch (s) {
    case Structure::Monoid:
      return IntMatrix::identity(strict.dim()) + strict;
    case Structure::Raag:
      return IntMatrix::identity(strict.dim()) + Integer(2) * strict;
    case Structure::Racg:
      return strict;
  }
  throw std::invalid_argument("unknown structure");
}

IntVector length_one_vector(const CliqueIndex& idx, Structure s) {
  IntVector v(idx.size());
  const long per_vertex = s == Structure::Raag ? 2 : 1;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i].size() == 1) v[i] = per_vertex;
  }
  return v;
}

TypeCountTable spherical_type_series(const Graph& g, Structure s, int order) {
  const CliqueIndex idx = enumerate_cliques(g);
  const IntMatrix transfer = spherical_transfer_matrix(branching_matrix_strict(g, idx), s);
  return detail::counts_from_transfer(idx, s, transfer, length_one_vector(idx, s), order);
}

RelationReport verify_functional_relations(const Graph& g, int order) {
  RelationReport report;
  report.order = order;
  const CliqueIndex idx = enumerate_cliques(g);
  const TypeCountTable monoid = spherical_type_series(g, Structure::Monoid, order);
  const TypeCountTable raag = spherical_type_series(g, Structure::Raag, order);
  const TypeCountTable racg = spherical_type_series(g, Structure::Racg, order);

  struct Relation {
    std::string name;
    const TypeCountTable* lhs;
    const TypeCountTable* inner_of;
    RationalFunction inner;
  };
  const std::vector<Relation> relations{
      {"M(t) = W(t/(1-t))", &monoid, &racg, rf_normalize({0, 1}, {1, -1})},
      {"A(t) = W(2t/(1-t))", &raag, &racg, rf_normalize({0, 2}, {1, -1})},
      {"W(t) = M(t/(1+t))", &racg, &monoid, rf_normalize({0, 1}, {1, 1})},
      {"A(t) = M(2t/(1+t))", &raag, &monoid, rf_normalize({0, 2}, {1, 1})},
  };

  for (const auto& rel : relations) {
    report.relations.push_back(rel.name);
    auto compare = [&](const std::string& scope, const std::vector<Integer>& lhs, const std::vector<Integer>& outer) {
      const Series composed = series_compose(Series(outer), rel.inner, order);
      for (int n = 0; n <= order; ++n) {
        ++report.checks;
        const auto k = static_cast<std::size_t>(n);
        if (composed[k] != lhs[k]) report.mismatches.push_back({rel.name, scope, n, lhs[k], composed[k]});
      }
    };
    for (const auto& c : idx) compare(to_string(c), rel.lhs->type_counts(c), rel.inner_of->type_counts(c));
    compare("total", rel.lhs->totals(), rel.inner_of->totals());
  }
  return report;
}

}  // namespace ragrowth
