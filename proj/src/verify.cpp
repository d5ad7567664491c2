#include "ragrowth/verify.hpp"

#include "ragrowth/geodesic.hpp"
#include "ragrowth/link_regular.hpp"
#include "ragrowth/resolvent.hpp"
#include "ragrowth/spherical.hpp"

#include <algorithm>
#include <sstream>

namespace ragrowth {

namespace {

std::string join(const std::vector<std::string>& lines) {
  std::ostringstream os;
  for (std::size_t k = 0; k < lines.size(); ++k) os << (k ? "; " : "") << lines[k];
  return os.str();
}

std::string compare_coefficients(const Series& series, const std::vector<Integer>& totals) {
  for (std::size_t n = 0; n < totals.size(); ++n) {
    if (series[n] != totals[n]) {
      return "t^" + std::to_string(n) + ": " + series[n].get_str() + " vs " + totals[n].get_str();
    }
  }
  return {};
}

}  // namespace

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerificationCheck& c) { return c.passed; });
}

VerificationReport run_verification(const Graph& g, int depth, std::size_t cap) {
  VerificationReport report;
  report.depth = depth;
  auto record = [&](std::string name, const std::string& problem) {
    report.checks.push_back({std::move(name), problem.empty(), problem});
  };

  const CliqueIndex idx = enumerate_cliques(g);
  const IntMatrix strict = branching_matrix_strict(g, idx);
  const IntMatrix weak = branching_matrix_weak(g, idx);
  const IntMatrix diag = diagonal_matrix(idx);
  const auto profile = link_regular_profile(g);
  const int resolvent_order = std::max(depth, 12);

  for (Structure s : kAllStructures) {
    const std::string tag = " (" + std::string(to_string(s)) + ")";

    const TypeCountTable elements = count_elements_by_type(g, s, depth, cap);
    const TypeCountTable spherical = spherical_type_series(g, s, depth);
    record("spherical type counts vs oracle" + tag, join(diff_tables(elements, spherical)));
    record("spherical closed form vs type counts" + tag,
           compare_coefficients(series_expand(spherical_gf_closed(g, s), depth), spherical.totals()));

    const GeodesicCountTable words = count_geodesics_by_type(g, s, depth, cap);
    const GeodesicCountTable geodesic = geodesic_type_series(g, s, depth);
    record("geodesic type counts vs oracle" + tag, join(diff_tables(words, geodesic)));
    const RationalFunction geodesic_gf = geodesic_gf_exact(g, s);
    record("geodesic rational function vs type counts" + tag,
           compare_coefficients(series_expand(geodesic_gf, depth), geodesic.totals()));

    if (g.node_count() <= kMaxRestrictedSubsetNodes) {
      std::string problem;
      const unsigned subsets = 1U << static_cast<unsigned>(g.node_count());
      for (unsigned mask = 0; mask < subsets && problem.empty(); ++mask) {
        std::vector<int> allowed;
        for (int v = 1; v <= g.node_count(); ++v) {
          if (mask & (1U << static_cast<unsigned>(v - 1))) allowed.push_back(v);
        }
        const Series closed = series_expand(spherical_gf_restricted(g, s, allowed), depth);
        problem = compare_coefficients(closed, elements.restricted_totals(allowed));
        if (!problem.empty()) problem = "M=" + to_string(Clique(allowed)) + " " + problem;
      }
      record("restricted closed form vs oracle" + tag, problem);
    }

    const IntVector start = length_one_vector(idx, s);
    record("resolvent cross-check, spherical" + tag,
           join(resolvent_cross_check(spherical_transfer_matrix(strict, s), start, resolvent_order)));
    record("resolvent cross-check, geodesic" + tag,
           join(resolvent_cross_check(geodesic_transfer_matrix(diag, weak, s), start, resolvent_order)));

    if (s == Structure::Monoid) {
      const RationalFunction expected = rf_normalize({1}, {1, -static_cast<long>(g.node_count())});
      record("monoid geodesic function is 1/(1-mt)",
             geodesic_gf == expected ? "" : "got " + geodesic_gf.to_string());
    }
    if (profile) {
      const RationalFunction fast = geodesic_gf_link_regular(*profile, s);
      record("link-regular fast path vs full method" + tag,
             fast == geodesic_gf ? "" : fast.to_string() + " vs " + geodesic_gf.to_string());
    }
  }

  const RelationReport relations = verify_functional_relations(g, depth);
  std::string problem;
  if (!relations.ok()) {
    const auto& m = relations.mismatches.front();
    problem = m.relation + " on " + m.scope + " at t^" + std::to_string(m.n) + ": " + m.expected.get_str() +
              " vs " + m.actual.get_str();
  }
  record("functional relations", problem);
  return report;
}

Json to_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json item = {{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) item["detail"] = c.detail;
    checks.push_back(item);
  }
  return {{"depth", r.depth}, {"passed", r.passed()}, {"checks", checks}};
}

}  // namespace ragrowth
