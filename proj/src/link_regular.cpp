#include "ragrowth/link_regular.hpp"

#include "ragrowth/geodesic.hpp"
#include "ragrowth/resolvent.hpp"

#include <stdexcept>
#include <string>

namespace ragrowth {

namespace {

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

void check_range(const LinkProfile& p, int k, int r) {
  if (r < 0 || r > k || k > p.d) {
    throw std::invalid_argument("need 0 <= r <= k <= d, got k=" + std::to_string(k) + " r=" + std::to_string(r));
  }
}

}  // namespace

void validate_profile(const LinkProfile& p) {
  if (p.m < 0 || p.d < 0) throw std::invalid_argument("profile: m and d must be non-negative");
  if (p.L.size() != static_cast<std::size_t>(p.d) + 1) throw std::invalid_argument("profile: L must have d + 1 entries");
  if (p.L[0] != p.m) throw std::invalid_argument("profile: L[0] must equal m");
  for (long x : p.L) {
    if (x < 0) throw std::invalid_argument("profile: negative link size");
  }
}

long g_count(const LinkProfile& p, int k, int r) {
  check_range(p, k, r);
  const long g = p.L[static_cast<std::size_t>(r)] - (k - r);
  if (g < 0) throw std::domain_error("inconsistent profile");
  return g;
}

long f_count(const LinkProfile& p, int k, int r) {
  check_range(p, k, r);
  Integer acc = 0;
  for (int i = r; i <= k; ++i) {
    Integer term = binomial(static_cast<unsigned long>(k - r), static_cast<unsigned long>(i - r)) * g_count(p, k, i);
    if ((i - r) % 2) {
      acc -= term;
    } else {
      acc += term;
    }
  }
  if (sgn(acc) < 0) throw std::domain_error("inconsistent profile");
  return acc.get_si();
}

BranchCountFns branch_count_fns(const LinkProfile& p) {
  validate_profile(p);
  BranchCountFns fns;
  fns.d = p.d;
  fns.g.resize(static_cast<std::size_t>(p.d) + 1);
  fns.f.resize(static_cast<std::size_t>(p.d) + 1);
  for (int k = 0; k <= p.d; ++k) {
    for (int r = 0; r <= k; ++r) {
      fns.g[static_cast<std::size_t>(k)].push_back(g_count(p, k, r));
      fns.f[static_cast<std::size_t>(k)].push_back(f_count(p, k, r));
    }
  }
  return fns;
}

IntMatrix reduced_weak_matrix(const LinkProfile& p) {
  validate_profile(p);
  const auto d = static_cast<std::size_t>(p.d);
  IntMatrix b(d);
  // Row i (cardinality i + 1) receives from column j (cardinality j + 1) when i <= j + 1.
  for (std::size_t j = 0; j < d; ++j) {
    const int k = static_cast<int>(j) + 1;
    for (std::size_t i = 0; i <= j + 1 && i < d; ++i) {
      const int r = static_cast<int>(i);
      b(i, j) = binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(r)) * f_count(p, k, r);
    }
  }
  return b;
}

IntMatrix reduced_diagonal_matrix(const LinkProfile& p) {
  validate_profile(p);
  IntVector diag;
  for (int k = 1; k <= p.d; ++k) diag.emplace_back(k);
  return IntMatrix::diagonal(diag);
}

IntVector reduced_start_vector(const LinkProfile& p, Structure s) {
  validate_profile(p);
  IntVector v(static_cast<std::size_t>(p.d));
  if (!v.empty()) v[0] = s == Structure::Raag ? 2 * p.m : p.m;
  return v;
}

namespace {

IntMatrix reduced_transfer(const LinkProfile& p, Structure s) {
  const IntMatrix weak = reduced_weak_matrix(p);
  switch (s) {
    case Structure::Monoid:
      return reduced_diagonal_matrix(p) + weak;
    case Structure::Raag:
      return reduced_diagonal_matrix(p) + Integer(2) * weak;
    case Structure::Racg:
      return weak;
  }
  throw std::invalid_argument("unknown structure");
}

}  // namespace

std::vector<Integer> AggregatedCounts::totals() const {
  std::vector<Integer> out;
  out.reserve(counts.size());
  for (const auto& row : counts) {
    Integer sum = 0;
    for (const auto& x : row) sum += x;
    out.push_back(sum);
  }
  return out;
}

AggregatedCounts aggregated_geodesic_series(const LinkProfile& p, Structure s, int order) {
  if (order < 0) throw std::invalid_argument("order must be non-negative");
  AggregatedCounts out;
  out.structure = s;
  out.order = order;
  out.counts.assign(static_cast<std::size_t>(order) + 1, std::vector<Integer>(static_cast<std::size_t>(p.d) + 1));
  out.counts[0][0] = 1;
  const auto vectors = resolvent_apply(reduced_transfer(p, s), reduced_start_vector(p, s), order);
  for (std::size_t n = 0; n < vectors.size(); ++n) {
    for (std::size_t k = 0; k < vectors[n].size(); ++k) out.counts[n + 1][k + 1] = vectors[n][k];
  }
  return out;
}

RationalFunction geodesic_gf_link_regular(const LinkProfile& p, Structure s) {
  const IntVector ones(static_cast<std::size_t>(p.d), Integer(1));
  return RationalFunction(IntPolynomial{1}) +
         resolvent_weighted_sum(reduced_transfer(p, s), reduced_start_vector(p, s), ones);
}

EquivalenceReport profile_equivalence_check(const Graph& g1, const Graph& g2) {
  if (!link_regular_profile(g1)) throw GraphError("first graph is not link-regular");
  if (!link_regular_profile(g2)) throw GraphError("second graph is not link-regular");
  EquivalenceReport report;
  report.clique_polynomial_1 = clique_polynomial(g1);
  report.clique_polynomial_2 = clique_polynomial(g2);
  report.same_clique_polynomial = report.clique_polynomial_1 == report.clique_polynomial_2;
  if (report.same_clique_polynomial) {
    for (std::size_t k = 0; k < kAllStructures.size(); ++k) {
      report.gf_1[k] = geodesic_gf_exact(g1, kAllStructures[k]);
      report.gf_2[k] = geodesic_gf_exact(g2, kAllStructures[k]);
    }
  }
  return report;
}

}  // namespace ragrowth
