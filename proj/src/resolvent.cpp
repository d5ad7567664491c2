#include "ragrowth/resolvent.hpp"

#include "ragrowth/series.hpp"

#include <stdexcept>
#include <utility>

namespace ragrowth {

std::vector<IntVector> resolvent_apply(const IntMatrix& m, std::span<const Integer> v1, int order) {
  if (v1.size() != m.dim()) throw std::invalid_argument("resolvent: dimension mismatch");
  if (order < 0) throw std::invalid_argument("resolvent: negative order");
  std::vector<IntVector> out;
  out.reserve(static_cast<std::size_t>(order));
  if (order == 0) return out;
  out.emplace_back(v1.begin(), v1.end());
  for (int n = 2; n <= order; ++n) out.push_back(m * std::span<const Integer>(out.back()));
  return out;
}

ResolventSolution solve_resolvent(const IntMatrix& m, std::span<const Integer> v1) {
  const std::size_t n = m.dim();
  if (v1.size() != n) throw std::invalid_argument("resolvent: dimension mismatch");
  ResolventSolution sol;
  sol.denominator = IntPolynomial::constant(1);
  if (n == 0) return sol;

  // Augmented rows [I - M t | t v_1].
  std::vector<std::vector<IntPolynomial>> a(n, std::vector<IntPolynomial>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Integer c0 = (i == j) ? 1 : 0;
      a[i][j] = IntPolynomial::linear(c0, -m(i, j));
    }
    a[i][n] = IntPolynomial::linear(0, v1[i]);
  }

  IntPolynomial prev = IntPolynomial::constant(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot][k].is_zero()) ++pivot;
    if (pivot == n) throw std::domain_error("resolvent: singular system");
    if (pivot != k) std::swap(a[pivot], a[k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j) {
        a[i][j] = exact_quotient(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
      }
      a[i][k] = IntPolynomial();
    }
    prev = a[k][k];
  }

  // Fraction-free back substitution: y_i = det * x_i stays in Z[t].
  const IntPolynomial det = a[n - 1][n - 1];
  std::vector<IntPolynomial> y(n);
  for (std::size_t ii = n; ii-- > 0;) {
    IntPolynomial acc = det * a[ii][n];
    for (std::size_t j = ii + 1; j < n; ++j) acc -= a[ii][j] * y[j];
    y[ii] = exact_quotient(acc, a[ii][ii]);
  }
  sol.numerators = std::move(y);
  sol.denominator = det;
  return sol;
}

std::vector<RationalFunction> resolvent_exact(const IntMatrix& m, std::span<const Integer> v1) {
  ResolventSolution sol = solve_resolvent(m, v1);
  std::vector<RationalFunction> out;
  out.reserve(sol.numerators.size());
  for (auto& num : sol.numerators) out.push_back(rf_normalize(std::move(num), sol.denominator));
  return out;
}

RationalFunction resolvent_weighted_sum(const IntMatrix& m, std::span<const Integer> v1,
                                        std::span<const Integer> weights) {
  if (weights.size() != m.dim()) throw std::invalid_argument("resolvent: weight dimension mismatch");
  ResolventSolution sol = solve_resolvent(m, v1);
  IntPolynomial total;
  for (std::size_t i = 0; i < weights.size(); ++i) total += weights[i] * sol.numerators[i];
  return rf_normalize(std::move(total), std::move(sol.denominator));
}

std::vector<std::string> resolvent_cross_check(const IntMatrix& m, std::span<const Integer> v1, int order) {
  std::vector<std::string> out;
  const auto exact = resolvent_exact(m, v1);
  const auto iterated = resolvent_apply(m, v1, order);
  for (std::size_t i = 0; i < exact.size(); ++i) {
    const Series s = series_expand(exact[i], order);
    if (sgn(s[0]) != 0) out.push_back("component " + std::to_string(i) + " has a nonzero constant term");
    for (int n = 1; n <= order; ++n) {
      const Integer& want = iterated[static_cast<std::size_t>(n - 1)][i];
      if (s[static_cast<std::size_t>(n)] != want) {
        out.push_back("component " + std::to_string(i) + ", t^" + std::to_string(n) + ": expansion " +
                      s[static_cast<std::size_t>(n)].get_str() + " vs iteration " + want.get_str());
      }
    }
  }
  return out;
}

}  // namespace ragrowth
