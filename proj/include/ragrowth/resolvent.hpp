// Coefficients and closed forms of t (I - M t)^{-1} v for integer matrices M.

#ifndef RAGROWTH_RESOLVENT_HPP
#define RAGROWTH_RESOLVENT_HPP

#include "ragrowth/matrix.hpp"
#include "ragrowth/rational_function.hpp"

#include <span>
#include <string>
#include <vector>

namespace ragrowth {

/// v_1, v_2 = M v_1, ..., v_N = M^{N-1} v_1; element k of the result is v_{k+1},
/// the coefficient vector of t^{k+1} in t (I - M t)^{-1} v_1.
std::vector<IntVector> resolvent_apply(const IntMatrix& m, std::span<const Integer> v1, int order);

/// Solution of (I - M t) x = t v_1 with a shared denominator:
/// x_i = numerators[i] / denominator, where denominator is det(I - M t) up to sign.
struct ResolventSolution {
  std::vector<IntPolynomial> numerators;
  IntPolynomial denominator;
};

/// Fraction-free (Bareiss) elimination on the polynomial matrix I - M t.
ResolventSolution solve_resolvent(const IntMatrix& m, std::span<const Integer> v1);

/// Each component of t (I - M t)^{-1} v_1 as a reduced rational function.
std::vector<RationalFunction> resolvent_exact(const IntMatrix& m, std::span<const Integer> v1);

/// sum_i weights[i] * x_i for the solution x of (I - M t) x = t v_1.
RationalFunction resolvent_weighted_sum(const IntMatrix& m, std::span<const Integer> v1,
                                        std::span<const Integer> weights);

/// Compares the Maclaurin expansion of every component of resolvent_exact with
/// resolvent_apply up to the given order. Returns the mismatches found (empty if none).
std::vector<std::string> resolvent_cross_check(const IntMatrix& m, std::span<const Integer> v1, int order);

}  // namespace ragrowth

#endif  // RAGROWTH_RESOLVENT_HPP
