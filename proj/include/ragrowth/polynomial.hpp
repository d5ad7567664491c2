// Dense univariate polynomials with arbitrary-precision integer coefficients.

#ifndef RAGROWTH_POLYNOMIAL_HPP
#define RAGROWTH_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace ragrowth {

using Integer = mpz_class;

/// Polynomial in one variable over Z. Coefficient k is the coefficient of t^k.
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial has an empty coefficient vector and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial constant(const Integer& c);
  static IntPolynomial monomial(const Integer& c, std::size_t degree);
  /// c0 + c1 t
  static IntPolynomial linear(const Integer& c0, const Integer& c1);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  /// Coefficient of t^k; zero past the degree.
  Integer coeff(std::size_t k) const;
  const Integer& leading() const;

  /// Non-negative gcd of all coefficients (0 for the zero polynomial).
  Integer content() const;
  /// this / content(), with the sign left as is.
  IntPolynomial primitive_part() const;

  Integer evaluate(const Integer& x) const;
  IntPolynomial pow(unsigned exponent) const;

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const Integer& c);

  friend IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs += rhs; }
  friend IntPolynomial operator-(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs -= rhs; }
  friend IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs);
  friend IntPolynomial operator*(IntPolynomial lhs, const Integer& c) { return lhs *= c; }
  friend IntPolynomial operator*(const Integer& c, IntPolynomial rhs) { return rhs *= c; }
  friend bool operator==(const IntPolynomial& lhs, const IntPolynomial& rhs) = default;

  /// Divides every coefficient by c; throws if some coefficient is not a multiple.
  IntPolynomial divide_exact(const Integer& c) const;

  /// Human-readable form, e.g. "1 + 4t + 4t^2".
  std::string to_string(char var = 't') const;

 private:
  void trim();

  std::vector<Integer> coeffs_;
};

/// Pseudo-remainder of a by b: some lc(b)^k * a reduced modulo b. b must be nonzero.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// Exact quotient a / b in Z[t]; throws std::domain_error when b does not divide a.
IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b);

/// Greatest common divisor over Z[t] via the primitive pseudo-remainder sequence.
/// Result has a positive leading coefficient; gcd(0, 0) = 0.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

}  // namespace ragrowth

#endif  // RAGROWTH_POLYNOMIAL_HPP
