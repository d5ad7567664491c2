// Reduced quotients of integer polynomials.

#ifndef RAGROWTH_RATIONAL_FUNCTION_HPP
#define RAGROWTH_RATIONAL_FUNCTION_HPP

#include "ragrowth/polynomial.hpp"

#include <string>

namespace ragrowth {

/// A fraction num/den of integer polynomials in canonical form:
/// gcd(num, den) = 1, the integer content of the pair is 1, and the
/// leading coefficient of den is positive. Zero is stored as 0/1.
class RationalFunction {
 public:
  RationalFunction() : den_(IntPolynomial::constant(1)) {}
  RationalFunction(const IntPolynomial& p);  // NOLINT(google-explicit-constructor)

  const IntPolynomial& numerator() const { return num_; }
  const IntPolynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction reciprocal() const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

  std::string to_string(char var = 't') const;

 private:
  friend RationalFunction rf_normalize(IntPolynomial num, IntPolynomial den);

  IntPolynomial num_;
  IntPolynomial den_;
};

/// Reduces num/den to canonical form. Throws std::domain_error if den is zero.
RationalFunction rf_normalize(IntPolynomial num, IntPolynomial den);

/// p(a t / (b + c t)) as a reduced fraction. Throws std::domain_error when
/// b = 0 ("pole at origin") or p is the zero polynomial.
RationalFunction poly_substitute_mobius(const IntPolynomial& p, const Integer& a, const Integer& b, const Integer& c);

}  // namespace ragrowth

#endif  // RAGROWTH_RATIONAL_FUNCTION_HPP
