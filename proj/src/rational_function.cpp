#include "ragrowth/rational_function.hpp"

#include <stdexcept>
#include <utility>

namespace ragrowth {

RationalFunction::RationalFunction(const IntPolynomial& p) : num_(p), den_(IntPolynomial::constant(1)) {}

RationalFunction rf_normalize(IntPolynomial num, IntPolynomial den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  RationalFunction r;
  if (num.is_zero()) return r;
  IntPolynomial g = gcd(num, den);
  if (g.degree() > 0 || g.leading() != 1) {
    num = exact_quotient(num, g);
    den = exact_quotient(den, g);
  }
  Integer c;
  mpz_gcd(c.get_mpz_t(), num.content().get_mpz_t(), den.content().get_mpz_t());
  if (c != 1) {
    num = num.divide_exact(c);
    den = den.divide_exact(c);
  }
  if (sgn(den.leading()) < 0) {
    num = -num;
    den = -den;
  }
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  return r;
}

RationalFunction RationalFunction::reciprocal() const {
  if (is_zero()) throw std::domain_error("reciprocal of zero");
  return rf_normalize(den_, num_);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return rf_normalize(a.num_ + b.num_, a.den_);
  return rf_normalize(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return rf_normalize(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero rational function");
  return rf_normalize(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RationalFunction::to_string(char var) const {
  if (den_.degree() == 0 && den_.leading() == 1) return num_.to_string(var);
  return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

RationalFunction poly_substitute_mobius(const IntPolynomial& p, const Integer& a, const Integer& b, const Integer& c) {
  if (sgn(b) == 0) throw std::domain_error("pole at origin");
  if (p.is_zero()) throw std::domain_error("substitution into the zero polynomial");
  const auto deg = static_cast<unsigned>(p.degree());
  const IntPolynomial at = IntPolynomial::linear(0, a);
  const IntPolynomial shift = IntPolynomial::linear(b, c);

  // sum_k p_k (a t)^k (b + c t)^(deg - k) over (b + c t)^deg
  IntPolynomial num;
  IntPolynomial shift_power = IntPolynomial::constant(1);
  IntPolynomial at_power = IntPolynomial::constant(1);
  std::vector<IntPolynomial> shift_powers(deg + 1);
  for (unsigned k = 0; k <= deg; ++k) {
    shift_powers[k] = shift_power;
    shift_power *= shift;
  }
  for (unsigned k = 0; k <= deg; ++k) {
    if (sgn(p.coeff(k)) != 0) num += p.coeff(k) * (at_power * shift_powers[deg - k]);
    at_power *= at;
  }
  return rf_normalize(std::move(num), shift_powers[deg]);
}

}  // namespace ragrowth
