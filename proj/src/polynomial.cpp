#include "ragrowth/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace ragrowth {

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(const Integer& c) { return IntPolynomial(std::vector<Integer>{c}); }

IntPolynomial IntPolynomial::monomial(const Integer& c, std::size_t degree) {
  std::vector<Integer> coeffs(degree + 1);
  coeffs[degree] = c;
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial IntPolynomial::linear(const Integer& c0, const Integer& c1) {
  return IntPolynomial(std::vector<Integer>{c0, c1});
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Integer IntPolynomial::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }

const Integer& IntPolynomial::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Integer IntPolynomial::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  return divide_exact(content());
}

Integer IntPolynomial::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial IntPolynomial::pow(unsigned exponent) const {
  IntPolynomial result = constant(1);
  IntPolynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Integer> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (sgn(lhs.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), lhs.coeffs_[i].get_mpz_t(), rhs.coeffs_[j].get_mpz_t());
    }
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) { return *this = *this * rhs; }

IntPolynomial& IntPolynomial::operator*=(const Integer& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

IntPolynomial IntPolynomial::divide_exact(const Integer& c) const {
  if (sgn(c) == 0) throw std::domain_error("polynomial division by zero");
  IntPolynomial r = *this;
  for (auto& x : r.coeffs_) {
    if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t())) {
      throw std::domain_error("polynomial coefficient not divisible");
    }
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  }
  return r;
}

std::string IntPolynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Integer& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) os << mag.get_str();
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-remainder by the zero polynomial");
  const int db = b.degree();
  const Integer lc = b.leading();
  IntPolynomial r = a;
  while (!r.is_zero() && r.degree() >= db) {
    const auto shift = static_cast<std::size_t>(r.degree() - db);
    IntPolynomial step = IntPolynomial::monomial(r.leading(), shift) * b;
    r = r * lc - step;
  }
  return r;
}

IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw std::domain_error("polynomial division not exact");
  const int db = b.degree();
  const Integer& lc = b.leading();
  std::vector<Integer> rem = a.coefficients();
  std::vector<Integer> quot(static_cast<std::size_t>(a.degree() - db + 1));
  for (int k = a.degree() - db; k >= 0; --k) {
    Integer& top = rem[static_cast<std::size_t>(k + db)];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) {
      throw std::domain_error("polynomial division not exact");
    }
    Integer q;
    mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
    for (int j = 0; j <= db; ++j) {
      const auto idx = static_cast<std::size_t>(k + j);
      mpz_submul(rem[idx].get_mpz_t(), q.get_mpz_t(), b.coefficients()[static_cast<std::size_t>(j)].get_mpz_t());
    }
    quot[static_cast<std::size_t>(k)] = q;
  }
  for (const auto& c : rem) {
    if (sgn(c) != 0) throw std::domain_error("polynomial division not exact");
  }
  return IntPolynomial(std::move(quot));
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() && b.is_zero()) return {};
  Integer cont;
  mpz_gcd(cont.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
  IntPolynomial x = a.primitive_part();
  IntPolynomial y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.primitive_part();
  }
  IntPolynomial g = x * cont;
  if (sgn(g.leading()) < 0) g = -g;
  return g;
}

}  // namespace ragrowth
