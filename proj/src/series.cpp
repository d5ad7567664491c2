#include "ragrowth/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace ragrowth {

Series::Series(int order) {
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

Series::Series(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("series needs at least the constant coefficient");
}

Series Series::truncated(int order) const {
  if (order > this->order()) throw std::invalid_argument("cannot extend a truncated series");
  return Series(std::vector<Integer>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

Series operator+(const Series& a, const Series& b) {
  Series r(std::min(a.order(), b.order()));
  for (std::size_t n = 0; n < r.coeffs_.size(); ++n) r.coeffs_[n] = a.coeffs_[n] + b.coeffs_[n];
  return r;
}

Series operator-(const Series& a, const Series& b) {
  Series r(std::min(a.order(), b.order()));
  for (std::size_t n = 0; n < r.coeffs_.size(); ++n) r.coeffs_[n] = a.coeffs_[n] - b.coeffs_[n];
  return r;
}

Series operator*(const Series& a, const Series& b) {
  Series r(std::min(a.order(), b.order()));
  const std::size_t len = r.coeffs_.size();
  for (std::size_t i = 0; i < len; ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; i + j < len; ++j) {
      mpz_addmul(r.coeffs_[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return r;
}

Series series_expand(const RationalFunction& f, int order) {
  const IntPolynomial& num = f.numerator();
  const IntPolynomial& den = f.denominator();
  const Integer d0 = den.coeff(0);
  if (sgn(d0) == 0) throw std::domain_error("not expandable at origin");
  Series s(order);
  const auto len = static_cast<std::size_t>(order) + 1;
  const auto dlen = den.coefficients().size();
  for (std::size_t n = 0; n < len; ++n) {
    Integer acc = num.coeff(n);
    for (std::size_t k = 1; k < dlen && k <= n; ++k) {
      mpz_submul(acc.get_mpz_t(), den.coefficients()[k].get_mpz_t(), s[n - k].get_mpz_t());
    }
    if (!mpz_divisible_p(acc.get_mpz_t(), d0.get_mpz_t())) {
      throw std::domain_error("series expansion has non-integer coefficients");
    }
    mpz_divexact(s[n].get_mpz_t(), acc.get_mpz_t(), d0.get_mpz_t());
  }
  return s;
}

Series series_compose(const Series& outer, const Series& inner) {
  if (sgn(inner[0]) != 0) throw std::domain_error("inner series must vanish at the origin");
  const int order = std::min(outer.order(), inner.order());
  // Horner: (...((a_N) g + a_{N-1}) g + ...) g + a_0
  const Series g = inner.truncated(order);
  Series acc(order);
  for (int k = order; k >= 0; --k) {
    acc = acc * g;
    acc[0] += outer[static_cast<std::size_t>(k)];
  }
  return acc;
}

Series series_compose(const Series& outer, const RationalFunction& inner, int order) {
  if (sgn(inner.numerator().coeff(0)) != 0) {
    throw std::domain_error("inner series must vanish at the origin");
  }
  if (order > outer.order()) throw std::invalid_argument("outer series is truncated below the requested order");
  return series_compose(outer.truncated(order), series_expand(inner, order));
}

Series series_compose(const RationalFunction& outer, const RationalFunction& inner, int order) {
  if (sgn(inner.numerator().coeff(0)) != 0) throw std::domain_error("inner series must vanish at the origin");
  return series_compose(series_expand(outer, order), series_expand(inner, order));
}

}  // namespace ragrowth
