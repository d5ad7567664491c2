#include "ragrowth/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace ragrowth {

IntMatrix::IntMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) : IntMatrix(rows.size()) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != dim_) throw std::invalid_argument("matrix rows must all have length equal to the row count");
    std::size_t j = 0;
    for (long x : row) (*this)(i, j++) = x;
    ++i;
  }
}

IntMatrix IntMatrix::identity(std::size_t dim) {
  IntMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(std::span<const Integer> entries) {
  IntMatrix m(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return sgn(x) == 0; });
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& rhs) {
  if (rhs.dim_ != dim_) throw std::invalid_argument("matrix dimension mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

IntMatrix operator-(const IntMatrix& lhs, const IntMatrix& rhs) {
  if (rhs.dim_ != lhs.dim_) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix r = lhs;
  for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] -= rhs.data_[k];
  return r;
}

IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs) {
  if (rhs.dim_ != lhs.dim_) throw std::invalid_argument("matrix dimension mismatch");
  const std::size_t n = lhs.dim_;
  IntMatrix r(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Integer& a = lhs(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        mpz_addmul(r(i, j).get_mpz_t(), a.get_mpz_t(), rhs(k, j).get_mpz_t());
      }
    }
  }
  return r;
}

IntMatrix operator*(const Integer& c, IntMatrix rhs) {
  for (auto& x : rhs.data_) x *= c;
  return rhs;
}

IntVector operator*(const IntMatrix& lhs, std::span<const Integer> v) {
  if (v.size() != lhs.dim_) throw std::invalid_argument("matrix-vector dimension mismatch");
  IntVector out(lhs.dim_);
  for (std::size_t i = 0; i < lhs.dim_; ++i) {
    for (std::size_t j = 0; j < lhs.dim_; ++j) {
      const Integer& a = lhs(i, j);
      if (sgn(a) != 0) mpz_addmul(out[i].get_mpz_t(), a.get_mpz_t(), v[j].get_mpz_t());
    }
  }
  return out;
}

}  // namespace ragrowth
