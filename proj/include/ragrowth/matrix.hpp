// Square matrices over Z.

#ifndef RAGROWTH_MATRIX_HPP
#define RAGROWTH_MATRIX_HPP

#include "ragrowth/polynomial.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace ragrowth {

using IntVector = std::vector<Integer>;

class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t dim);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t dim);
  static IntMatrix diagonal(std::span<const Integer> entries);

  std::size_t dim() const { return dim_; }
  Integer& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  const Integer& operator()(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }

  bool is_zero() const;

  IntMatrix& operator+=(const IntMatrix& rhs);
  friend IntMatrix operator+(IntMatrix lhs, const IntMatrix& rhs) { return lhs += rhs; }
  friend IntMatrix operator-(const IntMatrix& lhs, const IntMatrix& rhs);
  friend IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs);
  friend IntMatrix operator*(const Integer& c, IntMatrix rhs);
  friend IntVector operator*(const IntMatrix& lhs, std::span<const Integer> v);
  friend bool operator==(const IntMatrix& lhs, const IntMatrix& rhs) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Integer> data_;
};

}  // namespace ragrowth

#endif  // RAGROWTH_MATRIX_HPP
