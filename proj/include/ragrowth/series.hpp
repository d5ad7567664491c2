// Truncated power series with integer coefficients.

#ifndef RAGROWTH_SERIES_HPP
#define RAGROWTH_SERIES_HPP

#include "ragrowth/rational_function.hpp"

#include <vector>

namespace ragrowth {

/// a_0 + a_1 t + ... + a_N t^N + O(t^(N+1)). The order N is explicit and
/// binary operations truncate to the smaller order of their operands.
class Series {
 public:
  Series() = default;
  /// Zero series of the given order.
  explicit Series(int order);
  /// coeffs.size() - 1 is the order; coeffs must be non-empty.
  explicit Series(std::vector<Integer> coeffs);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  const Integer& operator[](std::size_t n) const { return coeffs_.at(n); }
  Integer& operator[](std::size_t n) { return coeffs_.at(n); }

  Series truncated(int order) const;

  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);
  friend bool operator==(const Series& a, const Series& b) = default;

 private:
  std::vector<Integer> coeffs_;
};

/// Maclaurin coefficients a_0..a_N of f by long division. Throws
/// std::domain_error if den(0) = 0 ("not expandable at origin") or a
/// coefficient is not an integer.
Series series_expand(const RationalFunction& f, int order);

/// outer(inner(t)) truncated at the given order; inner must have zero
/// constant term (std::domain_error otherwise).
Series series_compose(const Series& outer, const RationalFunction& inner, int order);
Series series_compose(const RationalFunction& outer, const RationalFunction& inner, int order);
Series series_compose(const Series& outer, const Series& inner);

}  // namespace ragrowth

#endif  // RAGROWTH_SERIES_HPP
