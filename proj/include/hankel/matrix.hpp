#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "hankel/errors.hpp"
#include "hankel/rational.hpp"

namespace hankel {

/// Dense square matrix, row-major.
template <class T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t order) : order_(order), entries_(order * order) {}

  SquareMatrix(std::initializer_list<std::initializer_list<T>> rows) : order_(rows.size()) {
    entries_.reserve(order_ * order_);
    for (const auto& row : rows) {
      if (row.size() != order_) throw InvalidArgument("SquareMatrix: ragged initializer");
      entries_.insert(entries_.end(), row.begin(), row.end());
    }
  }

  std::size_t order() const noexcept { return order_; }

  T& operator()(std::size_t i, std::size_t j) { return entries_[i * order_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }

  const std::vector<T>& entries() const noexcept { return entries_; }

  SquareMatrix transposed() const {
    SquareMatrix t(order_);
    for (std::size_t i = 0; i < order_; ++i)
      for (std::size_t j = 0; j < order_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t order_ = 0;
  std::vector<T> entries_;
};

using RationalMatrix = SquareMatrix<Rational>;
using IntegerMatrix = SquareMatrix<Integer>;

struct DetResult {
  Integer value;
  std::size_t pivot_swaps = 0;
};

/// Bareiss one-step fraction-free elimination. Zero pivots are replaced by
/// the first nonzero entry below them (row exchange, sign tracked); an
/// all-zero pivot column gives 0. The 0x0 determinant is 1.
DetResult det_fraction_free(IntegerMatrix m);

/// Clears each row by the lcm of its denominators and runs Bareiss on the
/// integer matrix, then divides the scale back out.
Rational det_rational(const RationalMatrix& m);

/// Determinant of an arrow matrix (zero off-diagonal outside row 0 and
/// column 0) by the closed form
///   (prod_{i>=1} a_ii) * (a_00 - sum_{i>=1} a_i0 a_0i / a_ii).
/// Throws ArrowShapeViolation or ZeroDiagonal.
Rational arrow_det(const RationalMatrix& m);

}  // namespace hankel
