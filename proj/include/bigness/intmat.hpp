#pragma once

#include <cstdint>
#include <vector>

namespace bigness {

using IVec = std::vector<std::int64_t>;

/// Dense integer matrix, row-major. Arithmetic is overflow-checked and throws
/// Overflow.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<std::int64_t> data);
  static IntMatrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors.
  static IntMatrix from_columns(const std::vector<IVec>& cols, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<std::int64_t>& data() const noexcept { return data_; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

IntMatrix int_mul(const IntMatrix& a, const IntMatrix& b);
IntMatrix int_transpose(const IntMatrix& a);
IVec int_mat_vec(const IntMatrix& a, const IVec& v);
std::int64_t int_dot(const IVec& a, const IVec& b);
/// Fraction-free (Bareiss) determinant.
std::int64_t int_determinant(const IntMatrix& a);
std::size_t int_rank(const IntMatrix& a);
/// Adjugate of a square matrix: adj(a) * a = det(a) * I.
IntMatrix int_adjugate(const IntMatrix& a);

/// u * a * v = d with u, v unimodular and d diagonal, each diagonal entry
/// non-negative and dividing the next (zeros last).
struct SmithForm {
  IntMatrix u;
  IntMatrix v;
  IVec diagonal;  // length min(rows, cols)
};

/// Deterministic pivoting: smallest non-zero absolute value in the remaining
/// block, ties broken by row-major position.
SmithForm smith_normal_form(const IntMatrix& a);

/// Smallest k >= 1 with a^k = I; throws InvalidArgument if none up to `limit`.
std::uint64_t multiplicative_order(const IntMatrix& a, std::uint64_t limit = 1000);

}  // namespace bigness
