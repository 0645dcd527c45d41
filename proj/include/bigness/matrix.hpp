#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "bigness/field.hpp"
#include "bigness/poly.hpp"

namespace bigness {

using Vector = std::vector<Elem>;

/// Dense row-major matrix of field codes. The field is supplied by the caller
/// of every arithmetic routine; a Matrix on its own is plain data.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Elem> data);

  static Matrix identity(std::size_t n);
  /// Matrix whose rows are the given vectors (all of length `cols`).
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Elem operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Elem> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Elem> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  Vector row_vector(std::size_t i) const { return {data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_}; }
  Vector column(std::size_t j) const;

  const std::vector<Elem>& data() const noexcept { return data_; }
  bool is_zero() const noexcept;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

Matrix mat_mul(const Field& F, const Matrix& a, const Matrix& b);
Matrix mat_add(const Field& F, const Matrix& a, const Matrix& b);
Matrix mat_sub(const Field& F, const Matrix& a, const Matrix& b);
Matrix mat_scale(const Field& F, Elem c, const Matrix& a);
Matrix transpose(const Matrix& a);
Matrix kron(const Field& F, const Matrix& a, const Matrix& b);
Matrix mat_pow(const Field& F, const Matrix& a, std::uint64_t e);
Vector mat_vec(const Field& F, const Matrix& a, std::span<const Elem> v);
/// Row vector times matrix.
Vector vec_mat(const Field& F, std::span<const Elem> v, const Matrix& a);
Elem dot(const Field& F, std::span<const Elem> a, std::span<const Elem> b);
Elem trace(const Field& F, const Matrix& a);
Elem determinant(const Field& F, const Matrix& a);
bool is_zero(std::span<const Elem> v) noexcept;

struct RowEchelon {
  Matrix form;                      // reduced row echelon form, zero rows last
  std::vector<std::size_t> pivots;  // pivot column of each non-zero row
  std::size_t rank() const noexcept { return pivots.size(); }
};

/// Gauss-Jordan with deterministic pivoting: columns left to right, the
/// topmost available non-zero entry in each column.
RowEchelon rref(const Field& F, const Matrix& m);
std::size_t rank(const Field& F, const Matrix& m);

/// Rows form a basis of {x : m x = 0}; one row per free column, with that
/// column set to 1.
Matrix kernel(const Field& F, const Matrix& m);

/// Throws Singular if not invertible.
Matrix inverse(const Field& F, const Matrix& m);
bool is_invertible(const Field& F, const Matrix& m);

/// Some x with a x = b, if one exists.
std::optional<Vector> solve(const Field& F, const Matrix& a, std::span<const Elem> b);

/// Monic characteristic polynomial det(xI - m) by Hessenberg reduction.
Poly char_poly(const Field& F, const Matrix& m);

/// Rows span ker (g - alpha)^n, n = dim.
Matrix generalized_eigenspace(const Field& F, const Matrix& g, Elem alpha);

/// Incrementally maintained subspace with a fully reduced echelon basis.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  std::size_t dim() const noexcept { return rows_.size(); }
  std::size_t ambient() const noexcept { return ambient_; }

  /// Adds v to the span; returns true if the dimension grew.
  bool insert(const Field& F, std::span<const Elem> v);
  Vector reduce(const Field& F, std::span<const Elem> v) const;
  bool contains(const Field& F, std::span<const Elem> v) const;
  /// Coordinates against basis() order; v must lie in the span.
  Vector coordinates(const Field& F, std::span<const Elem> v) const;
  /// Reduced echelon basis, rows sorted by pivot column.
  Matrix basis() const;
  std::vector<std::size_t> pivots() const;

 private:
  std::size_t ambient_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivot_;
};

/// Echelonised row space of the rows of m.
Subspace row_space(const Field& F, const Matrix& m);

}  // namespace bigness
