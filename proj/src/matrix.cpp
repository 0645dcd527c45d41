#include "bigness/matrix.hpp"

#include <algorithm>
#include <numeric>

#include "bigness/error.hpp"

namespace bigness {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Elem> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) throw Error(ErrorKind::ShapeMismatch, "matrix data size");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorKind::ShapeMismatch, "row length");
    std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
  }
  return m;
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

bool Matrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e == 0; });
}

bool is_zero(std::span<const Elem> v) noexcept {
  return std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; });
}

Matrix mat_mul(const Field& F, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::ShapeMismatch, "mat_mul");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto out = c.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Elem x = a(i, k);
      if (x == 0) continue;
      auto br = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (br[j]) out[j] = F.add(out[j], F.mul(x, br[j]));
    }
  }
  return c;
}

Matrix mat_add(const Field& F, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorKind::ShapeMismatch, "mat_add");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = F.add(a(i, j), b(i, j));
  return c;
}

Matrix mat_sub(const Field& F, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorKind::ShapeMismatch, "mat_sub");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = F.sub(a(i, j), b(i, j));
  return c;
}

Matrix mat_scale(const Field& F, Elem s, const Matrix& a) {
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = F.mul(s, a(i, j));
  return c;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

Matrix kron(const Field& F, const Matrix& a, const Matrix& b) {
  Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Elem x = a(i, j);
      if (x == 0) continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
          k(i * b.rows() + r, j * b.cols() + c) = F.mul(x, b(r, c));
    }
  return k;
}

Matrix mat_pow(const Field& F, const Matrix& a, std::uint64_t e) {
  if (!a.square()) throw Error(ErrorKind::NotSquare, "mat_pow");
  Matrix result = Matrix::identity(a.rows());
  Matrix base = a;
  while (e) {
    if (e & 1) result = mat_mul(F, result, base);
    e >>= 1;
    if (e) base = mat_mul(F, base, base);
  }
  return result;
}

Vector mat_vec(const Field& F, const Matrix& a, std::span<const Elem> v) {
  if (a.cols() != v.size()) throw Error(ErrorKind::ShapeMismatch, "mat_vec");
  Vector out(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) out[i] = dot(F, a.row(i), v);
  return out;
}

Vector vec_mat(const Field& F, std::span<const Elem> v, const Matrix& a) {
  if (a.rows() != v.size()) throw Error(ErrorKind::ShapeMismatch, "vec_mat");
  Vector out(a.cols(), 0);
  for (std::size_t k = 0; k < a.rows(); ++k) {
    if (v[k] == 0) continue;
    auto r = a.row(k);
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (r[j]) out[j] = F.add(out[j], F.mul(v[k], r[j]));
  }
  return out;
}

Elem dot(const Field& F, std::span<const Elem> a, std::span<const Elem> b) {
  Elem s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) s = F.add(s, F.mul(a[i], b[i]));
  return s;
}

Elem trace(const Field& F, const Matrix& a) {
  if (!a.square()) throw Error(ErrorKind::NotSquare, "trace");
  Elem s = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) s = F.add(s, a(i, i));
  return s;
}

Elem determinant(const Field& F, const Matrix& a) {
  if (!a.square()) throw Error(ErrorKind::NotSquare, "determinant");
  Matrix m = a;
  const std::size_t n = m.rows();
  Elem det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = F.neg(det);
    }
    det = F.mul(det, m(c, c));
    const Elem inv = F.inv(m(c, c));
    for (std::size_t r = c + 1; r < n; ++r) {
      const Elem f = F.mul(m(r, c), inv);
      if (f == 0) continue;
      for (std::size_t j = c; j < n; ++j) m(r, j) = F.sub(m(r, j), F.mul(f, m(c, j)));
    }
  }
  return det;
}

RowEchelon rref(const Field& F, const Matrix& input) {
  RowEchelon out{input, {}};
  Matrix& m = out.form;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      auto a = m.row(p), b = m.row(r);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    const Elem inv = F.inv(m(r, c));
    auto pr = m.row(r);
    for (std::size_t j = c; j < cols; ++j) pr[j] = F.mul(pr[j], inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Elem f = m(i, c);
      if (f == 0) continue;
      auto ri = m.row(i);
      for (std::size_t j = c; j < cols; ++j)
        if (pr[j]) ri[j] = F.sub(ri[j], F.mul(f, pr[j]));
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

std::size_t rank(const Field& F, const Matrix& m) { return rref(F, m).rank(); }

Matrix kernel(const Field& F, const Matrix& m) {
  const RowEchelon e = rref(F, m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector x(n, 0);
    x[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = F.neg(e.form(i, f));
    basis.push_back(std::move(x));
  }
  return Matrix::from_rows(basis, n);
}

Matrix inverse(const Field& F, const Matrix& m) {
  if (!m.square()) throw Error(ErrorKind::NotSquare, "inverse");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const RowEchelon e = rref(F, aug);
  if (e.rank() < n || (n > 0 && e.pivots[n - 1] != n - 1))
    throw Error(ErrorKind::Singular, "matrix is not invertible");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.form(i, n + j);
  return inv;
}

bool is_invertible(const Field& F, const Matrix& m) {
  return m.square() && rank(F, m) == m.rows();
}

std::optional<Vector> solve(const Field& F, const Matrix& a, std::span<const Elem> b) {
  if (b.size() != a.rows()) throw Error(ErrorKind::ShapeMismatch, "solve");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const RowEchelon e = rref(F, aug);
  Vector x(a.cols(), 0);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == a.cols()) return std::nullopt;
    x[e.pivots[i]] = e.form(i, a.cols());
  }
  return x;
}

Poly char_poly(const Field& F, const Matrix& input) {
  if (!input.square()) throw Error(ErrorKind::NotSquare, "char_poly");
  const std::size_t n = input.rows();
  Matrix h = input;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h(i, m - 1) == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(i, j), h(m, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(h(j, i), h(j, m));
    }
    const Elem t_inv = F.inv(h(m, m - 1));
    for (std::size_t j = m + 1; j < n; ++j) {
      const Elem u = F.mul(h(j, m - 1), t_inv);
      if (u == 0) continue;
      for (std::size_t k = 0; k < n; ++k) h(j, k) = F.sub(h(j, k), F.mul(u, h(m, k)));
      for (std::size_t k = 0; k < n; ++k) h(k, m) = F.add(h(k, m), F.mul(u, h(k, j)));
    }
  }
  // p[m] is the characteristic polynomial of the leading m x m block.
  std::vector<Poly> p(n + 1);
  p[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    Poly cur = poly_mul(F, Poly{F.neg(h(m - 1, m - 1)), 1}, p[m - 1]);
    Elem prod = 1;
    for (std::size_t i = 1; i < m; ++i) {
      prod = F.mul(prod, h(m - i, m - i - 1));
      if (prod == 0) break;
      const Elem coeff = F.mul(h(m - i - 1, m - 1), prod);
      if (coeff == 0) continue;
      Poly term = p[m - i - 1];
      for (auto& c : term) c = F.mul(c, coeff);
      cur = poly_sub(F, cur, term);
    }
    p[m] = std::move(cur);
  }
  return p[n];
}

Matrix generalized_eigenspace(const Field& F, const Matrix& g, Elem alpha) {
  if (!g.square()) throw Error(ErrorKind::NotSquare, "generalized_eigenspace");
  const std::size_t n = g.rows();
  Matrix shifted = g;
  for (std::size_t i = 0; i < n; ++i) shifted(i, i) = F.sub(shifted(i, i), alpha);
  return kernel(F, mat_pow(F, shifted, n));
}

bool Subspace::insert(const Field& F, std::span<const Elem> v) {
  Vector r = reduce(F, v);
  std::size_t c = 0;
  while (c < r.size() && r[c] == 0) ++c;
  if (c == r.size()) return false;
  const Elem inv = F.inv(r[c]);
  for (auto& x : r) x = F.mul(x, inv);
  for (auto& row : rows_) {
    const Elem f = row[c];
    if (f == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (r[j]) row[j] = F.sub(row[j], F.mul(f, r[j]));
  }
  rows_.push_back(std::move(r));
  pivot_.push_back(c);
  return true;
}

Vector Subspace::reduce(const Field& F, std::span<const Elem> v) const {
  if (v.size() != ambient_) throw Error(ErrorKind::ShapeMismatch, "Subspace vector length");
  Vector r(v.begin(), v.end());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Elem f = r[pivot_[i]];
    if (f == 0) continue;
    const auto& row = rows_[i];
    for (std::size_t j = 0; j < ambient_; ++j)
      if (row[j]) r[j] = F.sub(r[j], F.mul(f, row[j]));
  }
  return r;
}

bool Subspace::contains(const Field& F, std::span<const Elem> v) const {
  return is_zero(reduce(F, v));
}

Vector Subspace::coordinates(const Field& F, std::span<const Elem> v) const {
  if (!contains(F, v)) throw Error(ErrorKind::InvalidArgument, "vector not in subspace");
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return pivot_[a] < pivot_[b]; });
  Vector c(rows_.size());
  for (std::size_t k = 0; k < order.size(); ++k) c[k] = v[pivot_[order[k]]];
  return c;
}

Matrix Subspace::basis() const {
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return pivot_[a] < pivot_[b]; });
  Matrix m(rows_.size(), ambient_);
  for (std::size_t k = 0; k < order.size(); ++k)
    std::copy(rows_[order[k]].begin(), rows_[order[k]].end(), m.row(k).begin());
  return m;
}

std::vector<std::size_t> Subspace::pivots() const {
  std::vector<std::size_t> p = pivot_;
  std::sort(p.begin(), p.end());
  return p;
}

Subspace row_space(const Field& F, const Matrix& m) {
  Subspace s(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) s.insert(F, m.row(i));
  return s;
}

}  // namespace bigness
