#include "bigness/intmat.hpp"

#include <cstdlib>
#include <numeric>
#include <utility>

#include "bigness/error.hpp"

namespace bigness {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<std::int64_t> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) throw Error(ErrorKind::ShapeMismatch, "integer matrix data size");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IVec>& cols, std::size_t rows) {
  IntMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw Error(ErrorKind::ShapeMismatch, "column length");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer addition overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer multiplication overflow");
  return r;
}

IntMatrix int_mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::ShapeMismatch, "int_mul");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = checked_add(c(i, j), checked_mul(a(i, k), b(k, j)));
    }
  return c;
}

IntMatrix int_transpose(const IntMatrix& a) {
  IntMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

IVec int_mat_vec(const IntMatrix& a, const IVec& v) {
  if (a.cols() != v.size()) throw Error(ErrorKind::ShapeMismatch, "int_mat_vec");
  IVec out(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] = checked_add(out[i], checked_mul(a(i, j), v[j]));
  return out;
}

std::int64_t int_dot(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::ShapeMismatch, "int_dot");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

std::int64_t int_determinant(const IntMatrix& input) {
  if (input.rows() != input.cols()) throw Error(ErrorKind::NotSquare, "int_determinant");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix m = input;
  std::int64_t sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        const std::int64_t num = checked_add(checked_mul(m(i, j), m(k, k)), -checked_mul(m(i, k), m(k, j)));
        m(i, j) = num / prev;
      }
    prev = m(k, k);
  }
  return checked_mul(sign, m(n - 1, n - 1));
}

std::size_t int_rank(const IntMatrix& a) {
  const auto s = smith_normal_form(a);
  std::size_t r = 0;
  for (auto d : s.diagonal) r += d != 0;
  return r;
}

IntMatrix int_adjugate(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::NotSquare, "int_adjugate");
  const std::size_t n = a.rows();
  IntMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (std::size_t r = 0, mr = 0; r < n; ++r) {
        if (r == j) continue;
        for (std::size_t c = 0, mc = 0; c < n; ++c) {
          if (c == i) continue;
          minor(mr, mc++) = a(r, c);
        }
        ++mr;
      }
      const std::int64_t d = int_determinant(minor);
      adj(i, j) = (i + j) % 2 ? -d : d;
    }
  return adj;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}
void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}
// row[dst] -= k * row[src]
void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, std::int64_t k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) = checked_add(m(dst, j), -checked_mul(k, m(src, j)));
}
void col_axpy(IntMatrix& m, std::size_t dst, std::size_t src, std::int64_t k) {
  if (k == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) = checked_add(m(i, dst), -checked_mul(k, m(i, src)));
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t r = a.rows(), c = a.cols();
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(r), v = IntMatrix::identity(c);
  const std::size_t steps = std::min(r, c);
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // pivot: smallest non-zero |entry| in the block
      std::size_t pi = r, pj = c;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j)
          if (d(i, j) != 0 && (pi == r || std::llabs(d(i, j)) < std::llabs(d(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == r) break;  // block is zero
      if (pi != t) {
        swap_rows(d, pi, t);
        swap_rows(u, pi, t);
      }
      if (pj != t) {
        swap_cols(d, pj, t);
        swap_cols(v, pj, t);
      }
      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        const std::int64_t k = d(i, t) / d(t, t);
        row_axpy(d, i, t, k);
        row_axpy(u, i, t, k);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        const std::int64_t k = d(t, j) / d(t, t);
        col_axpy(d, j, t, k);
        col_axpy(v, j, t, k);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility of the remaining block
      std::size_t bad = r;
      for (std::size_t i = t + 1; i < r && bad == r; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == r) break;
      row_axpy(d, t, bad, -1);
      row_axpy(u, t, bad, -1);
    }
    if (d(t, t) < 0) {
      for (std::size_t j = 0; j < c; ++j) d(t, j) = -d(t, j);
      for (std::size_t j = 0; j < r; ++j) u(t, j) = -u(t, j);
    }
  }
  SmithForm out{std::move(u), std::move(v), IVec(steps)};
  for (std::size_t t = 0; t < steps; ++t) out.diagonal[t] = d(t, t);
  return out;
}

std::uint64_t multiplicative_order(const IntMatrix& a, std::uint64_t limit) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::NotSquare, "multiplicative_order");
  const IntMatrix id = IntMatrix::identity(a.rows());
  IntMatrix x = a;
  for (std::uint64_t k = 1; k <= limit; ++k) {
    if (x == id) return k;
    x = int_mul(x, a);
  }
  throw Error(ErrorKind::InvalidArgument, "matrix has no finite order within the limit");
}

}  // namespace bigness
