#pragma once

#include <map>
#include <set>
#include <vector>

#include "bigness/group.hpp"
#include "bigness/module.hpp"

namespace fixtures {

using namespace bigness;

inline Matrix mat2(Elem a, Elem b, Elem c, Elem d) { return Matrix(2, 2, {a, b, c, d}); }

inline std::vector<Matrix> sl2_generators(const Field& F) {
  return {mat2(1, 1, 0, 1), mat2(1, 0, 1, 1)};
}

inline MatrixGroup sl2(std::uint32_t p) {
  auto F = Field::make(p, 1);
  return MatrixGroup::close(F, 2, sl2_generators(*F));
}

inline MatrixGroup unipotent(std::uint32_t p) {
  return MatrixGroup::close(Field::make(p, 1), 2, {mat2(1, 1, 0, 1)});
}

/// Companion matrix of a primitive quadratic: generates the non-split torus.
inline MatrixGroup nonsplit_torus(std::uint32_t p) {
  auto F = Field::make(p, 1);
  for (Elem c0 = 1; c0 < p; ++c0)
    for (Elem c1 = 0; c1 < p; ++c1) {
      Matrix m = mat2(0, F->neg(c0), 1, F->neg(c1));
      MatrixGroup g = MatrixGroup::close(F, 2, {m});
      if (g.order() == std::uint64_t{p} * p - 1) return g;
    }
  throw std::logic_error("no primitive quadratic");
}

/// Every square matrix over a small field, row-major codes in lexicographic
/// order.
inline std::vector<Matrix> all_matrices(const Field& F, std::size_t n) {
  std::vector<Matrix> out;
  std::vector<Elem> d(n * n, 0);
  for (;;) {
    out.emplace_back(n, n, d);
    std::size_t i = 0;
    while (i < d.size() && ++d[i] == F.order()) d[i++] = 0;
    if (i == d.size()) break;
  }
  return out;
}

inline std::set<std::vector<Elem>> element_set(const MatrixGroup& g) {
  std::set<std::vector<Elem>> s;
  for (std::size_t i = 0; i < g.order(); ++i) s.insert(g.element(i).data());
  return s;
}

/// Closure of a set of matrices under products, by naive repeated squaring of
/// the set; independent of MatrixGroup's breadth-first search.
inline std::set<std::vector<Elem>> naive_closure(const Field& F, std::size_t n, const std::vector<Matrix>& gens) {
  std::set<std::vector<Elem>> s{Matrix::identity(n).data()};
  for (const auto& g : gens) s.insert(g.data());
  for (;;) {
    std::vector<std::vector<Elem>> cur(s.begin(), s.end());
    std::size_t before = s.size();
    for (const auto& a : cur)
      for (const auto& b : cur) s.insert(mat_mul(F, Matrix(n, n, a), Matrix(n, n, b)).data());
    if (s.size() == before) return s;
  }
}

/// All subspaces of F^dim, each as a reduced echelon basis (rows).
inline std::vector<Matrix> all_subspaces(const Field& F, std::size_t dim) {
  std::vector<Matrix> out;
  // choose pivot sets by bitmask, fill free entries exhaustively
  for (std::uint32_t mask = 0; mask < (1u << dim); ++mask) {
    std::vector<std::size_t> piv;
    for (std::size_t c = 0; c < dim; ++c)
      if (mask >> c & 1) piv.push_back(c);
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t r = 0; r < piv.size(); ++r)
      for (std::size_t c = piv[r] + 1; c < dim; ++c)
        if (!(mask >> c & 1)) free.emplace_back(r, c);
    std::vector<Elem> val(free.size(), 0);
    for (;;) {
      Matrix m(piv.size(), dim);
      for (std::size_t r = 0; r < piv.size(); ++r) m(r, piv[r]) = 1;
      for (std::size_t k = 0; k < free.size(); ++k) m(free[k].first, free[k].second) = val[k];
      out.push_back(m);
      std::size_t i = 0;
      while (i < val.size() && ++val[i] == F.order()) val[i++] = 0;
      if (i == val.size()) break;
    }
  }
  return out;
}

inline bool stable(const Field& F, const std::vector<Matrix>& action, const Matrix& basis) {
  for (const auto& a : action)
    for (std::size_t r = 0; r < basis.rows(); ++r) {
      Vector w = mat_vec(F, a, basis.row(r));
      std::vector<Vector> rows;
      for (std::size_t i = 0; i < basis.rows(); ++i) rows.push_back(basis.row_vector(i));
      rows.push_back(w);
      if (rank(F, Matrix::from_rows(rows, basis.cols())) != basis.rows()) return false;
    }
  return true;
}

/// Minimal non-zero stable subspaces, found by brute force over all subspaces.
inline std::vector<Matrix> brute_force_simple_submodules(const GModule& m) {
  const Field& F = m.field();
  std::vector<Matrix> stable_spaces;
  for (auto& s : all_subspaces(F, m.dim()))
    if (s.rows() > 0 && stable(F, m.action(), s)) stable_spaces.push_back(s);
  auto contained = [&](const Matrix& a, const Matrix& b) {  // a inside b
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < b.rows(); ++i) rows.push_back(b.row_vector(i));
    for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(a.row_vector(i));
    return rank(F, Matrix::from_rows(rows, b.cols())) == b.rows();
  };
  std::vector<Matrix> simple;
  for (const auto& s : stable_spaces) {
    bool minimal = true;
    for (const auto& t : stable_spaces)
      if (t.rows() < s.rows() && contained(t, s)) {
        minimal = false;
        break;
      }
    if (minimal) simple.push_back(s);
  }
  return simple;
}

/// Every vector in the row space of basis.
inline std::vector<Vector> span_elements(const Field& F, const Matrix& basis) {
  std::vector<Vector> out;
  std::vector<Elem> c(basis.rows(), 0);
  for (;;) {
    Vector v(basis.cols(), 0);
    for (std::size_t r = 0; r < basis.rows(); ++r)
      for (std::size_t j = 0; j < basis.cols(); ++j) v[j] = F.add(v[j], F.mul(c[r], basis(r, j)));
    out.push_back(std::move(v));
    std::size_t i = 0;
    while (i < c.size() && ++c[i] == F.order()) c[i++] = 0;
    if (i == c.size()) break;
  }
  return out;
}

/// B4 by brute force: every simple submodule of ad V found by subspace
/// search, every f in it, every group element, every alpha in k; the
/// composite is read off by projecting f v along im (g - alpha)^n.
inline bool b4_brute_force(const MatrixGroup& g) {
  const Field& F = g.field();
  const std::size_t n = g.dimension();
  struct Pair {
    Vector v;
    Matrix basis;  // columns v, then im (g - a)^n
  };
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < g.order(); ++i)
    for (Elem a = 0; a < F.order(); ++a) {
      Matrix s = g.element(i);
      for (std::size_t k = 0; k < n; ++k) s(k, k) = F.sub(s(k, k), a);
      const Matrix p = mat_pow(F, s, n);
      const Matrix ker = kernel(F, p);
      if (ker.rows() != 1) continue;
      std::vector<Vector> cols{ker.row_vector(0)};
      const RowEchelon im = rref(F, transpose(p));
      for (std::size_t r = 0; r < im.rank(); ++r) cols.push_back(im.form.row_vector(r));
      pairs.push_back({ker.row_vector(0), transpose(Matrix::from_rows(cols, n))});
    }
  const GModule ad = ad_module(GModule::natural(g));
  for (const auto& w : brute_force_simple_submodules(ad)) {
    bool found = false;
    for (const auto& f : span_elements(F, w)) {
      if (is_zero(f)) continue;
      const Matrix fm(n, n, f);
      for (const auto& p : pairs) {
        const auto x = solve(F, p.basis, mat_vec(F, fm, p.v));
        if (x && (*x)[0] != 0) {
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) return false;
  }
  return true;
}

/// Subgroups of GL_2(F_p) generated by at most two elements, deduplicated by
/// element set, in order of first appearance over pairs (a, b) with a <= b.
inline std::vector<MatrixGroup> gl2_small_subgroups(std::uint32_t p) {
  auto F = Field::make(p, 1);
  std::vector<Matrix> gl;
  for (auto& m : all_matrices(*F, 2))
    if (determinant(*F, m) != 0) gl.push_back(m);
  std::vector<MatrixGroup> out;
  std::set<std::set<std::vector<Elem>>> seen;
  auto consider = [&](std::vector<Matrix> gens) {
    MatrixGroup h = MatrixGroup::close(F, 2, std::move(gens));
    if (seen.insert(element_set(h)).second) out.push_back(std::move(h));
  };
  consider({});
  for (std::size_t a = 0; a < gl.size(); ++a)
    for (std::size_t b = a; b < gl.size(); ++b) consider(a == b ? std::vector<Matrix>{gl[a]} : std::vector<Matrix>{gl[a], gl[b]});
  return out;
}

}  // namespace fixtures
