#include "bigness/verify.hpp"

#include <map>

namespace bigness {

namespace {

Matrix sub_scalar(const Field& F, Matrix a, Elem alpha) {
  for (std::size_t i = 0; i < a.rows(); ++i) a(i, i) = F.sub(a(i, i), alpha);
  return a;
}

// Action of x on traceless matrices: coordinates are vec(T) without the last
// entry, basis E_ij (i != j) and E_ii - E_nn.
Matrix traceless_action(const Field& F, const Matrix& x, const Matrix& xinv) {
  const std::size_t n = x.rows();
  const std::size_t m = n * n - 1;
  Matrix out(m, m);
  for (std::size_t k = 0; k < m; ++k) {
    Matrix b(n, n);
    const std::size_t i = k / n, j = k % n;
    b(i, j) = 1;
    if (i == j) b(n - 1, n - 1) = F.neg(1);
    const Matrix c = mat_mul(F, mat_mul(F, x, b), xinv);
    for (std::size_t r = 0; r < m; ++r) out(r, k) = c.data()[r];
  }
  return out;
}

struct Closure {
  std::vector<Matrix> elements;
  std::vector<std::size_t> parent;
  std::vector<std::size_t> via;
  std::map<std::vector<Elem>, std::size_t> index;
  bool complete = true;
};

// Breadth-first closure under right multiplication by generators.
Closure close_right(const Field& F, std::size_t n, const std::vector<Matrix>& gens, std::uint64_t cap) {
  Closure c;
  c.elements.push_back(Matrix::identity(n));
  c.parent.push_back(0);
  c.via.push_back(0);
  c.index.emplace(c.elements[0].data(), 0);
  for (std::size_t head = 0; head < c.elements.size(); ++head)
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Matrix y = mat_mul(F, c.elements[head], gens[s]);
      if (c.index.count(y.data())) continue;
      if (c.elements.size() >= cap) {
        c.complete = false;
        return c;
      }
      c.index.emplace(y.data(), c.elements.size());
      c.elements.push_back(std::move(y));
      c.parent.push_back(head);
      c.via.push_back(s);
    }
  return c;
}

}  // namespace

VerifierReport verify_certificate(const FieldPtr& field, std::size_t n, const std::vector<Matrix>& gens,
                                  const BignessCertificate& cert, std::uint64_t cap) {
  const Field& F = *field;
  VerifierReport rep;
  auto problem = [&](std::string s) { rep.problems.push_back(std::move(s)); };

  const Closure cl = close_right(F, n, gens, cap);
  if (!cl.complete) {
    problem("closure exceeds cap");
    return rep;
  }
  rep.order = cl.elements.size();
  if (rep.order != cert.order) problem("group order differs from certificate");

  // (B4) witnesses.
  for (const auto& w : cert.b4.witnesses) {
    ++rep.witnesses_checked;
    const std::string tag = "witness family " + std::to_string(w.family) + " line " + std::to_string(w.line) + ": ";
    if (!cl.index.count(w.g.data())) {
      problem(tag + "g is not in the group");
      continue;
    }
    const Matrix shifted = mat_pow(F, sub_scalar(F, w.g, w.alpha), n);
    const Matrix eig = kernel(F, shifted);
    if (eig.rows() != 1) {
      problem(tag + "generalized eigenspace is not one-dimensional");
      continue;
    }
    // V = ker (g-a)^n + im (g-a)^n; read off the V_{g,a} component of f v.
    const Vector v = eig.row_vector(0);
    const Vector fv = mat_vec(F, w.f, v);
    std::vector<Vector> cols{v};
    const Matrix st = transpose(shifted);
    const RowEchelon im = rref(F, st);
    for (std::size_t r = 0; r < im.rank(); ++r) cols.push_back(im.form.row_vector(r));
    const Matrix basis = transpose(Matrix::from_rows(cols, n));
    const auto x = solve(F, basis, fv);
    if (!x || (*x)[0] == 0) problem(tag + "composite vanishes");
  }

  // (B4) by rank of the eigen-functionals.
  Subspace span(n * n);
  for (const auto& g : cl.elements) {
    if (span.dim() == n * n) break;
    for (Elem a = 0; a < F.order() && span.dim() < n * n; ++a) {
      const Matrix s = sub_scalar(F, g, a);
      if (kernel(F, mat_pow(F, s, n)).rows() != 1) continue;
      const Matrix right = kernel(F, s);
      const Matrix left = kernel(F, transpose(s));
      Vector psi(n * n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) psi[i * n + j] = F.mul(left(0, i), right(0, j));
      span.insert(F, psi);
    }
  }
  rep.functional_rank = span.dim();
  rep.b4 = rep.functional_rank == n * n;
  if (cert.b4.evaluated && rep.b4 != cert.b4.holds) problem("B4 verdict differs from the functional rank test");

  // Commutant: X with X s = s X for every generator.
  {
    Matrix sys(gens.size() * n * n, n * n);
    for (std::size_t k = 0; k < gens.size(); ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const std::size_t row = k * n * n + i * n + j;
          // (X s)_ij - (s X)_ij
          for (std::size_t t = 0; t < n; ++t) {
            sys(row, i * n + t) = F.add(sys(row, i * n + t), gens[k](t, j));
            sys(row, t * n + j) = F.sub(sys(row, t * n + j), gens[k](i, t));
          }
        }
    rep.commutant_dim = kernel(F, sys).rows();
    if (rep.commutant_dim != cert.b2.commutant_dim) problem("commutant dimension differs");
  }

  // (B3): cocycles f(x s) = f(x) + x f(s) along the right-multiplication tree.
  const std::size_t m = n * n - 1;
  const std::size_t k = gens.size();
  if (m == 0) {
    rep.h1_checked = true;
  } else if (rep.order * m * m * k <= kVerifierCocycleBudget) {
    rep.h1_checked = true;
    std::vector<Matrix> rho_gen;
    for (const auto& s : gens) rho_gen.push_back(traceless_action(F, s, inverse(F, s)));
    std::vector<Matrix> rho(rep.order), form(rep.order);
    rho[0] = Matrix::identity(m);
    form[0] = Matrix(m, m * k);
    Subspace constraints(m * k);
    for (std::size_t x = 0; x < rep.order; ++x)
      for (std::size_t s = 0; s < k; ++s) {
        Matrix next = form[x];
        for (std::size_t r = 0; r < m; ++r)
          for (std::size_t c = 0; c < m; ++c) next(r, s * m + c) = F.add(next(r, s * m + c), rho[x](r, c));
        const std::size_t y = cl.index.at(mat_mul(F, cl.elements[x], gens[s]).data());
        if (y != 0 && cl.parent[y] == x && cl.via[y] == s && form[y].empty()) {
          form[y] = std::move(next);
          rho[y] = mat_mul(F, rho[x], rho_gen[s]);
        } else {
          const Matrix diff = mat_sub(F, next, form[y]);
          for (std::size_t r = 0; r < m; ++r) constraints.insert(F, diff.row(r));
        }
      }
    const std::size_t z1 = m * k - constraints.dim();
    Matrix fixed_sys(k * m, m);
    for (std::size_t s = 0; s < k; ++s) {
      const Matrix d = sub_scalar(F, rho_gen[s], 1);
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) fixed_sys(s * m + r, c) = d(r, c);
    }
    const std::size_t fixed = k == 0 ? m : kernel(F, fixed_sys).rows();
    rep.h1 = z1 - (m - fixed);
    if (rep.h1 != cert.b3.h1) problem("h1 differs from certificate");
  } else if (cert.b3.h1 == 0 && cert.b3.sylow_bound == 0) {
    problem("cocycle system too large to re-solve; Sylow bound not independently confirmed");
  } else {
    problem("cocycle system too large to re-solve");
  }

  rep.ok = rep.problems.empty();
  return rep;
}

}  // namespace bigness
