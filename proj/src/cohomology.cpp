#include "bigness/cohomology.hpp"

#include "bigness/error.hpp"

namespace bigness {

Matrix fixed_points(const GModule& m) {
  const Field& F = m.field();
  const std::size_t n = m.dim();
  std::vector<Vector> rows;
  for (const auto& a : m.action())
    for (std::size_t i = 0; i < n; ++i) {
      Vector r = a.row_vector(i);
      r[i] = F.sub(r[i], 1);
      rows.push_back(std::move(r));
    }
  if (rows.empty()) return Matrix::identity(n);
  return kernel(F, Matrix::from_rows(rows, n));
}

CocycleSpace h1(const MatrixGroup& g, const GModule& m) {
  if (m.generator_count() != g.generators().size())
    throw Error(ErrorKind::ShapeMismatch, "module and group have different generator counts");
  const Field& F = m.field();
  const std::size_t n = m.dim(), k = g.generators().size(), u = n * k;
  CocycleSpace out;
  out.fixed_dim = fixed_points(m).rows();
  out.b1_dim = n - out.fixed_dim;
  if (u == 0) return out;

  // forms[x] is the n x u matrix with f(x) = forms[x] * (generator values).
  std::vector<Matrix> forms(g.order());
  forms[0] = Matrix(n, u);
  Subspace constraints(u);
  for (std::size_t i = 1; i < g.order(); ++i) {
    // Children are discovered in index order, so their parents are known.
    const std::size_t s = g.gen_of(i), p = g.parent_of(i);
    Matrix l = mat_mul(F, m.action()[s], forms[p]);
    for (std::size_t r = 0; r < n; ++r) l(r, s * n + r) = F.add(l(r, s * n + r), 1);
    forms[i] = std::move(l);
  }
  // Every edge x -> s x not used by the tree gives f(sx) - f(s) - s f(x) = 0.
  for (std::size_t x = 0; x < g.order() && constraints.dim() < u; ++x) {
    for (std::size_t s = 0; s < k && constraints.dim() < u; ++s) {
      const Matrix y = mat_mul(F, g.generators()[s], g.element(x));
      const std::size_t yi = *g.index_of(y);
      if (yi != 0 && g.parent_of(yi) == x && g.gen_of(yi) == s) continue;
      Matrix c = mat_mul(F, m.action()[s], forms[x]);
      for (std::size_t r = 0; r < n; ++r) c(r, s * n + r) = F.add(c(r, s * n + r), 1);
      c = mat_sub(F, c, forms[yi]);
      for (std::size_t r = 0; r < n && constraints.dim() < u; ++r) constraints.insert(F, c.row(r));
    }
  }
  out.z1_dim = u - constraints.dim();
  out.h1_dim = out.z1_dim - out.b1_dim;

  // Representatives: extend a basis of coboundaries by cocycles.
  const Matrix z = kernel(F, constraints.basis());
  Subspace span(u);
  for (std::size_t j = 0; j < n; ++j) {
    Vector b(u, 0);
    for (std::size_t s = 0; s < k; ++s)
      for (std::size_t r = 0; r < n; ++r) {
        Elem v = m.action()[s](r, j);
        if (r == j) v = F.sub(v, 1);
        b[s * n + r] = v;
      }
    span.insert(F, b);
  }
  for (std::size_t i = 0; i < z.rows(); ++i)
    if (span.insert(F, z.row(i))) out.representatives.push_back(z.row_vector(i));
  return out;
}

std::vector<Vector> cocycle_values(const MatrixGroup& g, const GModule& m, const Vector& gen_values) {
  const Field& F = m.field();
  const std::size_t n = m.dim();
  std::vector<Vector> vals(g.order());
  vals[0] = Vector(n, 0);
  for (std::size_t i = 1; i < g.order(); ++i) {
    const std::size_t s = g.gen_of(i);
    Vector v = mat_vec(F, m.action()[s], vals[g.parent_of(i)]);
    for (std::size_t r = 0; r < n; ++r) v[r] = F.add(v[r], gen_values[s * n + r]);
    vals[i] = std::move(v);
  }
  return vals;
}

std::size_t h1_upper_bound_via_sylow(const MatrixGroup& g, const GModule& m, const MatrixGroup& p) {
  const std::uint32_t ell = m.field().characteristic();
  if (p.order() != ell_part(g.order(), ell) || !is_subgroup(p, g))
    throw Error(ErrorKind::NoSylowFound, "subgroup is not a Sylow subgroup");
  if (p.order() == 1) return 0;
  return h1(p, restrict_module(g, m, p)).h1_dim;
}

std::size_t h1_upper_bound_via_sylow(const MatrixGroup& g, const GModule& m) {
  return h1_upper_bound_via_sylow(g, m, sylow_subgroup(g, m.field().characteristic()));
}

}  // namespace bigness
