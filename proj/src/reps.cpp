#include "bigness/reps.hpp"

#include <algorithm>

#include "bigness/error.hpp"

namespace bigness {

namespace {

FieldPtr field_of_order(std::uint32_t q) {
  const auto primes = prime_divisors(q);
  if (q < 2 || primes.size() != 1) throw Error(ErrorKind::InvalidArgument, "q must be a prime power");
  std::uint32_t d = 0;
  for (std::uint64_t x = q; x > 1; x /= primes[0]) ++d;
  return Field::make(static_cast<std::uint32_t>(primes[0]), d);
}

std::string rep_name(const std::string& family, std::initializer_list<std::pair<const char*, std::uint64_t>> params) {
  std::string s = family;
  for (const auto& [k, v] : params) s += std::string(" ") + k + "=" + std::to_string(v);
  return s;
}

// Coefficients of (a x + c y)^(m-i) (b x + d y)^i on x^(m-j) y^j, over any
// ring given by the callbacks.
template <class T, class Add, class Mul>
std::vector<T> sym_column(std::uint32_t m, std::uint32_t i, T a, T b, T c, T d, T one, Add add, Mul mul) {
  std::vector<T> p{one};
  auto times_linear = [&](T u, T v) {  // p *= (u x + v y)
    std::vector<T> r(p.size() + 1, T{});
    for (std::size_t j = 0; j < p.size(); ++j) {
      r[j] = add(r[j], mul(p[j], u));
      r[j + 1] = add(r[j + 1], mul(p[j], v));
    }
    p = std::move(r);
  };
  for (std::uint32_t k = 0; k < m - i; ++k) times_linear(a, c);
  for (std::uint32_t k = 0; k < i; ++k) times_linear(b, d);
  return p;
}

ConstructedRep sym_power_common(std::uint32_t m, std::uint32_t ell, bool integral) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "m must be at least 1");
  if (!is_prime(ell)) throw Error(ErrorKind::NotPrime, "ell must be prime");
  auto F = Field::make(ell, 1);
  const std::size_t dim = m + 1;
  std::vector<Matrix> images;
  for (const Matrix& g : sln_generators(*F, 2)) {
    Matrix img(dim, dim);
    for (std::uint32_t i = 0; i <= m; ++i) {
      if (integral) {
        auto col = sym_column<std::int64_t>(
            m, i, g(0, 0), g(0, 1), g(1, 0), g(1, 1), 1, [](auto x, auto y) { return checked_add(x, y); },
            [](auto x, auto y) { return checked_mul(x, y); });
        for (std::size_t j = 0; j < dim; ++j) img(j, i) = F->from_int(col[j]);
      } else {
        auto col = sym_column<Elem>(
            m, i, g(0, 0), g(0, 1), g(1, 0), g(1, 1), 1, [&](Elem x, Elem y) { return F->add(x, y); },
            [&](Elem x, Elem y) { return F->mul(x, y); });
        for (std::size_t j = 0; j < dim; ++j) img(j, i) = col[j];
      }
    }
    images.push_back(std::move(img));
  }
  MatrixGroup group(F, dim, images);
  group.name = rep_name(integral ? "sym-power-sl2-integral" : "sym-power-sl2", {{"m", m}, {"l", ell}});
  GModule mod(F, dim, images);
  ConstructedRep rep{std::move(group), std::move(mod), builtin_catalog().datum("SL2"), IVec{std::int64_t(m)}, {}, {{2}},
                     {}, {}};
  Matrix e(dim, dim), f(dim, dim);
  for (std::uint32_t i = 0; i <= m; ++i) {
    rep.weights.push_back({std::int64_t(m) - 2 * std::int64_t(i)});
    if (i > 0) e(i - 1, i) = F->from_int(i);
    if (i < m) f(i + 1, i) = F->from_int(m - i);
  }
  rep.raising.push_back(std::move(e));
  rep.lowering.push_back(std::move(f));
  return rep;
}

Matrix common_kernel(const Field& F, const std::vector<Matrix>& ops, std::size_t dim) {
  Matrix stacked(ops.size() * dim, dim);
  for (std::size_t k = 0; k < ops.size(); ++k)
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) stacked(k * dim + i, j) = ops[k](i, j);
  return kernel(F, stacked);
}

// Index k when the rows of basis span exactly e_k.
std::optional<std::size_t> basis_vector_index(const Matrix& basis) {
  if (basis.rows() != 1) return std::nullopt;
  std::optional<std::size_t> k;
  for (std::size_t j = 0; j < basis.cols(); ++j)
    if (basis(0, j) != 0) {
      if (k) return std::nullopt;
      k = j;
    }
  return k;
}

void set_highest_weight(const Field& F, ConstructedRep& rep) {
  rep.highest_weight.reset();
  if (rep.raising.empty() || rep.weights.empty()) return;
  if (auto k = basis_vector_index(common_kernel(F, rep.raising, rep.module.dim()))) rep.highest_weight = rep.weights[*k];
}

}  // namespace

std::vector<Matrix> sln_generators(const Field& F, std::size_t n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "SL_n needs n >= 2");
  std::vector<Matrix> gens;
  Matrix t = Matrix::identity(n);
  t(0, 0) = F.generator();
  t(1, 1) = F.inv(F.generator());
  gens.push_back(std::move(t));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Matrix u = Matrix::identity(n);
    u(i, i + 1) = 1;
    gens.push_back(std::move(u));
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Matrix l = Matrix::identity(n);
    l(i + 1, i) = 1;
    gens.push_back(std::move(l));
  }
  return gens;
}

ConstructedRep sym_power_sl2(std::uint32_t m, std::uint32_t ell) {
  return sym_power_common(m, ell, false);
}

ConstructedRep reduce_integral_sym_power(std::uint32_t m, std::uint32_t ell) {
  return sym_power_common(m, ell, true);
}

ConstructedRep standard_sln(std::size_t n, std::uint32_t q) {
  auto F = field_of_order(q);
  auto gens = sln_generators(*F, n);
  MatrixGroup group(F, n, gens);
  group.name = rep_name("standard-sln", {{"n", n}, {"q", q}});
  GModule mod(F, n, gens);
  ConstructedRep rep{std::move(group), std::move(mod), std::nullopt, std::nullopt, {}, {}, {}, {}};
  if (n == 2) {
    rep.datum = builtin_catalog().datum("SL2");
    rep.weights = {{1}, {-1}};
  } else if (n == 3) {
    rep.datum = builtin_catalog().datum("SL3");
    rep.weights = {{1, 0}, {-1, 1}, {0, -1}};
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix e(n, n), f(n, n);
      e(i, j) = 1;
      f(j, i) = 1;
      rep.raising.push_back(std::move(e));
      rep.lowering.push_back(std::move(f));
      if (!rep.weights.empty()) {
        IVec r = rep.weights[i];
        for (std::size_t k = 0; k < r.size(); ++k) r[k] -= rep.weights[j][k];
        rep.raising_roots.push_back(std::move(r));
      }
    }
  set_highest_weight(*F, rep);
  return rep;
}

ConstructedRep tensor_rep(const ConstructedRep& a, const ConstructedRep& b) {
  const Field& F = a.module.field();
  if (F.order() != b.module.field().order())
    throw Error(ErrorKind::ShapeMismatch, "tensor factors over different fields");
  if (a.module.generator_count() != b.module.generator_count())
    throw Error(ErrorKind::ShapeMismatch, "tensor factors need the same generator list");
  GModule mod = tensor_module(a.module, b.module);
  MatrixGroup group(a.module.field_ptr(), mod.dim(), mod.action());
  group.name = "(" + a.group.name + ") x (" + b.group.name + ")";
  ConstructedRep rep{std::move(group), std::move(mod), a.datum, std::nullopt, {}, a.raising_roots, {}, {}};
  if (!a.weights.empty() && !b.weights.empty())
    for (const auto& u : a.weights)
      for (const auto& v : b.weights) {
        IVec w = u;
        for (std::size_t k = 0; k < w.size(); ++k) w[k] += v[k];
        rep.weights.push_back(std::move(w));
      }
  if (a.raising.size() == b.raising.size()) {
    const Matrix ia = Matrix::identity(a.module.dim()), ib = Matrix::identity(b.module.dim());
    for (std::size_t k = 0; k < a.raising.size(); ++k) {
      rep.raising.push_back(mat_add(F, kron(F, a.raising[k], ib), kron(F, ia, b.raising[k])));
      rep.lowering.push_back(mat_add(F, kron(F, a.lowering[k], ib), kron(F, ia, b.lowering[k])));
    }
  }
  set_highest_weight(F, rep);
  return rep;
}

ConstructedRep dual_rep(const ConstructedRep& a) {
  const Field& F = a.module.field();
  GModule mod = dual_module(a.module);
  MatrixGroup group(a.module.field_ptr(), mod.dim(), mod.action());
  group.name = "dual(" + a.group.name + ")";
  ConstructedRep rep{std::move(group), std::move(mod), a.datum, std::nullopt, {}, a.raising_roots, {}, {}};
  for (auto w : a.weights) {
    for (auto& x : w) x = -x;
    rep.weights.push_back(std::move(w));
  }
  for (const auto& x : a.raising) rep.raising.push_back(mat_scale(F, F.neg(1), transpose(x)));
  for (const auto& x : a.lowering) rep.lowering.push_back(mat_scale(F, F.neg(1), transpose(x)));
  set_highest_weight(F, rep);
  return rep;
}

std::size_t highest_weight_annihilator_dim(const ConstructedRep& rep) {
  if (rep.raising.empty()) throw Error(ErrorKind::MissingLieOperators, "representation carries no raising operators");
  return common_kernel(rep.module.field(), rep.raising, rep.module.dim()).rows();
}

ProjectionCheck highest_projection_check(const ConstructedRep& rep, const ChopOptions& opts) {
  if (rep.raising.empty()) throw Error(ErrorKind::MissingLieOperators, "representation carries no raising operators");
  const Field& F = rep.module.field();
  const std::size_t n = rep.module.dim();
  auto k = basis_vector_index(common_kernel(F, rep.raising, n));
  if (!k) throw Error(ErrorKind::InvalidArgument, "highest weight space is not a single basis line");
  ProjectionCheck out;
  out.highest_index = *k;
  const std::size_t entry = *k * n + *k;
  const auto families = irreducible_submodules(ad_module(rep.module), opts);
  out.holds = true;
  for (std::size_t fi = 0; fi < families.size() && out.holds; ++fi) {
    out.family_dims.push_back(families[fi].simple.dim());
    for_each_line(F, families[fi], [&](std::uint64_t line, const Matrix& h) {
      for (std::size_t c = 0; c < h.cols(); ++c)
        if (h(entry, c) != 0) {
          out.witnesses.push_back({fi, line, c});
          return true;
        }
      out.holds = false;
      out.failure = ProjectionWitness{fi, line, 0};
      return false;
    });
  }
  return out;
}

MatrixGroup unipotent_group(std::uint32_t ell) {
  auto F = Field::make(ell, 1);
  MatrixGroup g = MatrixGroup::close(F, 2, {Matrix(2, 2, {1, 1, 0, 1})});
  g.name = rep_name("unipotent", {{"l", ell}});
  return g;
}

MatrixGroup nonsplit_torus(std::uint32_t q) {
  auto F = field_of_order(q);
  const std::uint64_t target = std::uint64_t{q} * q - 1;
  for (Elem c0 = 1; c0 < q; ++c0)
    for (Elem c1 = 0; c1 < q; ++c1) {
      const Matrix m(2, 2, {0, F->neg(c0), 1, F->neg(c1)});
      const Matrix id = Matrix::identity(2);
      Matrix x = m;
      std::uint64_t k = 1;
      while (!(x == id) && k <= target) {
        x = mat_mul(*F, x, m);
        ++k;
      }
      if (k != target) continue;
      MatrixGroup g = MatrixGroup::close(F, 2, {m});
      g.name = rep_name("nonsplit-torus", {{"q", q}});
      return g;
    }
  throw Error(ErrorKind::InvalidArgument, "no primitive quadratic found");
}

MatrixGroup with_scalars(const MatrixGroup& g, std::uint64_t cap) {
  const Field& F = g.field();
  const Matrix z = mat_scale(F, F.generator(), Matrix::identity(g.dimension()));
  if (g.enumerated() && g.contains(z)) return g;
  auto gens = g.generators();
  gens.push_back(z);
  MatrixGroup out = MatrixGroup::close(g.field_ptr(), g.dimension(), std::move(gens), cap);
  out.name = "scalars(" + g.name + ")";
  return out;
}

}  // namespace bigness
