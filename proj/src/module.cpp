#include "bigness/module.hpp"

#include <algorithm>
#include <deque>
#include <random>

#include "bigness/error.hpp"

namespace bigness {

GModule::GModule(FieldPtr field, std::size_t dim, std::vector<Matrix> action)
    : field_(std::move(field)), dim_(dim), action_(std::move(action)) {
  if (!field_) throw Error(ErrorKind::InvalidArgument, "null field");
  for (const auto& a : action_)
    if (a.rows() != dim_ || a.cols() != dim_) throw Error(ErrorKind::ShapeMismatch, "action matrix shape");
}

GModule GModule::natural(const MatrixGroup& g) {
  return GModule(g.field_ptr(), g.dimension(), g.generators());
}

GModule ad_module(const GModule& v) {
  const Field& F = v.field();
  std::vector<Matrix> act;
  for (const auto& g : v.action()) act.push_back(kron(F, g, transpose(inverse(F, g))));
  return GModule(v.field_ptr(), v.dim() * v.dim(), std::move(act));
}

Vector ad0_coordinates(std::span<const Elem> vec_f, std::size_t n) {
  if (vec_f.size() != n * n) throw Error(ErrorKind::ShapeMismatch, "ad0 coordinates");
  if (n == 0) return {};
  return Vector(vec_f.begin(), vec_f.end() - 1);
}

Vector ad0_to_endomorphism(const Field& F, std::span<const Elem> coords, std::size_t n) {
  if (n == 0) return {};
  if (coords.size() + 1 != n * n) throw Error(ErrorKind::ShapeMismatch, "ad0 vector length");
  Vector f(coords.begin(), coords.end());
  Elem tr = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) tr = F.add(tr, f[i * n + i]);
  f.push_back(F.neg(tr));
  return f;
}

GModule ad0_module(const GModule& v, bool strict) {
  const Field& F = v.field();
  const std::size_t n = v.dim();
  if (strict && n % F.characteristic() == 0)
    throw Error(ErrorKind::TracelessNotComplement,
                "characteristic divides dim V; traceless endomorphisms are not a complement");
  const std::size_t d = n == 0 ? 0 : n * n - 1;
  std::vector<Matrix> act;
  for (const auto& g : v.action()) {
    const Matrix gi = inverse(F, g);
    Matrix a(d, d);
    for (std::size_t k = 0; k < d; ++k) {
      Vector e(d, 0);
      e[k] = 1;
      const Matrix f(n, n, ad0_to_endomorphism(F, e, n));
      const Matrix c = mat_mul(F, mat_mul(F, g, f), gi);
      const Vector coords = ad0_coordinates(c.data(), n);
      for (std::size_t r = 0; r < d; ++r) a(r, k) = coords[r];
    }
    act.push_back(std::move(a));
  }
  return GModule(v.field_ptr(), d, std::move(act));
}

GModule dual_module(const GModule& m) {
  std::vector<Matrix> act;
  for (const auto& g : m.action()) act.push_back(transpose(inverse(m.field(), g)));
  return GModule(m.field_ptr(), m.dim(), std::move(act));
}

GModule transposed_module(const GModule& m) {
  std::vector<Matrix> act;
  for (const auto& g : m.action()) act.push_back(transpose(g));
  return GModule(m.field_ptr(), m.dim(), std::move(act));
}

GModule tensor_module(const GModule& a, const GModule& b) {
  if (a.generator_count() != b.generator_count())
    throw Error(ErrorKind::ShapeMismatch, "tensor of modules for different generator lists");
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < a.generator_count(); ++i) act.push_back(kron(a.field(), a.action()[i], b.action()[i]));
  return GModule(a.field_ptr(), a.dim() * b.dim(), std::move(act));
}

GModule direct_sum(const GModule& a, const GModule& b) {
  if (a.generator_count() != b.generator_count())
    throw Error(ErrorKind::ShapeMismatch, "direct sum of modules for different generator lists");
  const std::size_t n = a.dim() + b.dim();
  std::vector<Matrix> act;
  for (std::size_t g = 0; g < a.generator_count(); ++g) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j) m(i, j) = a.action()[g](i, j);
    for (std::size_t i = 0; i < b.dim(); ++i)
      for (std::size_t j = 0; j < b.dim(); ++j) m(a.dim() + i, a.dim() + j) = b.action()[g](i, j);
    act.push_back(std::move(m));
  }
  return GModule(a.field_ptr(), n, std::move(act));
}

GModule extend_scalars(const GModule& m, const FieldEmbedding& emb) {
  std::vector<Matrix> act;
  for (const auto& g : m.action()) {
    std::vector<Elem> d;
    for (Elem e : g.data()) d.push_back(emb(e));
    act.emplace_back(g.rows(), g.cols(), std::move(d));
  }
  return GModule(emb.target(), m.dim(), std::move(act));
}

Matrix spin(const GModule& m, const std::vector<Vector>& seeds) {
  const Field& F = m.field();
  Subspace s(m.dim());
  std::deque<Vector> queue;
  for (const auto& v : seeds)
    if (s.insert(F, v)) queue.push_back(v);
  while (!queue.empty() && s.dim() < m.dim()) {
    const Vector v = std::move(queue.front());
    queue.pop_front();
    for (const auto& a : m.action()) {
      Vector w = mat_vec(F, a, v);
      if (s.insert(F, w)) queue.push_back(std::move(w));
    }
  }
  if (s.dim() == m.dim()) return Matrix::identity(m.dim());
  return s.basis();
}

Matrix spin(const GModule& m, const Vector& v) { return spin(m, std::vector<Vector>{v}); }

bool is_submodule(const GModule& m, const Matrix& basis) {
  const Field& F = m.field();
  const Subspace s = row_space(F, basis);
  for (const auto& a : m.action())
    for (std::size_t i = 0; i < basis.rows(); ++i)
      if (!s.contains(F, mat_vec(F, a, basis.row(i)))) return false;
  return true;
}

GModule submodule(const GModule& m, const Matrix& basis) {
  const Field& F = m.field();
  const Subspace s = row_space(F, basis);
  const Matrix b = s.basis();
  const std::size_t k = b.rows();
  std::vector<Matrix> act;
  for (const auto& a : m.action()) {
    Matrix r(k, k);
    for (std::size_t j = 0; j < k; ++j) {
      const Vector c = s.coordinates(F, mat_vec(F, a, b.row(j)));
      for (std::size_t i = 0; i < k; ++i) r(i, j) = c[i];
    }
    act.push_back(std::move(r));
  }
  return GModule(m.field_ptr(), k, std::move(act));
}

GModule quotient_module(const GModule& m, const Matrix& basis) {
  const Field& F = m.field();
  const Subspace s = row_space(F, basis);
  std::vector<bool> pivot(m.dim(), false);
  for (auto p : s.pivots()) pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.dim(); ++c)
    if (!pivot[c]) free.push_back(c);
  const std::size_t k = free.size();
  std::vector<Matrix> act;
  for (const auto& a : m.action()) {
    Matrix r(k, k);
    for (std::size_t j = 0; j < k; ++j) {
      const Vector red = s.reduce(F, a.column(free[j]));
      for (std::size_t i = 0; i < k; ++i) r(i, j) = red[free[i]];
    }
    act.push_back(std::move(r));
  }
  return GModule(m.field_ptr(), k, std::move(act));
}

namespace {

// m(g) X - X s(g) for X given as a row-major vector.
Vector intertwining_residual(const Field& F, const Matrix& mg, const Matrix& sg, std::span<const Elem> x) {
  const std::size_t m = mg.rows(), s = sg.rows();
  const Matrix X(m, s, Vector(x.begin(), x.end()));
  return mat_sub(F, mat_mul(F, mg, X), mat_mul(F, X, sg)).data();
}

}  // namespace

std::vector<Matrix> hom_space(const GModule& src, const GModule& dst) {
  if (src.generator_count() != dst.generator_count())
    throw Error(ErrorKind::ShapeMismatch, "modules for different generator lists");
  const Field& F = dst.field();
  const std::size_t m = dst.dim(), s = src.dim(), u = m * s;
  std::vector<Vector> basis;
  if (src.generator_count() == 0) {
    for (std::size_t i = 0; i < u; ++i) {
      Vector e(u, 0);
      e[i] = 1;
      basis.push_back(std::move(e));
    }
  }
  for (std::size_t g = 0; g < src.generator_count(); ++g) {
    const Matrix& mg = dst.action()[g];
    const Matrix& sg = src.action()[g];
    if (g == 0) {
      Matrix c(u, u);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < s; ++j) {
          const std::size_t row = i * s + j;
          for (std::size_t k = 0; k < m; ++k) c(row, k * s + j) = F.add(c(row, k * s + j), mg(i, k));
          for (std::size_t k = 0; k < s; ++k) c(row, i * s + k) = F.sub(c(row, i * s + k), sg(k, j));
        }
      const Matrix ker = kernel(F, c);
      basis.clear();
      for (std::size_t r = 0; r < ker.rows(); ++r) basis.push_back(ker.row_vector(r));
      continue;
    }
    if (basis.empty()) break;
    Matrix t(u, basis.size());
    for (std::size_t r = 0; r < basis.size(); ++r) {
      const Vector res = intertwining_residual(F, mg, sg, basis[r]);
      for (std::size_t i = 0; i < u; ++i) t(i, r) = res[i];
    }
    const Matrix combos = kernel(F, t);
    std::vector<Vector> next;
    for (std::size_t c = 0; c < combos.rows(); ++c) {
      Vector v(u, 0);
      for (std::size_t r = 0; r < basis.size(); ++r) {
        const Elem k = combos(c, r);
        if (k == 0) continue;
        for (std::size_t i = 0; i < u; ++i)
          if (basis[r][i]) v[i] = F.add(v[i], F.mul(k, basis[r][i]));
      }
      next.push_back(std::move(v));
    }
    basis = std::move(next);
  }
  // Present the answer in reduced echelon form so it does not depend on the
  // generator order.
  const Subspace sp = row_space(F, Matrix::from_rows(basis, u));
  const Matrix b = sp.basis();
  std::vector<Matrix> out;
  for (std::size_t r = 0; r < b.rows(); ++r) out.emplace_back(m, s, b.row_vector(r));
  return out;
}

std::size_t commutant_dimension(const GModule& m) { return hom_space(m, m).size(); }

Matrix element_action(const MatrixGroup& g, const GModule& m, std::size_t element) {
  Matrix r = Matrix::identity(m.dim());
  for (std::size_t cur = element; cur != 0; cur = g.parent_of(cur))
    r = mat_mul(m.field(), r, m.action()[g.gen_of(cur)]);
  return r;
}

std::vector<Matrix> all_element_actions(const MatrixGroup& g, const GModule& m) {
  std::vector<Matrix> out;
  out.reserve(g.order());
  out.push_back(Matrix::identity(m.dim()));
  for (std::size_t i = 1; i < g.order(); ++i)
    out.push_back(mat_mul(m.field(), m.action()[g.gen_of(i)], out[g.parent_of(i)]));
  return out;
}

GModule restrict_module(const MatrixGroup& g, const GModule& m, const MatrixGroup& h) {
  std::vector<Matrix> act;
  for (const auto& x : h.generators()) {
    const auto idx = g.index_of(x);
    if (!idx) throw Error(ErrorKind::InvalidArgument, "subgroup generator outside the group");
    act.push_back(element_action(g, m, *idx));
  }
  return GModule(m.field_ptr(), m.dim(), std::move(act));
}

void for_each_normalized_tuple(std::size_t length, std::uint64_t size,
                               const std::function<bool(const std::vector<std::uint64_t>&)>& visit) {
  std::vector<std::uint64_t> t(length, 0);
  for (std::size_t lead = length; lead-- > 0;) {
    std::fill(t.begin(), t.end(), 0);
    t[lead] = 1;
    for (;;) {
      if (!visit(t)) return;
      bool wrapped = true;
      for (std::size_t pos = length; pos > lead + 1;) {
        --pos;
        if (++t[pos] < size) {
          wrapped = false;
          break;
        }
        t[pos] = 0;
      }
      if (wrapped) break;
    }
  }
}

namespace {

std::uint64_t projective_count(std::uint64_t q, std::size_t dim, std::uint64_t cap) {
  std::uint64_t total = 0, power = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    total += power;
    if (total > cap) return cap + 1;
    if (power > cap) return cap + 1;
    power *= q;
  }
  return total;
}

Matrix random_word(const GModule& m, std::mt19937_64& rng, unsigned max_len) {
  const Field& F = m.field();
  std::uniform_int_distribution<std::size_t> pick_gen(0, m.generator_count() - 1);
  std::uniform_int_distribution<unsigned> pick_len(1, max_len);
  Matrix w = m.action()[pick_gen(rng)];
  for (unsigned k = pick_len(rng); k > 1; --k) w = mat_mul(F, w, m.action()[pick_gen(rng)]);
  return w;
}

// Spins every projective point of the row space of `kernel_rows` and returns
// the first proper submodule found.
std::optional<Matrix> spin_points(const GModule& m, const Matrix& kernel_rows) {
  const Field& F = m.field();
  std::optional<Matrix> found;
  for_each_normalized_tuple(kernel_rows.rows(), F.order(), [&](const std::vector<std::uint64_t>& c) {
    Vector v(m.dim(), 0);
    for (std::size_t r = 0; r < c.size(); ++r) {
      if (c[r] == 0) continue;
      const Elem k = static_cast<Elem>(c[r]);
      for (std::size_t j = 0; j < m.dim(); ++j) v[j] = F.add(v[j], F.mul(k, kernel_rows(r, j)));
    }
    Matrix w = spin(m, v);
    if (w.rows() < m.dim()) {
      found = std::move(w);
      return false;
    }
    return true;
  });
  return found;
}

}  // namespace

std::optional<Matrix> find_proper_submodule(const GModule& m, const ChopOptions& opts) {
  const Field& F = m.field();
  const std::size_t n = m.dim();
  if (n <= 1) return std::nullopt;
  if (m.generator_count() == 0) {
    Matrix line(1, n);
    line(0, 0) = 1;
    return line;
  }
  const GModule t = transposed_module(m);
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<Elem> pick(0, F.order() - 1);
  for (unsigned attempt = 0; attempt < opts.attempts; ++attempt) {
    Matrix a(n, n);
    for (unsigned k = 0; k < opts.max_terms; ++k) {
      const Elem c = pick(rng);
      const Matrix w = random_word(m, rng, opts.max_word_length);
      if (c) a = mat_add(F, a, mat_scale(F, c, w));
    }
    const auto roots = roots_in_field(F, char_poly(F, a), rng());
    // Smallest eigenspace first.
    std::optional<Elem> best;
    Matrix best_kernel;
    for (Elem alpha : roots) {
      Matrix shifted = a;
      for (std::size_t i = 0; i < n; ++i) shifted(i, i) = F.sub(shifted(i, i), alpha);
      Matrix k = kernel(F, shifted);
      if (!best || k.rows() < best_kernel.rows()) {
        best = alpha;
        best_kernel = std::move(k);
      }
    }
    if (!best) continue;
    if (projective_count(F.order(), best_kernel.rows(), opts.max_kernel_points) > opts.max_kernel_points) continue;
    if (auto w = spin_points(m, best_kernel)) return w;
    Matrix shifted_t = transpose(a);
    for (std::size_t i = 0; i < n; ++i) shifted_t(i, i) = F.sub(shifted_t(i, i), *best);
    const Matrix kt = kernel(F, shifted_t);
    if (auto u = spin_points(t, kt)) {
      // Annihilator of a proper submodule of the transposed module.
      return row_space(F, kernel(F, *u)).basis();
    }
    return std::nullopt;
  }
  throw Error(ErrorKind::ChopBudgetExceeded,
              "no irreducibility certificate within " + std::to_string(opts.attempts) + " attempts");
}

bool is_irreducible(const GModule& m, const ChopOptions& opts) {
  return m.dim() > 0 && !find_proper_submodule(m, opts).has_value();
}

std::vector<GModule> composition_factors(const GModule& m, const ChopOptions& opts) {
  std::vector<GModule> out;
  if (m.dim() == 0) return out;
  auto w = find_proper_submodule(m, opts);
  if (!w) {
    out.push_back(m);
    return out;
  }
  ChopOptions next = opts;
  next.seed = opts.seed * 0x9e3779b97f4a7c15ull + 1;
  auto lower = composition_factors(submodule(m, *w), next);
  next.seed += 1;
  auto upper = composition_factors(quotient_module(m, *w), next);
  out = std::move(lower);
  for (auto& f : upper) out.push_back(std::move(f));
  return out;
}

bool satisfies_b2(const GModule& m, const ChopOptions& opts) {
  return is_irreducible(m, opts) && commutant_dimension(m) == 1;
}

namespace {

Vector flatten(const Matrix& m) { return m.data(); }

// Powers 1, theta, ..., theta^(e-1) of an element generating End_G(s) as a
// field over k.
std::vector<Matrix> field_power_basis(const Field& F, const std::vector<Matrix>& endo, std::uint64_t seed) {
  const std::size_t e = endo.size();
  const std::size_t s = endo.front().rows();
  auto powers_of = [&](const Matrix& theta) {
    std::vector<Matrix> p{Matrix::identity(s)};
    for (std::size_t i = 1; i < e; ++i) p.push_back(mat_mul(F, p.back(), theta));
    return p;
  };
  auto independent = [&](const std::vector<Matrix>& p) {
    Subspace sp(s * s);
    for (const auto& x : p)
      if (!sp.insert(F, flatten(x))) return false;
    return true;
  };
  if (e == 1) return {Matrix::identity(s)};
  for (const auto& cand : endo) {
    auto p = powers_of(cand);
    if (independent(p)) return p;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Elem> pick(0, F.order() - 1);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Matrix theta(s, s);
    for (const auto& b : endo) theta = mat_add(F, theta, mat_scale(F, pick(rng), b));
    auto p = powers_of(theta);
    if (independent(p)) return p;
  }
  throw Error(ErrorKind::ChopBudgetExceeded, "no generator found for the endomorphism field");
}

}  // namespace

std::vector<SubmoduleFamily> irreducible_submodules(const GModule& m, const ChopOptions& opts) {
  const Field& F = m.field();
  const auto factors = composition_factors(m, opts);
  std::vector<const GModule*> classes;
  for (const auto& f : factors) {
    bool seen = false;
    for (const auto* c : classes)
      if (c->dim() == f.dim() && !hom_space(*c, f).empty()) {
        seen = true;
        break;
      }
    if (!seen) classes.push_back(&f);
  }
  std::vector<SubmoduleFamily> out;
  for (const auto* c : classes) {
    auto hom = hom_space(*c, m);
    if (hom.empty()) continue;
    SubmoduleFamily fam{*c, std::move(hom), 1, {}, {}, 0};
    const auto endo = hom_space(*c, *c);
    fam.endo_field_degree = endo.size();
    fam.endo_basis = field_power_basis(F, endo, opts.seed);
    Subspace span(m.dim() * c->dim());
    for (const auto& h : fam.hom_basis) {
      if (span.contains(F, flatten(h))) continue;
      fam.e_basis.push_back(h);
      for (const auto& p : fam.endo_basis) span.insert(F, flatten(mat_mul(F, h, p)));
    }
    std::uint64_t big_q = 1;
    for (std::size_t i = 0; i < fam.endo_field_degree; ++i) big_q *= F.order();
    fam.line_count = projective_count(big_q, fam.e_basis.size(), kMaxLines * 1000);
    out.push_back(std::move(fam));
  }
  return out;
}

void for_each_line(const Field& F, const SubmoduleFamily& fam,
                   const std::function<bool(std::uint64_t, const Matrix&)>& visit) {
  if (fam.line_count > kMaxLines)
    throw Error(ErrorKind::BudgetExceeded, "family has " + std::to_string(fam.line_count) + " lines");
  const std::size_t t = fam.e_basis.size();
  const std::size_t e = fam.endo_basis.size();
  std::vector<std::vector<Matrix>> parts(t);
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < e; ++j) parts[i].push_back(mat_mul(F, fam.e_basis[i], fam.endo_basis[j]));
  std::uint64_t big_q = 1;
  for (std::size_t i = 0; i < e; ++i) big_q *= F.order();
  std::uint64_t index = 0;
  const std::size_t rows = fam.e_basis.front().rows(), cols = fam.e_basis.front().cols();
  for_each_normalized_tuple(t, big_q, [&](const std::vector<std::uint64_t>& c) {
    Matrix h(rows, cols);
    for (std::size_t i = 0; i < t; ++i) {
      std::uint64_t code = c[i];
      for (std::size_t j = 0; j < e && code; ++j, code /= F.order()) {
        const Elem d = static_cast<Elem>(code % F.order());
        if (d) h = mat_add(F, h, mat_scale(F, d, parts[i][j]));
      }
    }
    return visit(index++, h);
  });
}

}  // namespace bigness
