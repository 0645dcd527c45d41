#include "bigness/group.hpp"

#include <algorithm>

#include "bigness/error.hpp"

namespace bigness {

MatrixGroup::MatrixGroup(FieldPtr field, std::size_t dimension, std::vector<Matrix> generators)
    : field_(std::move(field)), n_(dimension), gens_(std::move(generators)) {
  if (!field_) throw Error(ErrorKind::InvalidArgument, "null field");
  for (const auto& g : gens_) {
    if (g.rows() != n_ || g.cols() != n_) throw Error(ErrorKind::ShapeMismatch, "generator shape");
    for (Elem e : g.data())
      if (e >= field_->order()) throw Error(ErrorKind::InvalidArgument, "generator entry out of range");
    if (!is_invertible(*field_, g)) throw Error(ErrorKind::Singular, "generator is not invertible");
  }
}

MatrixGroup MatrixGroup::close(FieldPtr field, std::size_t dimension, std::vector<Matrix> generators,
                               std::uint64_t cap) {
  MatrixGroup g(std::move(field), dimension, std::move(generators));
  g.enumerate(cap);
  return g;
}

std::uint64_t MatrixGroup::hash_slot(std::span<const Elem> data) const {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (Elem e : data) {
    h ^= e;
    h *= 0x100000001b3ull;
  }
  h ^= h >> 29;
  return h & (table_.size() - 1);
}

std::optional<std::size_t> MatrixGroup::lookup(std::span<const Elem> data) const {
  const std::size_t nn = n_ * n_;
  std::uint64_t s = hash_slot(data);
  while (table_[s] != 0) {
    const std::size_t idx = table_[s] - 1;
    if (std::equal(data.begin(), data.end(), data_.begin() + idx * nn)) return idx;
    s = (s + 1) & (table_.size() - 1);
  }
  return std::nullopt;
}

void MatrixGroup::insert_slot(std::size_t index) {
  const std::size_t nn = n_ * n_;
  std::uint64_t s = hash_slot({data_.data() + index * nn, nn});
  while (table_[s] != 0) s = (s + 1) & (table_.size() - 1);
  table_[s] = static_cast<std::uint32_t>(index + 1);
}

void MatrixGroup::grow_table() {
  table_.assign(table_.size() * 2, 0);
  for (std::size_t i = 0; i < parent_.size(); ++i) insert_slot(i);
}

void MatrixGroup::enumerate(std::uint64_t cap) {
  if (enumerated_) return;
  const std::size_t nn = n_ * n_;
  const Field& F = *field_;
  data_.clear();
  parent_.clear();
  via_.clear();
  table_.assign(1024, 0);
  const Matrix id = Matrix::identity(n_);
  data_.insert(data_.end(), id.data().begin(), id.data().end());
  parent_.push_back(0);
  via_.push_back(0);
  insert_slot(0);

  std::vector<Elem> prod(nn);
  for (std::size_t head = 0; head < parent_.size(); ++head) {
    for (std::size_t s = 0; s < gens_.size(); ++s) {
      const Matrix& a = gens_[s];
      // prod = gens_[s] * element(head)
      const Elem* x = data_.data() + head * nn;
      for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
          Elem acc = 0;
          for (std::size_t k = 0; k < n_; ++k) {
            const Elem u = a(i, k), v = x[k * n_ + j];
            if (u && v) acc = F.add(acc, F.mul(u, v));
          }
          prod[i * n_ + j] = acc;
        }
      if (lookup(prod)) continue;
      if (parent_.size() >= cap)
        throw Error(ErrorKind::OrderCapExceeded, "group order exceeds cap " + std::to_string(cap));
      data_.insert(data_.end(), prod.begin(), prod.end());
      parent_.push_back(static_cast<std::uint32_t>(head));
      via_.push_back(static_cast<std::uint32_t>(s));
      if (2 * parent_.size() > table_.size()) grow_table();
      else insert_slot(parent_.size() - 1);
    }
  }
  enumerated_ = true;
}

void MatrixGroup::require_enumerated() const {
  if (!enumerated_) throw Error(ErrorKind::NotEnumerated, "group is not enumerated");
}

std::uint64_t MatrixGroup::order() const {
  require_enumerated();
  return parent_.size();
}

Matrix MatrixGroup::element(std::size_t i) const {
  auto d = element_data(i);
  return Matrix(n_, n_, std::vector<Elem>(d.begin(), d.end()));
}

std::span<const Elem> MatrixGroup::element_data(std::size_t i) const {
  require_enumerated();
  return {data_.data() + i * n_ * n_, n_ * n_};
}

std::optional<std::size_t> MatrixGroup::index_of(const Matrix& m) const {
  require_enumerated();
  if (m.rows() != n_ || m.cols() != n_) return std::nullopt;
  return lookup(m.data());
}

std::size_t MatrixGroup::inverse_index(std::size_t i) const {
  auto idx = index_of(inverse(*field_, element(i)));
  if (!idx) throw Error(ErrorKind::InvalidArgument, "inverse missing from enumeration");
  return *idx;
}

std::size_t MatrixGroup::product_index(std::size_t i, std::size_t j) const {
  auto idx = index_of(mat_mul(*field_, element(i), element(j)));
  if (!idx) throw Error(ErrorKind::InvalidArgument, "product missing from enumeration");
  return *idx;
}

std::uint64_t MatrixGroup::element_order(std::size_t i) const {
  const Matrix g = element(i);
  const Matrix id = Matrix::identity(n_);
  Matrix x = g;
  std::uint64_t k = 1;
  while (!(x == id)) {
    x = mat_mul(*field_, x, g);
    ++k;
  }
  return k;
}

Matrix commutator(const Field& F, const Matrix& a, const Matrix& b) {
  return mat_mul(F, mat_mul(F, a, b), mat_mul(F, inverse(F, a), inverse(F, b)));
}

MatrixGroup subgroup(const MatrixGroup& g, std::vector<Matrix> elements, std::uint64_t cap) {
  return MatrixGroup::close(g.field_ptr(), g.dimension(), std::move(elements), cap);
}

MatrixGroup normal_closure(const MatrixGroup& g, std::vector<Matrix> elements, std::uint64_t cap) {
  const Field& F = g.field();
  std::vector<Matrix> gens;
  std::vector<Matrix> g_inv;
  for (const auto& s : g.generators()) g_inv.push_back(inverse(F, s));
  const Matrix id = Matrix::identity(g.dimension());
  for (auto& e : elements)
    if (!(e == id)) gens.push_back(std::move(e));
  MatrixGroup h = subgroup(g, gens, cap);
  // Adjoin conjugates of the current generators until stable.
  for (;;) {
    bool grew = false;
    for (std::size_t i = 0; i < gens.size() && !grew; ++i)
      for (std::size_t s = 0; s < g.generators().size() && !grew; ++s) {
        Matrix c = mat_mul(F, mat_mul(F, g.generators()[s], gens[i]), g_inv[s]);
        if (!h.contains(c)) {
          gens.push_back(std::move(c));
          h = subgroup(g, gens, cap);
          grew = true;
        }
      }
    if (!grew) return h;
  }
}

MatrixGroup derived_subgroup(const MatrixGroup& g, std::uint64_t cap) {
  const Field& F = g.field();
  std::vector<Matrix> comms;
  const auto& s = g.generators();
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) comms.push_back(commutator(F, s[i], s[j]));
  return normal_closure(g, std::move(comms), cap);
}

bool is_subgroup(const MatrixGroup& h, const MatrixGroup& g) {
  for (const auto& s : h.generators())
    if (!g.contains(s)) return false;
  return true;
}

bool is_normal_subgroup(const MatrixGroup& h, const MatrixGroup& g) {
  if (!is_subgroup(h, g)) return false;
  const Field& F = g.field();
  for (const auto& s : g.generators()) {
    const Matrix si = inverse(F, s);
    for (const auto& x : h.generators())
      if (!h.contains(mat_mul(F, mat_mul(F, s, x), si))) return false;
  }
  return true;
}

std::uint64_t ell_part(std::uint64_t n, std::uint64_t ell) {
  std::uint64_t p = 1;
  while (n % ell == 0) {
    n /= ell;
    p *= ell;
  }
  return p;
}

B1Result satisfies_b1(const MatrixGroup& g, std::uint32_t ell, std::uint64_t cap) {
  B1Result out;
  const MatrixGroup d = derived_subgroup(g, cap);
  out.abelianization_order = g.order() / d.order();
  out.holds = out.abelianization_order % ell != 0;
  if (out.holds) return out;

  // G' together with ell-th powers of the generators has elementary abelian
  // ell-quotient; enlarge greedily until the index is exactly ell.
  const Field& F = g.field();
  std::vector<Matrix> gens = d.generators();
  for (const auto& s : g.generators()) gens.push_back(mat_pow(F, s, ell));
  MatrixGroup n = subgroup(g, gens, cap);
  for (const auto& s : g.generators()) {
    if (n.contains(s)) continue;
    auto trial = gens;
    trial.push_back(s);
    MatrixGroup bigger = subgroup(g, trial, cap);
    if (bigger.order() < g.order()) {
      gens = std::move(trial);
      n = std::move(bigger);
    }
  }
  out.witness = std::move(n);
  return out;
}

MatrixGroup sylow_subgroup(const MatrixGroup& g, std::uint32_t ell) {
  const std::uint64_t target = ell_part(g.order(), ell);
  const Field& F = g.field();
  std::vector<Matrix> gens;
  MatrixGroup p = subgroup(g, gens);
  while (p.order() < target) {
    bool grew = false;
    for (std::size_t i = 1; i < g.order() && !grew; ++i) {
      const Matrix x = g.element(i);
      if (p.contains(x)) continue;
      const std::uint64_t o = g.element_order(i);
      if (ell_part(o, ell) != o) continue;
      const Matrix xi = inverse(F, x);
      bool normalizes = true;
      for (const auto& h : gens)
        if (!p.contains(mat_mul(F, mat_mul(F, x, h), xi))) {
          normalizes = false;
          break;
        }
      if (!normalizes) continue;
      gens.push_back(x);
      p = subgroup(g, gens);
      grew = true;
    }
    if (!grew) throw Error(ErrorKind::NoSylowFound, "Sylow growth stalled");
  }
  return p;
}

}  // namespace bigness
