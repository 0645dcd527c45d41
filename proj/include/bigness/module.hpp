#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "bigness/group.hpp"
#include "bigness/matrix.hpp"

namespace bigness {

/// Finite-dimensional module given by one action matrix per group generator.
/// Vectors are columns: g.v = action(g) * v.
class GModule {
 public:
  GModule(FieldPtr field, std::size_t dim, std::vector<Matrix> action);

  /// The natural module of a matrix group.
  static GModule natural(const MatrixGroup& g);

  const FieldPtr& field_ptr() const noexcept { return field_; }
  const Field& field() const noexcept { return *field_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Matrix>& action() const noexcept { return action_; }
  std::size_t generator_count() const noexcept { return action_.size(); }

 private:
  FieldPtr field_;
  std::size_t dim_;
  std::vector<Matrix> action_;
};

/// Conjugation action on End(V), coordinates vec(f) row-major.
GModule ad_module(const GModule& v);

/// Traceless endomorphisms with basis E_ij (i != j) and E_ii - E_nn, listed in
/// row-major (i, j) order with (n, n) omitted. With strict set, throws
/// TracelessNotComplement when the characteristic divides dim V.
GModule ad0_module(const GModule& v, bool strict = true);

/// Coordinates of a traceless endomorphism (row-major n x n) in the ad0 basis,
/// and back.
Vector ad0_coordinates(std::span<const Elem> vec_f, std::size_t n);
Vector ad0_to_endomorphism(const Field& F, std::span<const Elem> coords, std::size_t n);

GModule dual_module(const GModule& m);
GModule tensor_module(const GModule& a, const GModule& b);
GModule direct_sum(const GModule& a, const GModule& b);
/// The module with transposed generator matrices. Its submodules are the
/// annihilators of submodules of m.
GModule transposed_module(const GModule& m);
GModule extend_scalars(const GModule& m, const FieldEmbedding& emb);

/// Smallest submodule containing the given vectors; reduced echelon basis as
/// rows.
Matrix spin(const GModule& m, const std::vector<Vector>& seeds);
Matrix spin(const GModule& m, const Vector& v);
/// Whether the row space of basis is stable under every generator.
bool is_submodule(const GModule& m, const Matrix& basis);

/// Action on a submodule (basis rows, echelon) and on the quotient by it.
GModule submodule(const GModule& m, const Matrix& basis);
GModule quotient_module(const GModule& m, const Matrix& basis);

/// Basis of Hom_G(s, m): matrices X (dim m x dim s) with X s(g) = m(g) X.
std::vector<Matrix> hom_space(const GModule& s, const GModule& m);
std::size_t commutant_dimension(const GModule& m);

/// Action matrix of an arbitrary element of an enumerated group, obtained by
/// walking the discovery tree.
Matrix element_action(const MatrixGroup& g, const GModule& m, std::size_t element);
/// Action of every enumerated element, indexed like the group.
std::vector<Matrix> all_element_actions(const MatrixGroup& g, const GModule& m);
/// Restriction of m (a module for g) to a subgroup h whose generators are
/// elements of g.
GModule restrict_module(const MatrixGroup& g, const GModule& m, const MatrixGroup& h);

struct ChopOptions {
  std::uint64_t seed = 1;
  unsigned attempts = 256;
  /// Largest eigenspace, in projective points, that is spun exhaustively.
  std::uint64_t max_kernel_points = 2000;
  unsigned max_terms = 8;
  unsigned max_word_length = 6;
};

/// A proper non-zero submodule (basis rows), or nullopt when m is certified
/// irreducible. Throws ChopBudgetExceeded when no certificate is reached.
std::optional<Matrix> find_proper_submodule(const GModule& m, const ChopOptions& opts = {});
bool is_irreducible(const GModule& m, const ChopOptions& opts = {});

/// Composition factors, bottom of the series first.
std::vector<GModule> composition_factors(const GModule& m, const ChopOptions& opts = {});

bool satisfies_b2(const GModule& m, const ChopOptions& opts = {});

/// Simple submodules of m isomorphic to one simple module s. They are the
/// images of the intertwiners h_1 c_1 + ... + h_t c_t with c in End_G(s)^t
/// normalised so the first non-zero c_i is 1.
struct SubmoduleFamily {
  GModule simple;
  std::vector<Matrix> hom_basis;   // k-basis of Hom_G(s, m)
  std::size_t endo_field_degree = 1;
  std::vector<Matrix> endo_basis;  // powers 1, theta, ..., theta^(e-1) of a generator of End_G(s)
  std::vector<Matrix> e_basis;     // basis of Hom_G(s, m) over End_G(s)
  std::uint64_t line_count = 0;
};

inline constexpr std::uint64_t kMaxLines = 1000000;

std::vector<SubmoduleFamily> irreducible_submodules(const GModule& m, const ChopOptions& opts = {});

/// Visits line representatives in lexicographic coordinate order. The
/// callback receives the line index and an injective intertwiner whose
/// column span is the submodule; returning false stops the walk.
void for_each_line(const Field& F, const SubmoduleFamily& fam,
                   const std::function<bool(std::uint64_t, const Matrix&)>& visit);

/// Walks the tuples in [0, size)^length whose first non-zero entry is 1, in
/// lexicographic order.
void for_each_normalized_tuple(std::size_t length, std::uint64_t size,
                               const std::function<bool(const std::vector<std::uint64_t>&)>& visit);

}  // namespace bigness
