#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bigness/matrix.hpp"

namespace bigness {

inline constexpr std::uint64_t kDefaultOrderCap = std::uint64_t{1} << 22;

/// Subgroup of GL_n(F_q) given by generators, optionally with its full
/// element list. Elements are stored in breadth-first discovery order starting
/// from the identity; element i (i > 0) equals generator(gen_of(i)) times
/// element(parent_of(i)).
class MatrixGroup {
 public:
  MatrixGroup(FieldPtr field, std::size_t dimension, std::vector<Matrix> generators);

  /// Generates and enumerates in one step; throws OrderCapExceeded.
  static MatrixGroup close(FieldPtr field, std::size_t dimension, std::vector<Matrix> generators,
                           std::uint64_t cap = kDefaultOrderCap);

  const FieldPtr& field_ptr() const noexcept { return field_; }
  const Field& field() const noexcept { return *field_; }
  std::size_t dimension() const noexcept { return n_; }
  const std::vector<Matrix>& generators() const noexcept { return gens_; }
  std::string name;

  void enumerate(std::uint64_t cap = kDefaultOrderCap);
  bool enumerated() const noexcept { return enumerated_; }

  /// The following require an enumerated group (NotEnumerated otherwise).
  std::uint64_t order() const;
  Matrix element(std::size_t i) const;
  std::span<const Elem> element_data(std::size_t i) const;
  std::optional<std::size_t> index_of(const Matrix& m) const;
  bool contains(const Matrix& m) const { return index_of(m).has_value(); }
  std::size_t parent_of(std::size_t i) const { return parent_[i]; }
  std::size_t gen_of(std::size_t i) const { return via_[i]; }
  /// Inverse of element i, as an element index.
  std::size_t inverse_index(std::size_t i) const;
  std::size_t product_index(std::size_t i, std::size_t j) const;
  /// Multiplicative order of element i.
  std::uint64_t element_order(std::size_t i) const;

 private:
  void require_enumerated() const;
  std::uint64_t hash_slot(std::span<const Elem> data) const;
  std::optional<std::size_t> lookup(std::span<const Elem> data) const;
  void insert_slot(std::size_t index);
  void grow_table();

  FieldPtr field_;
  std::size_t n_;
  std::vector<Matrix> gens_;
  bool enumerated_ = false;
  std::vector<Elem> data_;  // n*n codes per element
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> via_;
  std::vector<std::uint32_t> table_;  // open addressing, index + 1
};

/// Smallest normal subgroup containing the generator commutators; equals the
/// commutator subgroup. Enumerated.
MatrixGroup derived_subgroup(const MatrixGroup& g, std::uint64_t cap = kDefaultOrderCap);

/// Normal closure in g of the given elements. Enumerated.
MatrixGroup normal_closure(const MatrixGroup& g, std::vector<Matrix> elements,
                           std::uint64_t cap = kDefaultOrderCap);

/// Subgroup of g generated by the given elements. Enumerated.
MatrixGroup subgroup(const MatrixGroup& g, std::vector<Matrix> elements,
                     std::uint64_t cap = kDefaultOrderCap);

/// Every element of h normalised by every generator of g (h's elements must
/// lie in g).
bool is_normal_subgroup(const MatrixGroup& h, const MatrixGroup& g);
bool is_subgroup(const MatrixGroup& h, const MatrixGroup& g);

struct B1Result {
  bool holds = false;
  std::uint64_t abelianization_order = 0;
  /// On failure, a normal subgroup of index ell.
  std::optional<MatrixGroup> witness;
};

/// No non-trivial quotient of ell-power order iff ell does not divide the
/// order of the abelianisation.
B1Result satisfies_b1(const MatrixGroup& g, std::uint32_t ell, std::uint64_t cap = kDefaultOrderCap);

/// A Sylow ell-subgroup, grown greedily from the identity by adjoining
/// ell-elements that normalise the current subgroup. Throws NoSylowFound if
/// the growth stalls.
MatrixGroup sylow_subgroup(const MatrixGroup& g, std::uint32_t ell);

/// ell-part of n.
std::uint64_t ell_part(std::uint64_t n, std::uint64_t ell);

Matrix commutator(const Field& F, const Matrix& a, const Matrix& b);

}  // namespace bigness
