#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bigness/group.hpp"
#include "bigness/module.hpp"
#include "bigness/rootdata.hpp"

namespace bigness {

/// Image of a finite group of Lie type in GL(V), with V given on a weight
/// basis. `group` is the image itself and `module` its natural module.
/// Raising operators are X_a for the positive roots, lowering operators
/// X_{-a} in the same order. Constructors leave `group` unenumerated.
struct ConstructedRep {
  MatrixGroup group;
  GModule module;
  std::optional<RootDatum> datum;
  std::optional<IVec> highest_weight;
  std::vector<IVec> weights;  // weight of each basis vector
  std::vector<IVec> raising_roots;
  std::vector<Matrix> raising;
  std::vector<Matrix> lowering;
};

/// Generators used for SL_n(F_q): diag(z, 1/z, 1, ...), then I + E_{i,i+1},
/// then I + E_{i+1,i}, z the field generator.
std::vector<Matrix> sln_generators(const Field& F, std::size_t n);

/// SL_2(F_ell) on homogeneous polynomials of degree m in x, y, basis
/// x^(m-i) y^i. g sends x to g11 x + g21 y and y to g12 x + g22 y;
/// E = x d/dy, F = y d/dx.
ConstructedRep sym_power_sl2(std::uint32_t m, std::uint32_t ell);

/// Same module, with the action matrices expanded over Z from integer lifts of
/// the generators and then reduced mod ell.
ConstructedRep reduce_integral_sym_power(std::uint32_t m, std::uint32_t ell);

/// SL_n(F_q) on F_q^n. Carries the SL_2 / SL_3 datum when n <= 3; raising
/// operators are E_ij for i < j in row-major order.
ConstructedRep standard_sln(std::size_t n, std::uint32_t q);

/// Generator-wise tensor product; both reps must come from the same list of
/// abstract generators (equal counts, same field).
ConstructedRep tensor_rep(const ConstructedRep& a, const ConstructedRep& b);
/// g acts by the transpose inverse; X acts by -X^T.
ConstructedRep dual_rep(const ConstructedRep& a);

/// dim of the common kernel of the raising operators. Throws
/// MissingLieOperators.
std::size_t highest_weight_annihilator_dim(const ConstructedRep& rep);

struct ProjectionWitness {
  std::size_t family = 0;
  std::uint64_t line = 0;
  std::size_t basis_index = 0;  // column of the intertwiner
};

struct ProjectionCheck {
  bool holds = false;
  std::size_t highest_index = 0;  // V_0 = span(e_highest_index)
  std::vector<std::size_t> family_dims;
  std::vector<ProjectionWitness> witnesses;
  std::optional<ProjectionWitness> failure;  // basis_index unused
};

/// For each irreducible submodule of ad V (one per line of each family), finds
/// a basis element f whose V_0 -> V_0 entry is non-zero. Requires V_0 to be
/// one-dimensional and spanned by a basis vector (InvalidArgument otherwise).
ProjectionCheck highest_projection_check(const ConstructedRep& rep, const ChopOptions& opts = {});

/// The cyclic group generated by [[1,1],[0,1]] in GL_2(F_ell).
MatrixGroup unipotent_group(std::uint32_t ell);
/// The image of F_{q^2}^x in GL_2(F_q): companion matrix of the first monic
/// quadratic x^2 + c1 x + c0 (ordered by (c0, c1)) whose root has order q^2-1.
MatrixGroup nonsplit_torus(std::uint32_t q);
/// g with the scalar generator z I adjoined.
MatrixGroup with_scalars(const MatrixGroup& g, std::uint64_t cap = kDefaultOrderCap);

}  // namespace bigness
