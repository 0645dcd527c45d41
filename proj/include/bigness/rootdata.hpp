#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bigness/intmat.hpp"

namespace bigness {

/// Root datum on X = Z^r with Y = Z^r and the dot pairing. roots[i] and
/// coroots[i] form a pair; `simple` indexes the simple roots.
struct RootDatum {
  std::string name;
  std::size_t rank = 0;
  std::vector<IVec> roots;
  std::vector<IVec> coroots;
  std::vector<std::size_t> simple;

  /// Closes the simple pairs under the Weyl group they generate. Roots are
  /// listed positive ones first, each block in discovery order.
  static RootDatum from_simple(std::string name, std::size_t rank, const std::vector<IVec>& simple_roots,
                               const std::vector<IVec>& simple_coroots);

  /// Coroots span Y tensor Q.
  bool semisimple() const;
  /// Throws InvalidArgument if pairings or reflection closure fail.
  void validate() const;
};

/// s_i(lambda) = lambda - <lambda, a_i^v> a_i.
IVec reflect_weight(const RootDatum& d, std::size_t root, const IVec& lambda);
/// s_i(mu) = mu - <a_i, mu> a_i^v.
IVec reflect_coweight(const RootDatum& d, std::size_t root, const IVec& mu);
/// Matrix of s_i acting on X (columns are images of basis vectors).
IntMatrix reflection_matrix(const RootDatum& d, std::size_t root);
std::vector<std::size_t> positive_roots(const RootDatum& d);

/// max |<lambda, a^v>| over coroots. Throws NoRoots on a torus datum.
std::int64_t weight_norm(const RootDatum& d, const IVec& lambda);

/// All lambda with weight_norm < n, in lexicographic order. Throws
/// InfiniteSet unless the datum is semisimple.
std::vector<IVec> small_norm_weights(const RootDatum& d, std::int64_t n);

bool is_dominant(const RootDatum& d, const IVec& lambda);
/// Product over positive roots of <lambda + rho, a^v> / <rho, a^v>. Throws
/// NotDominant.
std::uint64_t weyl_dimension(const RootDatum& d, const IVec& lambda);

/// Torus over F_q whose Frobenius acts on X by the integer matrix F.
struct TwistedTorus {
  std::string name;
  std::optional<RootDatum> datum;
  IntMatrix frobenius;
  std::uint64_t q = 0;

  std::size_t rank() const noexcept { return frobenius.rows(); }
  /// Order of F.
  std::uint64_t splitting_degree() const;
  /// q^d - 1 for the splitting degree d.
  std::uint64_t splitting_modulus() const;
};

/// Checks F has finite order, q is a prime power, and F permutes the roots.
TwistedTorus make_torus(std::string name, std::optional<RootDatum> datum, IntMatrix frobenius, std::uint64_t q);

/// det(qI - F).
std::int64_t torus_point_count(const TwistedTorus& t);
/// (q-1)^r <= det(qI - F) <= (q+1)^r.
bool point_count_within_bounds(const TwistedTorus& t);

inline constexpr std::uint64_t kDefaultPointBudget = std::uint64_t{1} << 22;

/// Exponent vectors v mod N = q^d - 1 with F^T v = q v (mod N), against a
/// fixed generator of the splitting field's multiplicative group; sorted
/// lexicographically. Solved through the Smith form of F^T - qI.
std::vector<IVec> torus_points(const TwistedTorus& t, std::uint64_t budget = kDefaultPointBudget);

/// Exponent of lambda(g) for the point g with exponent vector v: v . lambda
/// mod N.
std::uint64_t evaluate_character(const TwistedTorus& t, const IVec& point, const IVec& lambda);

struct RegularElement {
  IVec point;
  std::vector<IVec> weights;             // weights of norm < n
  std::vector<std::uint64_t> exponents;  // lambda(g) for each weight, pairwise distinct
};

/// First point outside every kernel of a non-zero weight of norm < 2n;
/// nullopt if every point lies in one.
std::optional<RegularElement> highly_regular_element(const TwistedTorus& t, std::int64_t n,
                                                     std::uint64_t budget = kDefaultPointBudget);

struct KernelBound {
  std::uint64_t kernel_order = 0;  // |ker lambda| on T(F_q), counted
  std::int64_t torsion = 1;        // order of the torsion of X / span(Galois orbit of lambda)
  std::size_t cokernel_rank = 0;
  std::uint64_t bound = 0;         // torsion * (q+1)^(r-1)
  bool holds = false;
};

KernelBound character_kernel_order(const TwistedTorus& t, const IVec& lambda,
                                   std::uint64_t budget = kDefaultPointBudget);

/// Named tori; a torus entry refers to a datum by name or is a bare lattice.
struct TorusEntry {
  std::string name;
  std::string datum;  // empty for a bare lattice
  IntMatrix frobenius;
};

struct RootDataCatalog {
  std::vector<RootDatum> data;
  std::vector<TorusEntry> tori;

  const RootDatum& datum(const std::string& name) const;
  const TorusEntry& torus(const std::string& name) const;
  TwistedTorus instantiate(const std::string& torus_name, std::uint64_t q) const;
};

/// SL2, SL3, Sp4, PGL2, GL2 and fifteen tori over them or bare lattices.
const RootDataCatalog& builtin_catalog();

std::string format_catalog(const RootDataCatalog& c);
/// Throws Parse on malformed input.
RootDataCatalog parse_catalog(const std::string& text);

}  // namespace bigness
