#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bigness/group.hpp"
#include "bigness/module.hpp"

namespace bigness {

inline constexpr const char* kToolkitVersion = "1.0.0";

struct EngineOptions {
  std::uint64_t seed = 1;
  std::uint64_t cap = kDefaultOrderCap;
  /// Skip B4 when an earlier condition has already failed.
  bool short_circuit = false;
};

struct B1Section {
  bool holds = false;
  std::uint64_t abelianization_order = 0;
};

struct B2Section {
  bool holds = false;
  std::size_t commutant_dim = 0;
  std::vector<std::size_t> constituent_dims;  // composition factors, bottom first
};

struct B3Section {
  bool holds = false;
  std::size_t z1 = 0;
  std::size_t b1 = 0;
  std::size_t h1 = 0;
  std::size_t sylow_bound = 0;  // h1 of a Sylow subgroup on the restriction
  /// False when ell divides dim V, so that ad0 V is not a direct summand.
  bool traceless_complement = true;
};

/// Composite V_{g,a} -> V -f-> V -> V_{g,a} is non-zero.
struct B4Witness {
  std::size_t family = 0;
  std::uint64_t line = 0;
  std::size_t element = 0;      // index in the group's discovery order
  Elem alpha = 0;
  std::size_t basis_index = 0;  // column of the line's intertwiner
  Matrix g;                     // n x n
  Matrix f;                     // n x n, row-major unvec of the column
};

struct B4Section {
  bool holds = false;
  std::vector<std::size_t> family_dims;
  std::vector<std::uint64_t> family_lines;
  std::vector<B4Witness> witnesses;
  std::optional<std::size_t> failing_family;
  std::optional<std::uint64_t> failing_line;
  bool evaluated = true;
};

struct Timings {
  double b1 = 0, b2 = 0, b3 = 0, b4 = 0, total = 0;
};

struct BignessCertificate {
  std::string group_name;
  std::uint32_t characteristic = 0;
  std::uint32_t degree = 0;
  std::size_t dimension = 0;
  std::uint64_t order = 0;
  std::uint64_t seed = 0;
  std::string version = kToolkitVersion;
  bool nonstandard_regime = false;  // ell divides dim V
  B1Section b1;
  B2Section b2;
  B3Section b3;
  B4Section b4;
  bool big = false;
  Timings timings;

  /// Failing conditions as "B1,B3", empty when big.
  std::string failing() const;
};

/// Decides (B1)-(B4) for g acting on its natural module.
BignessCertificate check_bigness(const MatrixGroup& g, const EngineOptions& opts = {});

/// (B4) alone: for each irreducible submodule of ad V, the first witness in
/// element / eigenvalue / basis order.
B4Section b4_search(const MatrixGroup& g, const EngineOptions& opts = {});

struct EquivalenceResult {
  bool agrees = false;
  bool first_big = false;
  bool second_big = false;
};

/// G is big iff k^x G is.
EquivalenceResult check_scalar_extension_equivalence(const MatrixGroup& g, const EngineOptions& opts = {});

struct MonotonicityResult {
  bool holds = false;          // no violated implication
  bool h_b234 = false;
  bool g_b234 = false;
  bool index_prime_to_ell = false;
  bool h_big = false;
  bool g_big = false;
};

/// If H satisfies B2-B4 then so does G; if moreover H is big and [G:H] is
/// prime to ell, G is big. Throws NotNormal.
MonotonicityResult check_normal_subgroup_monotonicity(const MatrixGroup& h, const MatrixGroup& g,
                                                      const EngineOptions& opts = {});

struct BaseChangeResult {
  bool holds = false;  // big over F_q implies big over F_{q^d}
  bool small_big = false;
  bool large_big = false;
  bool evaluated_large = false;
};

/// The same matrices over F_{q^d}; the extension is only checked when g is big.
BaseChangeResult check_base_change(const MatrixGroup& g, std::uint32_t d, const EngineOptions& opts = {});

/// The same group over the extension field.
MatrixGroup extend_group(const MatrixGroup& g, const FieldEmbedding& emb);

}  // namespace bigness
