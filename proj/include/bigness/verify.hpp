#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bigness/engine.hpp"
#include "bigness/matrix.hpp"

namespace bigness {

/// Independent re-check of a certificate. Uses only field and matrix
/// arithmetic: its own closure (right multiplication, ordered map), its own
/// cocycle solve, and a rank test for (B4).
struct VerifierReport {
  bool ok = false;
  std::uint64_t order = 0;
  std::size_t witnesses_checked = 0;
  std::size_t commutant_dim = 0;
  /// Rank of the functionals f -> phi f v over all simple eigenpairs in k.
  /// (B4) holds iff it equals n^2: the common annihilator is a submodule.
  std::size_t functional_rank = 0;
  bool b4 = false;
  bool h1_checked = false;
  std::size_t h1 = 0;
  std::vector<std::string> problems;
};

inline constexpr std::uint64_t kVerifierCocycleBudget = std::uint64_t{1} << 27;

VerifierReport verify_certificate(const FieldPtr& field, std::size_t n, const std::vector<Matrix>& generators,
                                  const BignessCertificate& cert, std::uint64_t cap = std::uint64_t{1} << 22);

}  // namespace bigness
