#pragma once

#include <cstddef>
#include <vector>

#include "bigness/group.hpp"
#include "bigness/module.hpp"

namespace bigness {

/// A 1-cocycle is recorded by its values on the group generators,
/// concatenated: (f(s_1), ..., f(s_k)).
struct CocycleSpace {
  std::size_t z1_dim = 0;
  std::size_t b1_dim = 0;
  std::size_t h1_dim = 0;
  std::size_t fixed_dim = 0;  // dim M^G
  /// Cocycles whose classes form a basis of H^1.
  std::vector<Vector> representatives;
};

/// Rows span the fixed points M^G.
Matrix fixed_points(const GModule& m);

/// H^1(G, M) by propagating f(s x) = f(s) + s f(x) over the discovery tree;
/// every Cayley-graph edge closing a cycle contributes linear constraints.
CocycleSpace h1(const MatrixGroup& g, const GModule& m);

/// f(x) for every enumerated x, given the generator values of a cocycle.
std::vector<Vector> cocycle_values(const MatrixGroup& g, const GModule& m, const Vector& generator_values);

/// h1(P, M restricted to P), an upper bound for h1(G, M) when P is a Sylow
/// subgroup for the characteristic. Throws NoSylowFound if P's order is not
/// the full ell-part of |G|.
std::size_t h1_upper_bound_via_sylow(const MatrixGroup& g, const GModule& m, const MatrixGroup& p);
std::size_t h1_upper_bound_via_sylow(const MatrixGroup& g, const GModule& m);

}  // namespace bigness
