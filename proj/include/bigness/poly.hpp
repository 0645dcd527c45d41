#pragma once

#include <cstdint>
#include <vector>

#include "bigness/field.hpp"

namespace bigness {

/// Dense univariate polynomial over F_q, lowest degree first. Trimmed: the
/// zero polynomial is empty and the last coefficient is non-zero.
using Poly = std::vector<Elem>;

void poly_trim(Poly& p);
int poly_degree(const Poly& p);
Elem poly_eval(const Field& F, const Poly& p, Elem x);
Poly poly_add(const Field& F, const Poly& a, const Poly& b);
Poly poly_sub(const Field& F, const Poly& a, const Poly& b);
Poly poly_mul(const Field& F, const Poly& a, const Poly& b);
/// Quotient and remainder; b must be non-zero.
void poly_divmod(const Field& F, const Poly& a, const Poly& b, Poly& quotient, Poly& remainder);
Poly poly_mod(const Field& F, const Poly& a, const Poly& b);
/// Monic gcd.
Poly poly_gcd(const Field& F, Poly a, Poly b);
Poly poly_powmod(const Field& F, const Poly& base, std::uint64_t e, const Poly& modulus);
Poly poly_monic(const Field& F, const Poly& p);

/// Multiplicity of x as a root of p (p non-zero).
unsigned root_multiplicity(const Field& F, const Poly& p, Elem x);

/// Distinct roots of p lying in F, in increasing code order. For q <= 2^16
/// every field element is tested; otherwise the split part gcd(p, x^q - x) is
/// separated by equal-degree splitting.
std::vector<Elem> roots_in_field(const Field& F, const Poly& p, std::uint64_t seed = 0x5eed);

}  // namespace bigness
