#include "bigness/poly.hpp"

#include <algorithm>
#include <random>

#include "bigness/error.hpp"

namespace bigness {

namespace {
constexpr std::uint32_t kScanLimit = 1u << 16;
}

void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int poly_degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Elem poly_eval(const Field& F, const Poly& p, Elem x) {
  Elem acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = F.add(F.mul(acc, x), p[i]);
  return acc;
}

Poly poly_add(const Field& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = F.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  poly_trim(r);
  return r;
}

Poly poly_sub(const Field& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  poly_trim(r);
  return r;
}

Poly poly_mul(const Field& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  poly_trim(r);
  return r;
}

void poly_divmod(const Field& F, const Poly& a, const Poly& b, Poly& quotient, Poly& remainder) {
  if (b.empty()) throw Error(ErrorKind::InvalidArgument, "polynomial division by zero");
  remainder = a;
  poly_trim(remainder);
  quotient.assign(remainder.size() >= b.size() ? remainder.size() - b.size() + 1 : 0, 0);
  const Elem lead_inv = F.inv(b.back());
  while (remainder.size() >= b.size()) {
    const Elem c = F.mul(remainder.back(), lead_inv);
    const std::size_t shift = remainder.size() - b.size();
    quotient[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i)
      remainder[shift + i] = F.sub(remainder[shift + i], F.mul(c, b[i]));
    poly_trim(remainder);
  }
  poly_trim(quotient);
}

Poly poly_mod(const Field& F, const Poly& a, const Poly& b) {
  Poly q, r;
  poly_divmod(F, a, b, q, r);
  return r;
}

Poly poly_monic(const Field& F, const Poly& p) {
  if (p.empty()) return p;
  const Elem inv = F.inv(p.back());
  Poly r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = F.mul(p[i], inv);
  return r;
}

Poly poly_gcd(const Field& F, Poly a, Poly b) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(F, a);
}

Poly poly_powmod(const Field& F, const Poly& base, std::uint64_t e, const Poly& modulus) {
  Poly result = poly_mod(F, Poly{1}, modulus);
  Poly b = poly_mod(F, base, modulus);
  while (e) {
    if (e & 1) result = poly_mod(F, poly_mul(F, result, b), modulus);
    b = poly_mod(F, poly_mul(F, b, b), modulus);
    e >>= 1;
  }
  return result;
}

unsigned root_multiplicity(const Field& F, const Poly& p, Elem x) {
  Poly cur = p;
  poly_trim(cur);
  if (cur.empty()) throw Error(ErrorKind::InvalidArgument, "multiplicity in zero polynomial");
  unsigned mult = 0;
  const Poly linear = {F.neg(x), 1};
  while (cur.size() > 1 && poly_eval(F, cur, x) == 0) {
    Poly q, r;
    poly_divmod(F, cur, linear, q, r);
    cur = std::move(q);
    ++mult;
  }
  return mult;
}

namespace {

// Splits a monic squarefree product of distinct linear factors.
void split_linear(const Field& F, const Poly& f, std::mt19937_64& rng, std::vector<Elem>& out) {
  const int d = poly_degree(f);
  if (d <= 0) return;
  if (d == 1) {
    out.push_back(F.neg(f[0]));
    return;
  }
  std::uniform_int_distribution<Elem> pick(0, F.order() - 1);
  for (;;) {
    Poly g;
    if (F.characteristic() == 2) {
      // random scaling c*x; the trace separates roots by Tr(c*r)
      Poly a = {0, pick(rng)};
      poly_trim(a);
      if (a.empty()) continue;
      // Trace map a + a^2 + ... + a^{2^{m-1}}, m = log2 q.
      Poly t = a, acc = a;
      for (std::uint32_t i = 1; i < F.degree(); ++i) {
        t = poly_mod(F, poly_mul(F, t, t), f);
        acc = poly_add(F, acc, t);
      }
      g = poly_gcd(F, f, acc);
    } else {
      Poly a = {pick(rng), 1};
      Poly h = poly_powmod(F, a, (F.order() - 1) / 2, f);
      g = poly_gcd(F, f, poly_sub(F, h, Poly{1}));
    }
    const int dg = poly_degree(g);
    if (dg > 0 && dg < d) {
      Poly q, r;
      poly_divmod(F, f, g, q, r);
      split_linear(F, g, rng, out);
      split_linear(F, poly_monic(F, q), rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Elem> roots_in_field(const Field& F, const Poly& p, std::uint64_t seed) {
  Poly f = p;
  poly_trim(f);
  if (f.empty()) throw Error(ErrorKind::InvalidArgument, "roots of zero polynomial");
  std::vector<Elem> roots;
  if (F.order() <= kScanLimit) {
    for (Elem x = 0; x < F.order(); ++x)
      if (poly_eval(F, f, x) == 0) roots.push_back(x);
    return roots;
  }
  f = poly_monic(F, f);
  // split part: gcd(f, x^q - x)
  Poly xq = poly_powmod(F, Poly{0, 1}, F.order(), f);
  Poly split = poly_gcd(F, f, poly_sub(F, xq, Poly{0, 1}));
  std::mt19937_64 rng(seed);
  split_linear(F, split, rng, roots);
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace bigness
