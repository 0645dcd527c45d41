#include "bigness/field.hpp"

#include <algorithm>
#include <string>

#include "bigness/error.hpp"

namespace bigness {

namespace {

constexpr std::uint32_t kLogTableLimit = 1u << 22;
constexpr std::uint32_t kAddTableLimit = 1u << 10;

// Dense polynomials over the prime field F_p, low degree first, trimmed.
using PrimePoly = std::vector<std::uint32_t>;

void trim(PrimePoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1, base = a % p;
  std::uint64_t e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

PrimePoly mod_poly(PrimePoly a, const PrimePoly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint32_t lead_inv = inv_mod(m.back(), p);
  while (a.size() >= m.size()) {
    const std::uint64_t c = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      const std::uint64_t t = c * m[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - t) % p);
    }
    trim(a);
  }
  return a;
}

PrimePoly mulmod_poly(const PrimePoly& a, const PrimePoly& b, const PrimePoly& m,
                      std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  PrimePoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>(
          (r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
  return mod_poly(std::move(r), m, p);
}

PrimePoly gcd_poly(PrimePoly a, PrimePoly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PrimePoly r = mod_poly(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Rabin-style test: f of degree d is irreducible over F_p iff
// gcd(x^{p^i} - x, f) = 1 for 1 <= i <= d/2.
bool irreducible(const PrimePoly& f, std::uint32_t p) {
  const std::size_t d = f.size() - 1;
  if (d == 1) return true;
  if (f[0] == 0) return false;
  PrimePoly x = {0, 1};
  PrimePoly power = mod_poly(x, f, p);
  for (std::size_t i = 1; i <= d / 2; ++i) {
    // power <- power^p mod f
    PrimePoly acc = {1};
    PrimePoly base = power;
    std::uint64_t e = p;
    while (e) {
      if (e & 1) acc = mulmod_poly(acc, base, f, p);
      base = mulmod_poly(base, base, f, p);
      e >>= 1;
    }
    power = acc;
    PrimePoly diff = power;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;
    PrimePoly g = gcd_poly(f, diff, p);
    if (g.size() > 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

Field::Field(std::uint32_t ell, std::vector<std::uint32_t> modulus)
    : ell_(ell),
      degree_(static_cast<std::uint32_t>(modulus.size() - 1)),
      modulus_(std::move(modulus)) {
  std::uint64_t q = 1;
  ell_powers_.reserve(degree_ + 1);
  for (std::uint32_t i = 0; i <= degree_; ++i) {
    ell_powers_.push_back(static_cast<std::uint32_t>(std::min<std::uint64_t>(q, UINT32_MAX)));
    if (i < degree_) q *= ell;
  }
  q_ = static_cast<std::uint32_t>(q);
  build_tables();
}

FieldPtr Field::make(std::uint32_t ell, std::uint32_t degree, std::uint64_t bound) {
  if (!bigness::is_prime(ell)) throw Error(ErrorKind::NotPrime, std::to_string(ell) + " is not prime");
  if (degree == 0) throw Error(ErrorKind::InvalidArgument, "degree must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < degree; ++i) {
    q *= ell;
    if (q > bound)
      throw Error(ErrorKind::DegreeTooLarge,
                  std::to_string(ell) + "^" + std::to_string(degree) + " exceeds field bound");
  }
  if (q > bound)
    throw Error(ErrorKind::DegreeTooLarge, "field order exceeds bound");
  // Enumerate monic polynomials by the code of their lower coefficients.
  std::vector<std::uint32_t> modulus(degree + 1, 0);
  modulus[degree] = 1;
  for (std::uint64_t code = 0; code < q; ++code) {
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < degree; ++i) {
      modulus[i] = static_cast<std::uint32_t>(c % ell);
      c /= ell;
    }
    if (irreducible(modulus, ell)) return FieldPtr(new Field(ell, modulus));
  }
  throw Error(ErrorKind::InvalidArgument, "no irreducible polynomial found");
}

FieldPtr Field::with_modulus(std::uint32_t ell, std::vector<std::uint32_t> modulus) {
  if (!bigness::is_prime(ell)) throw Error(ErrorKind::NotPrime, std::to_string(ell) + " is not prime");
  if (modulus.size() < 2 || modulus.back() != 1)
    throw Error(ErrorKind::InvalidArgument, "modulus must be monic of positive degree");
  std::uint64_t q = 1;
  for (std::size_t i = 1; i < modulus.size(); ++i) {
    q *= ell;
    if (q > kDefaultFieldBound) throw Error(ErrorKind::DegreeTooLarge, "field order exceeds bound");
  }
  for (auto c : modulus)
    if (c >= ell) throw Error(ErrorKind::InvalidArgument, "modulus coefficient out of range");
  if (!irreducible(modulus, ell))
    throw Error(ErrorKind::InvalidArgument, "modulus is not irreducible");
  return FieldPtr(new Field(ell, std::move(modulus)));
}

Elem Field::add_digits(Elem a, Elem b, bool subtract) const noexcept {
  Elem out = 0;
  for (std::uint32_t i = 0; i < degree_; ++i) {
    const std::uint32_t da = a % ell_;
    const std::uint32_t db = b % ell_;
    a /= ell_;
    b /= ell_;
    std::uint32_t s = subtract ? (da + ell_ - db) : (da + db);
    if (s >= ell_) s -= ell_;
    out += s * ell_powers_[i];
  }
  return out;
}

Elem Field::mul_poly(Elem a, Elem b) const noexcept {
  const auto da = digits(a);
  const auto db = digits(b);
  std::vector<std::uint64_t> prod(2 * degree_ - 1, 0);
  for (std::uint32_t i = 0; i < degree_; ++i)
    for (std::uint32_t j = 0; j < degree_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{da[i]} * db[j]) % ell_;
  for (std::size_t k = prod.size(); k-- > degree_;) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    const std::size_t shift = k - degree_;
    for (std::uint32_t i = 0; i <= degree_; ++i)
      prod[shift + i] = (prod[shift + i] + ell_ - c * modulus_[i] % ell_) % ell_;
  }
  Elem out = 0;
  for (std::uint32_t i = 0; i < degree_; ++i) out += static_cast<Elem>(prod[i]) * ell_powers_[i];
  return out;
}

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
  Elem result = 1;
  Elem base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(ErrorKind::InvalidArgument, "inverse of zero");
  if (degree_ == 1) return inv_mod(a, ell_);
  if (!log_.empty()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  return pow(a, q_ - 2);
}

std::uint32_t Field::log(Elem a) const {
  if (a == 0) throw Error(ErrorKind::InvalidArgument, "log of zero");
  if (!log_.empty()) return log_[a];
  // Baby-step giant-step would be the next step for huge fields; a linear
  // scan is adequate below the desk-scale bound.
  Elem x = 1;
  for (std::uint32_t k = 0; k + 1 < q_; ++k) {
    if (x == a) return k;
    x = mul(x, generator_);
  }
  throw Error(ErrorKind::InvalidArgument, "element not in multiplicative group");
}

std::vector<std::uint32_t> Field::digits(Elem a) const {
  std::vector<std::uint32_t> d(degree_);
  for (std::uint32_t i = 0; i < degree_; ++i) {
    d[i] = a % ell_;
    a /= ell_;
  }
  return d;
}

Elem Field::from_digits(const std::vector<std::uint32_t>& d) const {
  Elem out = 0;
  for (std::size_t i = 0; i < d.size() && i < degree_; ++i) out += (d[i] % ell_) * ell_powers_[i];
  return out;
}

void Field::build_tables() {
  const std::uint64_t n = q_ - 1;
  const auto divisors = prime_divisors(n);
  // generator search uses the slow path; tables are not populated yet
  for (Elem g = 1; g < q_; ++g) {
    bool primitive = true;
    for (auto p : divisors) {
      if (pow(g, n / p) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      generator_ = g;
      break;
    }
  }
  if (degree_ > 1 && q_ <= kLogTableLimit) {
    log_.assign(q_, 0);
    exp_.assign(q_, 0);
    Elem x = 1;
    for (std::uint32_t k = 0; k < q_ - 1; ++k) {
      exp_[k] = x;
      log_[x] = k;
      x = mul_poly(x, generator_);
    }
    exp_[q_ - 1] = 1;
  }
  if (degree_ > 1 && q_ <= kAddTableLimit) {
    add_table_.resize(static_cast<std::size_t>(q_) * q_);
    for (Elem a = 0; a < q_; ++a)
      for (Elem b = 0; b < q_; ++b) add_table_[static_cast<std::size_t>(a) * q_ + b] = add_digits(a, b, false);
  }
}

FieldEmbedding::FieldEmbedding(FieldPtr small, FieldPtr large)
    : small_(std::move(small)), large_(std::move(large)) {
  if (small_->characteristic() != large_->characteristic() ||
      large_->degree() % small_->degree() != 0)
    throw Error(ErrorKind::InvalidArgument, "no embedding between these fields");
  const auto& m = small_->modulus();
  const Field& L = *large_;
  auto eval = [&](Elem x) {
    Elem acc = 0;
    for (std::size_t i = m.size(); i-- > 0;) acc = L.add(L.mul(acc, x), L.from_int(m[i]));
    return acc;
  };
  Elem root = 0;
  bool found = false;
  for (Elem x = 0; x < L.order(); ++x) {
    if (eval(x) == 0) {
      root = x;
      found = true;
      break;
    }
  }
  if (!found) throw Error(ErrorKind::InvalidArgument, "modulus has no root in target field");
  root_powers_.resize(small_->degree());
  Elem p = 1;
  for (auto& r : root_powers_) {
    r = p;
    p = L.mul(p, root);
  }
}

Elem FieldEmbedding::operator()(Elem a) const {
  const Field& L = *large_;
  const auto d = small_->digits(a);
  Elem out = 0;
  for (std::size_t i = 0; i < d.size(); ++i) out = L.add(out, L.mul(L.from_int(d[i]), root_powers_[i]));
  return out;
}

}  // namespace bigness
