#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace bigness {

/// Field elements are integer codes 0..q-1. The code of a_0 + a_1 x + ... is
/// sum a_i * ell^i, taken against the field's fixed modulus, so 0 and 1 are
/// always the additive and multiplicative identities and the prime subfield
/// occupies codes 0..ell-1.
using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

inline constexpr std::uint64_t kDefaultFieldBound = std::uint64_t{1} << 31;

/// F_q with q = ell^d. Immutable after construction; safe to share across
/// threads.
class Field {
 public:
  /// Builds F_{ell^d} with the smallest monic irreducible modulus (ordered by
  /// the code of its lower coefficients) and caches the smallest primitive
  /// element. Throws NotPrime / DegreeTooLarge.
  static FieldPtr make(std::uint32_t ell, std::uint32_t degree,
                       std::uint64_t bound = kDefaultFieldBound);

  /// Builds the field from an explicit modulus (low to high, monic, length
  /// d+1). The modulus must be irreducible.
  static FieldPtr with_modulus(std::uint32_t ell, std::vector<std::uint32_t> modulus);

  std::uint32_t characteristic() const noexcept { return ell_; }
  std::uint32_t degree() const noexcept { return degree_; }
  std::uint32_t order() const noexcept { return q_; }
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  bool is_prime() const noexcept { return degree_ == 1; }

  /// Smallest primitive element (generator of the multiplicative group).
  Elem generator() const noexcept { return generator_; }

  Elem add(Elem a, Elem b) const noexcept {
    if (degree_ == 1) {
      std::uint32_t s = a + b;
      return s >= ell_ ? s - ell_ : s;
    }
    if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * q_ + b];
    return add_digits(a, b, false);
  }

  Elem sub(Elem a, Elem b) const noexcept {
    if (degree_ == 1) return a >= b ? a - b : a + ell_ - b;
    return add_digits(a, b, true);
  }

  Elem neg(Elem a) const noexcept { return sub(0, a); }

  Elem mul(Elem a, Elem b) const noexcept {
    if (a == 0 || b == 0) return 0;
    if (degree_ == 1)
      return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % ell_);
    if (!log_.empty()) {
      std::uint32_t s = log_[a] + log_[b];
      if (s >= q_ - 1) s -= q_ - 1;
      return exp_[s];
    }
    return mul_poly(a, b);
  }

  /// Multiplicative inverse; inv(0) is a precondition violation and throws.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const noexcept;

  /// x -> x^ell.
  Elem frobenius(Elem a) const noexcept { return pow(a, ell_); }

  /// Image of an integer in the prime subfield.
  Elem from_int(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(ell_);
    if (r < 0) r += ell_;
    return static_cast<Elem>(r);
  }

  /// Discrete log base generator(); requires a != 0.
  std::uint32_t log(Elem a) const;

  std::vector<std::uint32_t> digits(Elem a) const;
  Elem from_digits(const std::vector<std::uint32_t>& digits) const;

 private:
  Field(std::uint32_t ell, std::vector<std::uint32_t> modulus);

  Elem add_digits(Elem a, Elem b, bool subtract) const noexcept;
  Elem mul_poly(Elem a, Elem b) const noexcept;
  void build_tables();

  std::uint32_t ell_;
  std::uint32_t degree_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> ell_powers_;
  Elem generator_ = 1;
  std::vector<std::uint32_t> log_;
  std::vector<Elem> exp_;
  std::vector<Elem> add_table_;
};

/// Deterministic trial-division primality test.
bool is_prime(std::uint64_t n) noexcept;

/// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// Embedding of `small` into `large` (both of the same characteristic, with
/// deg(small) dividing deg(large)), sending the class of x to the smallest
/// root of small's modulus in large.
class FieldEmbedding {
 public:
  FieldEmbedding(FieldPtr small, FieldPtr large);
  Elem operator()(Elem a) const;
  const FieldPtr& source() const noexcept { return small_; }
  const FieldPtr& target() const noexcept { return large_; }

 private:
  FieldPtr small_;
  FieldPtr large_;
  std::vector<Elem> root_powers_;
};

}  // namespace bigness
