#include <random>
#include <set>

#include "bigness/error.hpp"
#include "bigness/field.hpp"
#include "bigness/poly.hpp"
#include "doctest.h"

using namespace bigness;

namespace {

// Schoolbook arithmetic on digit vectors, independent of the table code.
std::vector<std::uint32_t> naive_mul(const Field& F, Elem a, Elem b) {
  const auto p = F.characteristic();
  const auto d = F.degree();
  auto x = F.digits(a), y = F.digits(b);
  std::vector<std::uint64_t> prod(2 * d, 0);
  for (std::uint32_t i = 0; i < d; ++i)
    for (std::uint32_t j = 0; j < d; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{x[i]} * y[j]) % p;
  const auto& m = F.modulus();
  for (std::size_t k = 2 * d - 1; k >= d; --k) {
    const auto c = prod[k];
    if (c == 0) continue;
    for (std::uint32_t i = 0; i <= d; ++i)
      prod[k - d + i] = (prod[k - d + i] + (p - c) * m[i]) % p;
  }
  return {prod.begin(), prod.begin() + d};
}

}  // namespace

TEST_CASE("make_field orders and moduli") {
  CHECK(Field::make(5, 1)->order() == 5);
  CHECK(Field::make(2, 3)->order() == 8);
  auto f9 = Field::make(3, 2);
  CHECK(f9->order() == 9);
  CHECK(f9->modulus() == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(Field::make(5, 2)->modulus() == std::vector<std::uint32_t>{2, 0, 1});
  CHECK(Field::make(11, 1)->generator() == 2);
  CHECK(Field::make(7, 1)->generator() == 3);
  CHECK_THROWS_AS(Field::make(6, 1), Error);
  CHECK_THROWS_AS(Field::make(2, 40), Error);
  try {
    Field::make(9, 1);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotPrime);
  }
}

TEST_CASE("Frobenius has order d") {
  for (auto [p, d] : std::vector<std::pair<int, int>>{{3, 2}, {2, 3}, {2, 4}, {5, 2}, {3, 3}, {7, 1}}) {
    auto F = Field::make(p, d);
    bool some_moved_before_d = false;
    for (Elem a = 0; a < F->order(); ++a) {
      Elem x = a;
      for (int i = 0; i < d; ++i) {
        x = F->frobenius(x);
        if (i + 1 < d && x != a) some_moved_before_d = true;
      }
      CHECK(x == a);
    }
    if (d > 1) CHECK(some_moved_before_d);
    // Frobenius is additive and multiplicative.
    for (Elem a = 0; a < F->order(); a += 3)
      for (Elem b = 0; b < F->order(); b += 5) {
        CHECK(F->frobenius(F->add(a, b)) == F->add(F->frobenius(a), F->frobenius(b)));
        CHECK(F->frobenius(F->mul(a, b)) == F->mul(F->frobenius(a), F->frobenius(b)));
      }
  }
}

TEST_CASE("multiplication agrees with schoolbook arithmetic") {
  for (auto [p, d] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {2, 5}, {5, 2}, {7, 2}, {3, 4}}) {
    auto F = Field::make(p, d);
    for (Elem a = 0; a < F->order(); ++a)
      for (Elem b = 0; b < F->order(); ++b) CHECK(F->digits(F->mul(a, b)) == naive_mul(*F, a, b));
  }
}

TEST_CASE("large extension field without tables") {
  auto F = Field::make(2, 24);
  std::mt19937 rng(1);
  std::uniform_int_distribution<Elem> pick(1, F->order() - 1);
  for (int i = 0; i < 300; ++i) {
    Elem a = pick(rng), b = pick(rng), c = pick(rng);
    CHECK(F->digits(F->mul(a, b)) == naive_mul(*F, a, b));
    CHECK(F->mul(a, F->inv(a)) == 1);
    CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
  }
  Elem g = F->generator();
  for (auto r : prime_divisors(F->order() - 1)) CHECK(F->pow(g, (F->order() - 1) / r) != 1);
}

TEST_CASE("generator is primitive and logs invert powers") {
  for (auto [p, d] : std::vector<std::pair<int, int>>{{11, 1}, {3, 2}, {2, 4}, {5, 2}, {13, 1}}) {
    auto F = Field::make(p, d);
    std::set<Elem> seen;
    Elem x = 1;
    for (std::uint32_t k = 0; k + 1 < F->order(); ++k) {
      seen.insert(x);
      CHECK(F->log(x) == k);
      x = F->mul(x, F->generator());
    }
    CHECK(seen.size() == F->order() - 1);
  }
}

TEST_CASE("field embedding is a ring homomorphism") {
  auto small = Field::make(3, 2);
  auto large = Field::make(3, 4);
  FieldEmbedding emb(small, large);
  for (Elem a = 0; a < 3; ++a) CHECK(emb(a) == a);
  for (Elem a = 0; a < 9; ++a)
    for (Elem b = 0; b < 9; ++b) {
      CHECK(emb(small->add(a, b)) == large->add(emb(a), emb(b)));
      CHECK(emb(small->mul(a, b)) == large->mul(emb(a), emb(b)));
    }
}

TEST_CASE("roots in field by splitting agree with the constructed roots") {
  for (auto [p, d] : std::vector<std::pair<int, int>>{{2, 17}, {3, 11}, {257, 2}, {131071, 1}}) {
    auto F = Field::make(p, d);
    std::mt19937 rng(7);
    std::uniform_int_distribution<Elem> pick(0, F->order() - 1);
    std::set<Elem> want;
    Poly f = {1};
    for (int i = 0; i < 6; ++i) {
      Elem r = pick(rng);
      want.insert(r);
      f = poly_mul(*F, f, Poly{F->neg(r), 1});
    }
    // an irreducible-ish quadratic factor that contributes no roots
    Poly extra = {1, 0, 1};
    if (roots_in_field(*F, extra).empty()) f = poly_mul(*F, f, extra);
    auto got = roots_in_field(*F, f);
    CHECK(std::set<Elem>(got.begin(), got.end()) == want);
  }
}

TEST_CASE("root multiplicity") {
  auto F = Field::make(5, 1);
  Poly f = poly_mul(*F, Poly{4, 1}, poly_mul(*F, Poly{4, 1}, Poly{3, 1}));  // (x-1)^2 (x-2)
  CHECK(root_multiplicity(*F, f, 1) == 2);
  CHECK(root_multiplicity(*F, f, 2) == 1);
  CHECK(root_multiplicity(*F, f, 3) == 0);
}
