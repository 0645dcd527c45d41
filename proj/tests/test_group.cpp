#include <functional>
#include <random>

#include "bigness/error.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace bigness;
using namespace fixtures;

namespace {

std::set<std::vector<Elem>> brute_sl(const Field& F, std::size_t n) {
  std::set<std::vector<Elem>> s;
  for (const auto& m : all_matrices(F, n))
    if (determinant(F, m) == 1) s.insert(m.data());
  return s;
}

std::set<std::vector<Elem>> brute_gl(const Field& F, std::size_t n) {
  std::set<std::vector<Elem>> s;
  for (const auto& m : all_matrices(F, n))
    if (determinant(F, m) != 0) s.insert(m.data());
  return s;
}

std::set<std::vector<Elem>> brute_derived(const MatrixGroup& g) {
  std::vector<Matrix> comms;
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = 0; j < g.order(); ++j) comms.push_back(commutator(g.field(), g.element(i), g.element(j)));
  return naive_closure(g.field(), g.dimension(), comms);
}

// Number of homomorphisms G -> Z/ell, by assigning generator images and
// propagating along products.
std::uint64_t count_homs_to_cyclic(const MatrixGroup& g, std::uint32_t ell) {
  const std::size_t k = g.generators().size();
  std::uint64_t total = 0;
  std::vector<std::uint32_t> img(k, 0);
  std::map<std::vector<Elem>, std::uint32_t> value;
  for (;;) {
    value.clear();
    std::vector<Matrix> frontier{Matrix::identity(g.dimension())};
    value[frontier[0].data()] = 0;
    bool ok = true;
    for (std::size_t head = 0; head < frontier.size() && ok; ++head) {
      for (std::size_t s = 0; s < k && ok; ++s) {
        Matrix y = mat_mul(g.field(), frontier[head], g.generators()[s]);
        std::uint32_t v = (value[frontier[head].data()] + img[s]) % ell;
        auto it = value.find(y.data());
        if (it == value.end()) {
          value[y.data()] = v;
          frontier.push_back(y);
        } else if (it->second != v) {
          ok = false;
        }
      }
    }
    if (ok) ++total;
    std::size_t i = 0;
    while (i < k && ++img[i] == ell) img[i++] = 0;
    if (i == k) break;
  }
  return total;
}

}  // namespace

TEST_CASE("closure orders") {
  auto F5 = Field::make(5, 1);
  CHECK(MatrixGroup::close(F5, 2, {Matrix::identity(2)}).order() == 1);
  auto F3 = Field::make(3, 1);
  MatrixGroup sl23 = MatrixGroup::close(F3, 2, sl2_generators(*F3));
  CHECK(sl23.order() == 3 * (9 - 1));
  CHECK(element_set(sl23) == brute_sl(*F3, 2));
  auto F2 = Field::make(2, 1);
  MatrixGroup gl22 = MatrixGroup::close(F2, 2, {mat2(1, 1, 0, 1), mat2(0, 1, 1, 0)});
  CHECK(gl22.order() == (4 - 1) * (4 - 2));
  CHECK(element_set(gl22) == brute_gl(*F2, 2));
  CHECK(sl2(5).order() == 120);
  CHECK(sl2(7).order() == 336);
}

TEST_CASE("closure respects the cap and validates generators") {
  auto F = Field::make(5, 1);
  CHECK_THROWS_AS(MatrixGroup::close(F, 2, sl2_generators(*F), 50), Error);
  try {
    MatrixGroup::close(F, 2, sl2_generators(*F), 50);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OrderCapExceeded);
  }
  CHECK_THROWS_AS(MatrixGroup(F, 2, {mat2(1, 1, 1, 1)}), Error);
  MatrixGroup lazy(F, 2, sl2_generators(*F));
  CHECK_THROWS_AS(lazy.order(), Error);
}

TEST_CASE("discovery tree reproduces every element") {
  MatrixGroup g = sl2(5);
  for (std::size_t i = 1; i < g.order(); ++i)
    CHECK(g.element(i) == mat_mul(g.field(), g.generators()[g.gen_of(i)], g.element(g.parent_of(i))));
  for (std::size_t i = 0; i < g.order(); i += 7) {
    CHECK(g.product_index(i, g.inverse_index(i)) == 0);
  }
}

TEST_CASE("order divides the order of a larger closure") {
  auto F = Field::make(5, 1);
  std::mt19937_64 rng(8);
  MatrixGroup gl = MatrixGroup::close(F, 2, {mat2(2, 0, 0, 1), mat2(1, 1, 0, 1), mat2(0, 1, 1, 0)});
  CHECK(gl.order() == 480);
  for (int t = 0; t < 25; ++t) {
    Matrix a = gl.element(rng() % gl.order()), b = gl.element(rng() % gl.order());
    auto small = MatrixGroup::close(F, 2, {a});
    auto big = MatrixGroup::close(F, 2, {a, b});
    CHECK(big.order() % small.order() == 0);
  }
}

TEST_CASE("derived subgroups") {
  auto F5 = Field::make(5, 1);
  MatrixGroup ab = MatrixGroup::close(F5, 2, {mat2(2, 0, 0, 3), mat2(4, 0, 0, 4)});
  CHECK(derived_subgroup(ab).order() == 1);
  MatrixGroup s = sl2(5);
  MatrixGroup d = derived_subgroup(s);
  CHECK(d.order() == 120);
  CHECK(element_set(d) == brute_derived(s));
  auto F3 = Field::make(3, 1);
  MatrixGroup gl23 = MatrixGroup::close(F3, 2, {mat2(2, 0, 0, 1), mat2(1, 1, 0, 1), mat2(0, 1, 1, 0)});
  CHECK(gl23.order() == 48);
  MatrixGroup d3 = derived_subgroup(gl23);
  CHECK(element_set(d3) == brute_sl(*F3, 2));
  CHECK(element_set(d3) == brute_derived(gl23));
  CHECK(is_normal_subgroup(d3, gl23));
}

TEST_CASE("B1 examples") {
  auto u = unipotent(5);
  auto r = satisfies_b1(u, 5);
  CHECK_FALSE(r.holds);
  CHECK(r.abelianization_order == 5);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->order() == 1);
  auto F5 = Field::make(5, 1);
  CHECK(satisfies_b1(MatrixGroup::close(F5, 2, {mat2(4, 0, 0, 4)}), 5).holds);
  CHECK(satisfies_b1(sl2(5), 5).holds);
}

TEST_CASE("B1 agrees with homomorphisms to Z/ell on small groups") {
  std::vector<MatrixGroup> corpus;
  auto F3 = Field::make(3, 1);
  auto F2 = Field::make(2, 1);
  auto F5 = Field::make(5, 1);
  auto gl23 = MatrixGroup::close(F3, 2, {mat2(2, 0, 0, 1), mat2(1, 1, 0, 1), mat2(0, 1, 1, 0)});
  std::mt19937_64 rng(21);
  for (int t = 0; t < 30; ++t) {
    Matrix a = gl23.element(rng() % 48), b = gl23.element(rng() % 48);
    corpus.push_back(MatrixGroup::close(F3, 2, {a, b}));
  }
  corpus.push_back(MatrixGroup::close(F2, 2, {mat2(1, 1, 0, 1), mat2(0, 1, 1, 0)}));
  corpus.push_back(MatrixGroup::close(F5, 2, {mat2(2, 0, 0, 1), mat2(1, 1, 0, 1)}));
  corpus.push_back(MatrixGroup::close(F5, 2, {mat2(4, 0, 0, 1), mat2(0, 1, 1, 0)}));
  corpus.push_back(unipotent(5));
  for (const auto& g : corpus) {
    REQUIRE(g.order() <= 200);
    for (std::uint32_t ell : {2u, 3u, 5u}) {
      auto r = satisfies_b1(g, ell);
      const bool has_quotient = count_homs_to_cyclic(g, ell) > 1;
      CHECK(r.holds == !has_quotient);
      if (!r.holds) {
        REQUIRE(r.witness.has_value());
        CHECK(g.order() == ell * r.witness->order());
        CHECK(is_normal_subgroup(*r.witness, g));
      }
    }
  }
}

TEST_CASE("derived subgroup is normal") {
  auto F5 = Field::make(5, 1);
  auto g = MatrixGroup::close(F5, 2, {mat2(2, 0, 0, 1), mat2(1, 1, 0, 1)});
  auto d = derived_subgroup(g);
  for (std::size_t i = 0; i < g.order(); ++i) {
    const Matrix x = g.element(i), xi = inverse(g.field(), x);
    for (std::size_t j = 0; j < d.order(); ++j) CHECK(d.contains(mat_mul(g.field(), mat_mul(g.field(), x, d.element(j)), xi)));
  }
}

TEST_CASE("Sylow subgroups") {
  auto s = sl2(5);
  auto p5 = sylow_subgroup(s, 5);
  CHECK(p5.order() == 5);
  auto p2 = sylow_subgroup(s, 2);
  CHECK(p2.order() == 8);
  auto p3 = sylow_subgroup(s, 3);
  CHECK(p3.order() == 3);
  CHECK(sylow_subgroup(s, 7).order() == 1);
  CHECK(is_subgroup(p2, s));
}
