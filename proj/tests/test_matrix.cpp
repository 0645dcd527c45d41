#include <random>

#include "bigness/error.hpp"
#include "bigness/matrix.hpp"
#include "doctest.h"

using namespace bigness;

namespace {

Matrix random_matrix(const Field& F, std::size_t r, std::size_t c, std::mt19937_64& rng, int zero_bias = 0) {
  std::uniform_int_distribution<Elem> pick(0, F.order() - 1);
  std::uniform_int_distribution<int> coin(0, 9);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = coin(rng) < zero_bias ? 0 : pick(rng);
  return m;
}

// det via Leibniz expansion over permutations (small n only).
Elem leibniz_det(const Field& F, const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  Elem total = 0;
  do {
    Elem term = 1;
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      term = F.mul(term, m(i, perm[i]));
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    }
    total = inversions % 2 ? F.sub(total, term) : F.add(total, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST_CASE("char_poly examples") {
  auto F5 = Field::make(5, 1);
  CHECK(char_poly(*F5, Matrix::identity(2)) == Poly{1, 3, 1});  // (x-1)^2 = x^2 - 2x + 1
  Matrix d(2, 2, {1, 0, 0, 2});
  CHECK(char_poly(*F5, d) == Poly{2, 2, 1});  // (x-1)(x-2) = x^2 - 3x + 2
  auto F3 = Field::make(3, 1);
  Matrix companion(2, 2, {0, 2, 1, 0});  // x^2 + 1
  CHECK(char_poly(*F3, companion) == Poly{1, 0, 1});
  CHECK_THROWS_AS(char_poly(*F5, Matrix(2, 3)), Error);
}

TEST_CASE("char_poly evaluates to det(aI - M)") {
  std::mt19937_64 rng(3);
  for (auto [p, d] : std::vector<std::pair<int, int>>{{5, 1}, {2, 1}, {3, 2}, {7, 1}, {2, 3}}) {
    auto F = Field::make(p, d);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t n = 1 + trial % 5;
      Matrix m = random_matrix(*F, n, n, rng, trial % 3 * 3);
      Poly cp = char_poly(*F, m);
      CHECK(cp.size() == n + 1);
      for (Elem a = 0; a < F->order(); ++a) {
        Matrix s = mat_scale(*F, a, Matrix::identity(n));
        CHECK(poly_eval(*F, cp, a) == leibniz_det(*F, mat_sub(*F, s, m)));
      }
      CHECK(determinant(*F, m) == leibniz_det(*F, m));
    }
  }
}

TEST_CASE("generalized eigenspace examples") {
  auto F = Field::make(5, 1);
  CHECK(generalized_eigenspace(*F, Matrix(2, 2, {1, 1, 0, 1}), 1).rows() == 2);
  Matrix d(2, 2, {1, 0, 0, 2});
  CHECK(generalized_eigenspace(*F, d, 1).rows() == 1);
  CHECK(generalized_eigenspace(*F, d, 3).rows() == 0);
}

TEST_CASE("eigenspace dimensions sum to the split degree") {
  std::mt19937_64 rng(11);
  for (auto [p, d] : std::vector<std::pair<int, int>>{{3, 1}, {5, 1}, {2, 2}}) {
    auto F = Field::make(p, d);
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t n = 1 + trial % 6;
      Matrix g = random_matrix(*F, n, n, rng, trial % 4 * 2);
      Poly cp = char_poly(*F, g);
      std::size_t total = 0, split = 0;
      for (Elem a = 0; a < F->order(); ++a) {
        const auto dim = generalized_eigenspace(*F, g, a).rows();
        CHECK(dim == root_multiplicity(*F, cp, a));
        total += dim;
        split += root_multiplicity(*F, cp, a);
      }
      CHECK(total == split);
    }
  }
}

TEST_CASE("rref, kernel, rank") {
  auto F5 = Field::make(5, 1);
  auto e = rref(*F5, Matrix(2, 2, {2, 4, 1, 2}));
  CHECK(e.form == Matrix(2, 2, {1, 2, 0, 0}));
  CHECK(e.rank() == 1);
  auto F7 = Field::make(7, 1);
  CHECK(kernel(*F7, Matrix(3, 3)).rows() == 3);
  CHECK(kernel(*F7, Matrix::identity(3)).rows() == 0);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    Matrix m = random_matrix(*F7, 1 + trial % 5, 1 + trial % 7, rng, trial % 5 * 2);
    auto r = rref(*F7, m);
    CHECK(rref(*F7, r.form).form == r.form);
    Matrix k = kernel(*F7, m);
    CHECK(k.rows() + r.rank() == m.cols());
    CHECK(rank(*F7, transpose(m)) == r.rank());
    for (std::size_t i = 0; i < k.rows(); ++i) CHECK(is_zero(mat_vec(*F7, m, k.row(i))));
    if (k.rows()) CHECK(rank(*F7, k) == k.rows());
  }
}

TEST_CASE("inverse and solve") {
  auto F = Field::make(3, 2);
  std::mt19937_64 rng(9);
  int invertible = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 4;
    Matrix m = random_matrix(*F, n, n, rng);
    if (determinant(*F, m) == 0) {
      CHECK_THROWS_AS(inverse(*F, m), Error);
      continue;
    }
    ++invertible;
    CHECK(mat_mul(*F, m, inverse(*F, m)) == Matrix::identity(n));
    Vector x(n);
    for (auto& v : x) v = rng() % F->order();
    auto b = mat_vec(*F, m, x);
    auto s = solve(*F, m, b);
    REQUIRE(s.has_value());
    CHECK(*s == x);
  }
  CHECK(invertible > 10);
  Matrix sing(2, 2, {1, 1, 1, 1});
  CHECK_FALSE(solve(*F, sing, Vector{0, 1}).has_value());
}

TEST_CASE("Subspace agrees with batch row reduction") {
  auto F = Field::make(5, 1);
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    Matrix m = random_matrix(*F, 1 + trial % 6, 6, rng, 5);
    Subspace s = row_space(*F, m);
    auto e = rref(*F, m);
    CHECK(s.dim() == e.rank());
    Matrix b = s.basis();
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) CHECK(b(i, j) == e.form(i, j));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      CHECK(s.contains(*F, m.row(i)));
      auto c = s.coordinates(*F, m.row(i));
      CHECK(vec_mat(*F, c, b) == m.row_vector(i));
    }
  }
}

TEST_CASE("kron is bilinear and multiplicative") {
  auto F = Field::make(7, 1);
  std::mt19937_64 rng(4);
  Matrix a = random_matrix(*F, 2, 2, rng), b = random_matrix(*F, 3, 3, rng);
  Matrix c = random_matrix(*F, 2, 2, rng), d = random_matrix(*F, 3, 3, rng);
  CHECK(mat_mul(*F, kron(*F, a, b), kron(*F, c, d)) == kron(*F, mat_mul(*F, a, c), mat_mul(*F, b, d)));
}
