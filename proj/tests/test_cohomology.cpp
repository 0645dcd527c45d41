#include <random>

#include "bigness/cohomology.hpp"
#include "bigness/error.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace bigness;
using namespace fixtures;

namespace {

// dim Z^1 with one unknown vector f(x) per element x and the constraints
// f(x s) = f(x) + x f(s) for every element x and generator s.
std::size_t brute_z1(const MatrixGroup& g, const GModule& m) {
  const Field& F = m.field();
  const std::size_t n = m.dim(), N = g.order();
  const auto act = all_element_actions(g, m);
  std::vector<std::size_t> gen_index;
  for (const auto& s : g.generators()) gen_index.push_back(*g.index_of(s));
  Subspace rows(N * n);
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t si = 0; si < gen_index.size(); ++si) {
      const std::size_t s = gen_index[si];
      const std::size_t xs = *g.index_of(mat_mul(F, g.element(x), g.generators()[si]));
      for (std::size_t r = 0; r < n; ++r) {
        Vector row(N * n, 0);
        row[xs * n + r] = F.add(row[xs * n + r], 1);
        row[x * n + r] = F.sub(row[x * n + r], 1);
        for (std::size_t c = 0; c < n; ++c) row[s * n + c] = F.sub(row[s * n + c], act[x](r, c));
        rows.insert(F, row);
      }
    }
  return N * n - rows.dim();
}

GModule trivial_module(const MatrixGroup& g, std::size_t dim = 1) {
  return GModule(g.field_ptr(), dim, std::vector<Matrix>(g.generators().size(), Matrix::identity(dim)));
}

struct Case {
  MatrixGroup g;
  GModule m;
};

std::vector<Case> corpus() {
  std::vector<Case> c;
  auto add_all = [&](const MatrixGroup& g) {
    GModule v = GModule::natural(g);
    c.push_back({g, v});
    c.push_back({g, ad_module(v)});
    c.push_back({g, ad0_module(v, false)});
    c.push_back({g, trivial_module(g)});
    c.push_back({g, dual_module(v)});
  };
  auto F5 = Field::make(5, 1);
  auto F3 = Field::make(3, 1);
  auto F7 = Field::make(7, 1);
  add_all(sl2(3));
  add_all(sl2(5));
  add_all(unipotent(5));
  add_all(nonsplit_torus(5));
  add_all(MatrixGroup::close(F5, 2, {mat2(2, 0, 0, 1), mat2(1, 1, 0, 1)}));
  add_all(MatrixGroup::close(F3, 2, {mat2(2, 0, 0, 1), mat2(1, 1, 0, 1), mat2(0, 1, 1, 0)}));
  add_all(MatrixGroup::close(F7, 2, {mat2(3, 0, 0, 5), mat2(0, 1, 6, 0)}));
  add_all(MatrixGroup::close(F5, 2, {mat2(2, 0, 0, 3), mat2(0, 1, 1, 0)}));
  return c;
}

}  // namespace

TEST_CASE("h1 of Z/ell with trivial coefficients") {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    auto g = unipotent(p);
    auto c = h1(g, trivial_module(g));
    CHECK(c.h1_dim == 1);
    CHECK(c.z1_dim == 1);
    CHECK(c.b1_dim == 0);
    CHECK(c.representatives.size() == 1);
  }
}

TEST_CASE("h1 vanishes for groups of order prime to ell") {
  auto F5 = Field::make(5, 1);
  auto F7 = Field::make(7, 1);
  std::vector<MatrixGroup> gs{
      MatrixGroup::close(F5, 2, {mat2(2, 0, 0, 1), mat2(0, 1, 1, 0)}),
      MatrixGroup::close(F7, 2, {mat2(3, 0, 0, 5), mat2(0, 1, 6, 0)}),
      nonsplit_torus(5),
      MatrixGroup::close(F5, 2, {mat2(4, 0, 0, 4)}),
  };
  for (const auto& g : gs) {
    REQUIRE(g.order() % g.field().characteristic() != 0);
    GModule v = GModule::natural(g);
    for (const auto& m : {v, ad_module(v), ad0_module(v), trivial_module(g, 2)}) CHECK(h1(g, m).h1_dim == 0);
  }
}

TEST_CASE("h1 agrees with an all-element cocycle solve") {
  for (const auto& [g, m] : corpus()) {
    if (g.order() * m.dim() > 1200) continue;
    auto c = h1(g, m);
    CHECK(c.z1_dim == brute_z1(g, m));
    CHECK(c.b1_dim == m.dim() - fixed_points(m).rows());
    CHECK(c.h1_dim == c.representatives.size());
  }
}

TEST_CASE("h1 of SL2(F5) on ad0") {
  auto g = sl2(5);
  GModule ad0 = ad0_module(GModule::natural(g));
  auto c = h1(g, ad0);
  // Independent solve over all element values.
  CHECK(c.z1_dim == brute_z1(g, ad0));
  CHECK(c.b1_dim == 3);
  CHECK(c.h1_dim == 1);
  CHECK(h1(sl2(7), ad0_module(GModule::natural(sl2(7)))).h1_dim == 0);
}

TEST_CASE("cocycle representatives satisfy the cocycle identity") {
  std::mt19937_64 rng(1000);
  for (const auto& [g, m] : corpus()) {
    auto c = h1(g, m);
    const auto act = all_element_actions(g, m);
    for (const auto& rep : c.representatives) {
      const auto vals = cocycle_values(g, m, rep);
      for (int t = 0; t < 1000; ++t) {
        const std::size_t a = rng() % g.order(), b = rng() % g.order();
        const std::size_t ab = *g.index_of(mat_mul(g.field(), g.element(a), g.element(b)));
        Vector rhs = mat_vec(m.field(), act[a], vals[b]);
        for (std::size_t r = 0; r < m.dim(); ++r) rhs[r] = m.field().add(rhs[r], vals[a][r]);
        CHECK(vals[ab] == rhs);
      }
    }
  }
}

TEST_CASE("Sylow restriction bounds h1") {
  for (const auto& [g, m] : corpus()) {
    const auto bound = h1_upper_bound_via_sylow(g, m);
    CHECK(h1(g, m).h1_dim <= bound);
    if (g.order() % g.field().characteristic() != 0) CHECK(bound == 0);
  }
  // G = Z/ell is its own Sylow subgroup.
  auto u = unipotent(5);
  GModule ad0 = ad0_module(GModule::natural(u));
  CHECK(h1_upper_bound_via_sylow(u, ad0) == h1(u, ad0).h1_dim);
  auto s = sl2(5);
  GModule sad0 = ad0_module(GModule::natural(s));
  auto p = sylow_subgroup(s, 5);
  CHECK(p.order() == 5);
  CHECK(h1_upper_bound_via_sylow(s, sad0, p) >= h1(s, sad0).h1_dim);
  auto wrong = subgroup(s, {});
  CHECK_THROWS_AS(h1_upper_bound_via_sylow(s, sad0, wrong), Error);
}

TEST_CASE("inflation-restriction consistency") {
  int exercised = 0;
  for (const auto& [g, m] : corpus()) {
    std::vector<MatrixGroup> normals{derived_subgroup(g), g};
    auto d = derived_subgroup(g);
    normals.push_back(derived_subgroup(d));
    for (const auto& h : normals) {
      if (!is_normal_subgroup(h, g) || h.order() == 1) continue;
      GModule mh = restrict_module(g, m, h);
      if (h1(h, mh).h1_dim == 0 && fixed_points(mh).rows() == 0) {
        ++exercised;
        CHECK(h1(g, m).h1_dim == 0);
      }
    }
  }
  CHECK(exercised > 5);
}
