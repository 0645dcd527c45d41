#include <algorithm>
#include <random>

#include "bigness/error.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace bigness;
using namespace fixtures;

namespace {

// Number of 2x2 (or n x n) matrices commuting with every generator, by
// exhaustive search.
std::uint64_t brute_commutant_size(const GModule& m) {
  std::uint64_t count = 0;
  for (const auto& x : all_matrices(m.field(), m.dim())) {
    bool ok = true;
    for (const auto& a : m.action())
      if (!(mat_mul(m.field(), x, a) == mat_mul(m.field(), a, x))) {
        ok = false;
        break;
      }
    count += ok;
  }
  return count;
}

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

Matrix column_span(const Field& F, const Matrix& h) { return row_space(F, transpose(h)).basis(); }

}  // namespace

TEST_CASE("ad and ad0 dimensions and invariants") {
  auto g = sl2(5);
  GModule v = GModule::natural(g);
  GModule ad = ad_module(v);
  GModule ad0 = ad0_module(v);
  CHECK(ad.dim() == 4);
  CHECK(ad0.dim() == 3);
  GModule triv = ad_module(GModule(g.field_ptr(), 2, {Matrix::identity(2)}));
  CHECK(triv.action()[0] == Matrix::identity(4));
  const Field& F = g.field();
  std::mt19937_64 rng(1);
  for (std::size_t i = 0; i < g.order(); i += 11) {
    Matrix x = g.element(i);
    Matrix f(2, 2, {Elem(rng() % 5), Elem(rng() % 5), Elem(rng() % 5), Elem(rng() % 5)});
    Matrix c = mat_mul(F, mat_mul(F, x, f), inverse(F, x));
    CHECK(trace(F, c) == trace(F, f));
    Matrix act = element_action(g, ad, i);
    CHECK(mat_vec(F, act, f.data()) == c.data());
  }
  // ad0 embeds into ad equivariantly
  for (std::size_t s = 0; s < 2; ++s)
    for (std::size_t k = 0; k < 3; ++k) {
      Vector e(3, 0);
      e[k] = 1;
      Vector img = mat_vec(F, ad0.action()[s], e);
      CHECK(mat_vec(F, ad.action()[s], ad0_to_endomorphism(F, e, 2)) == ad0_to_endomorphism(F, img, 2));
    }
  auto F2 = Field::make(2, 1);
  GModule v2(F2, 2, {mat2(1, 1, 0, 1)});
  CHECK_THROWS_AS(ad0_module(v2), Error);
  CHECK(ad0_module(v2, false).dim() == 3);
}

TEST_CASE("commutant dimension") {
  GModule sl = GModule::natural(sl2(5));
  CHECK(commutant_dimension(sl) == 1);
  CHECK(ipow(5, commutant_dimension(sl)) == brute_commutant_size(sl));
  GModule torus = GModule::natural(nonsplit_torus(5));
  CHECK(commutant_dimension(torus) == 2);
  CHECK(ipow(5, 2) == brute_commutant_size(torus));
  CHECK(commutant_dimension(direct_sum(sl, sl)) == 4);
  CHECK(commutant_dimension(direct_sum(torus, torus)) == 8);
  GModule unip = GModule::natural(unipotent(5));
  CHECK(ipow(5, commutant_dimension(unip)) == brute_commutant_size(unip));
}

TEST_CASE("B2 examples") {
  CHECK(satisfies_b2(GModule::natural(sl2(5))));
  CHECK_FALSE(satisfies_b2(GModule::natural(unipotent(5))));
  GModule torus = GModule::natural(nonsplit_torus(5));
  CHECK(is_irreducible(torus));
  CHECK_FALSE(satisfies_b2(torus));
}

TEST_CASE("spin examples") {
  GModule unip = GModule::natural(unipotent(5));
  CHECK(spin(unip, Vector{0, 0}).rows() == 0);
  Matrix line = spin(unip, Vector{1, 0});
  CHECK(line == Matrix(1, 2, {1, 0}));
  GModule sl = GModule::natural(sl2(7));
  CHECK(spin(sl, Vector{3, 5}).rows() == 2);
}

TEST_CASE("submodules of ad for SL2(F5) match brute force") {
  GModule ad = ad_module(GModule::natural(sl2(5)));
  auto fams = irreducible_submodules(ad);
  REQUIRE(fams.size() == 2);
  std::vector<std::size_t> dims;
  for (const auto& f : fams) {
    dims.push_back(f.simple.dim());
    CHECK(f.hom_basis.size() == 1);
    CHECK(f.line_count == 1);
  }
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<std::size_t>{1, 3});
  auto brute = brute_force_simple_submodules(ad);
  CHECK(brute.size() == 2);
  std::set<std::vector<Elem>> found;
  for (const auto& f : fams)
    for_each_line(ad.field(), f, [&](std::uint64_t, const Matrix& h) {
      found.insert(column_span(ad.field(), h).data());
      return true;
    });
  std::set<std::vector<Elem>> want;
  for (const auto& s : brute) want.insert(s.data());
  CHECK(found == want);
}

TEST_CASE("S + S has q+1 lines and matches brute force") {
  GModule s = GModule::natural(sl2(3));
  GModule ss = direct_sum(s, s);
  auto fams = irreducible_submodules(ss);
  REQUIRE(fams.size() == 1);
  CHECK(fams[0].hom_basis.size() == 2);
  CHECK(fams[0].line_count == 4);
  std::set<std::vector<Elem>> found;
  for_each_line(ss.field(), fams[0], [&](std::uint64_t, const Matrix& h) {
    CHECK(rank(ss.field(), h) == 2);
    found.insert(column_span(ss.field(), h).data());
    return true;
  });
  CHECK(found.size() == 4);
  std::set<std::vector<Elem>> want;
  for (const auto& b : brute_force_simple_submodules(ss)) want.insert(b.data());
  CHECK(found == want);
}

TEST_CASE("lines over a non-trivial endomorphism field") {
  GModule t = GModule::natural(nonsplit_torus(3));
  GModule tt = direct_sum(t, t);
  auto fams = irreducible_submodules(tt);
  REQUIRE(fams.size() == 1);
  CHECK(fams[0].endo_field_degree == 2);
  CHECK(fams[0].e_basis.size() == 2);
  CHECK(fams[0].line_count == 10);  // projective line over F_9
  std::set<std::vector<Elem>> found;
  for_each_line(tt.field(), fams[0], [&](std::uint64_t, const Matrix& h) {
    found.insert(column_span(tt.field(), h).data());
    return true;
  });
  std::set<std::vector<Elem>> want;
  for (const auto& b : brute_force_simple_submodules(tt)) want.insert(b.data());
  CHECK(found.size() == 10);
  CHECK(found == want);
}

TEST_CASE("normalized tuples in lexicographic order") {
  std::vector<std::vector<std::uint64_t>> seen;
  for_each_normalized_tuple(3, 3, [&](const std::vector<std::uint64_t>& t) {
    seen.push_back(t);
    return true;
  });
  CHECK(seen.size() == 13);
  CHECK(std::is_sorted(seen.begin(), seen.end()));
  CHECK(seen.front() == std::vector<std::uint64_t>{0, 0, 1});
  CHECK(seen.back() == std::vector<std::uint64_t>{1, 2, 2});
}

TEST_CASE("chop invariants across seeds") {
  std::vector<GModule> corpus;
  corpus.push_back(ad_module(GModule::natural(sl2(5))));
  corpus.push_back(ad_module(GModule::natural(sl2(7))));
  corpus.push_back(tensor_module(GModule::natural(sl2(5)), GModule::natural(sl2(5))));
  corpus.push_back(ad_module(GModule::natural(unipotent(5))));
  corpus.push_back(direct_sum(GModule::natural(nonsplit_torus(5)), GModule::natural(nonsplit_torus(5))));
  for (const auto& m : corpus) {
    std::vector<std::size_t> ref;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      ChopOptions o;
      o.seed = seed;
      auto factors = composition_factors(m, o);
      std::size_t total = 0;
      std::vector<std::size_t> dims;
      for (const auto& f : factors) {
        total += f.dim();
        dims.push_back(f.dim());
        CHECK(is_irreducible(f));
      }
      CHECK(total == m.dim());
      std::sort(dims.begin(), dims.end());
      if (seed == 1) ref = dims;
      CHECK(dims == ref);
      auto fams = irreducible_submodules(m, o);
      CHECK(commutant_dimension(m) >= fams.size());
      for (const auto& fam : fams)
        for_each_line(m.field(), fam, [&](std::uint64_t, const Matrix& h) {
          CHECK(rank(m.field(), h) == fam.simple.dim());
          Matrix w = column_span(m.field(), h);
          CHECK(is_submodule(m, w));
          CHECK(spin(m, w.row_vector(0)) == w);
          return true;
        });
    }
  }
}

TEST_CASE("simple modules with trivial commutant stay simple over a quadratic extension") {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    GModule m = ad0_module(GModule::natural(sl2(p)));
    if (commutant_dimension(m) != 1 || !is_irreducible(m)) continue;
    FieldEmbedding emb(m.field_ptr(), Field::make(p, 2));
    CHECK(is_irreducible(extend_scalars(m, emb)));
  }
  GModule sl = GModule::natural(sl2(5));
  FieldEmbedding emb(sl.field_ptr(), Field::make(5, 2));
  CHECK(satisfies_b2(extend_scalars(sl, emb)));
  // the non-split torus splits over the extension
  GModule t = GModule::natural(nonsplit_torus(5));
  CHECK_FALSE(is_irreducible(extend_scalars(t, FieldEmbedding(t.field_ptr(), Field::make(5, 2)))));
}

TEST_CASE("dual and tensor") {
  GModule v = GModule::natural(sl2(5));
  GModule dd = dual_module(dual_module(v));
  CHECK(dd.action() == v.action());
  CHECK(tensor_module(v, v).dim() == 4);
  CHECK(submodule(v, Matrix::identity(2)).action() == v.action());
}
