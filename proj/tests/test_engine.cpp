#include <doctest.h>

#include "bigness/engine.hpp"
#include "bigness/error.hpp"
#include "bigness/reps.hpp"
#include "bigness/verify.hpp"
#include "fixtures.hpp"

using namespace bigness;
using fixtures::mat2;

namespace {

VerifierReport verify(const MatrixGroup& g, const BignessCertificate& c) {
  return verify_certificate(g.field_ptr(), g.dimension(), g.generators(), c);
}

MatrixGroup standard_sl2(std::uint32_t p) {
  auto rep = standard_sln(2, p);
  rep.group.enumerate();
  return rep.group;
}

}  // namespace

TEST_CASE("trivial group in GL_1 is big") {
  const auto g = MatrixGroup::close(Field::make(5, 1), 1, {});
  const auto c = check_bigness(g);
  CHECK(c.big);
  CHECK(c.b3.h1 == 0);
  REQUIRE(c.b4.witnesses.size() == 1);
  CHECK(c.b4.witnesses[0].alpha == 1);
  CHECK(verify(g, c).ok);
}

TEST_CASE("SL_2 standard representation") {
  for (std::uint32_t p : {7u, 11u, 13u}) {
    const auto g = standard_sl2(p);
    const auto c = check_bigness(g);
    CAPTURE(p);
    CHECK(c.big);
    CHECK(c.failing().empty());
    CHECK(c.b2.constituent_dims == std::vector<std::size_t>{2});
    CHECK(c.b4.family_dims.size() == 2);
    CHECK(c.b3.h1 <= c.b3.sylow_bound);
    const auto v = verify(g, c);
    CHECK(v.ok);
    CHECK(v.h1_checked);
  }
}

TEST_CASE("SL_2(F_5) has non-vanishing H^1 on ad0") {
  const auto g = standard_sl2(5);
  const auto c = check_bigness(g);
  CHECK(c.b1.holds);
  CHECK(c.b2.holds);
  CHECK(c.b3.h1 == 1);
  CHECK(c.b4.holds);
  CHECK(c.failing() == "B3");
  REQUIRE(!c.b4.witnesses.empty());
  CHECK(c.b4.witnesses[0].g == mat2(2, 0, 0, 3));
  CHECK(c.b4.witnesses[0].alpha == 2);
  const auto v = verify(g, c);
  CHECK(v.ok);
  CHECK(v.h1 == 1);
}

TEST_CASE("negative examples") {
  const auto u = check_bigness(unipotent_group(5));
  CHECK(!u.big);
  CHECK(!u.b1.holds);
  CHECK(!u.b2.holds);
  CHECK(u.b1.abelianization_order == 5);
  // ad0 is a single Jordan block of size 3 for Z/5
  CHECK(u.b3.h1 == 1);
  CHECK(!u.b4.holds);
  const auto t = check_bigness(nonsplit_torus(5));
  CHECK(t.b1.holds);
  CHECK(!t.b2.holds);
  CHECK(t.b2.commutant_dim == 2);
  CHECK(t.b3.holds);
  // eigenvalues of non-scalar elements lie outside F_5
  CHECK(!t.b4.holds);
  CHECK(t.failing() == "B2,B4");
  CHECK(verify(nonsplit_torus(5), t).ok);
}

TEST_CASE("certificates are deterministic") {
  const auto g = standard_sl2(7);
  const auto a = check_bigness(g);
  const auto b = check_bigness(g);
  CHECK(a.failing() == b.failing());
  REQUIRE(a.b4.witnesses.size() == b.b4.witnesses.size());
  for (std::size_t i = 0; i < a.b4.witnesses.size(); ++i) {
    CHECK(a.b4.witnesses[i].element == b.b4.witnesses[i].element);
    CHECK(a.b4.witnesses[i].f == b.b4.witnesses[i].f);
  }
}

TEST_CASE("verifier rejects tampered certificates") {
  const auto g = standard_sl2(7);
  auto c = check_bigness(g);
  c.b4.witnesses[0].alpha = g.field().add(c.b4.witnesses[0].alpha, 1);
  CHECK(!verify(g, c).ok);
  c = check_bigness(g);
  c.b3.h1 = 1;
  CHECK(!verify(g, c).ok);
  c = check_bigness(g);
  c.b4.holds = false;
  CHECK(!verify(g, c).ok);
  c = check_bigness(g);
  c.b4.witnesses[0].f = Matrix(2, 2);
  CHECK(!verify(g, c).ok);
}

TEST_CASE("B4 agrees with brute force on subgroups of GL_2(F_3)") {
  const auto corpus = fixtures::gl2_small_subgroups(3);
  CHECK(corpus.size() > 10);
  for (const auto& g : corpus) {
    const B4Section s = b4_search(g);
    CHECK(s.holds == fixtures::b4_brute_force(g));
    // the rank oracle inside the verifier agrees as well
    BignessCertificate c = check_bigness(g);
    CHECK(verify(g, c).b4 == s.holds);
  }
}

TEST_CASE("scalar extension does not change the verdict") {
  for (auto g : {standard_sl2(7), unipotent_group(5), nonsplit_torus(5)}) {
    const auto r = check_scalar_extension_equivalence(g);
    CHECK(r.agrees);
  }
  // GL_2(F_5) already contains the scalars
  auto gl = with_scalars(standard_sl2(5));
  CHECK(with_scalars(gl).generators().size() == gl.generators().size());
}

TEST_CASE("normal subgroup monotonicity") {
  const auto h = standard_sl2(5);
  auto F = h.field_ptr();
  auto gens = h.generators();
  gens.push_back(mat2(2, 0, 0, 1));
  const auto g = MatrixGroup::close(F, 2, gens);
  const auto r = check_normal_subgroup_monotonicity(h, g);
  CHECK(r.holds);
  CHECK(r.index_prime_to_ell);
  CHECK(check_normal_subgroup_monotonicity(h, h).holds);
  const auto trivial = MatrixGroup::close(F, 2, {});
  const auto v = check_normal_subgroup_monotonicity(trivial, g);
  CHECK(!v.h_b234);
  CHECK(v.holds);
  CHECK_THROWS_AS(check_normal_subgroup_monotonicity(unipotent_group(5), h), Error);
}

TEST_CASE("base change preserves bigness") {
  const auto r = check_base_change(standard_sl2(7), 2);
  CHECK(r.small_big);
  CHECK(r.evaluated_large);
  CHECK(r.large_big);
  CHECK(r.holds);
  const auto n = check_base_change(unipotent_group(5), 2);
  CHECK(!n.small_big);
  CHECK(!n.evaluated_large);
  CHECK(n.holds);
  CHECK(check_base_change(standard_sl2(7), 1).large_big);
}

TEST_CASE("sym-power images") {
  for (std::uint32_t m : {2u, 3u, 4u}) {
    auto rep = sym_power_sl2(m, 11);
    const auto c = check_bigness(rep.group);
    CAPTURE(m);
    CHECK(c.b1.holds);
    CHECK(c.b2.holds);
    CHECK(c.b3.h1 <= c.b3.sylow_bound);
  }
  auto bad = sym_power_sl2(5, 5);
  const auto c = check_bigness(bad.group);
  CHECK(!c.b2.holds);
  CHECK(c.nonstandard_regime == false);
  CHECK(check_bigness(standard_sl2(3)).dimension == 2);
  CHECK(check_bigness(MatrixGroup::close(Field::make(2, 1), 2, {mat2(1, 1, 0, 1), mat2(1, 0, 1, 1)})).nonstandard_regime);
}
