#include <doctest.h>

#include "catena/error.hpp"
#include "catena/ring.hpp"

using namespace catena;

TEST_CASE("Z/n construction") {
  FiniteCommRing R = ring_zmod(4);
  CHECK(R.n == 4);
  CHECK(R.characteristic() == 4);
  CHECK(R.add(3, 2) == 1);
  CHECK(R.mul(2, 2) == 0);
  CHECK_FALSE(R.is_unit(2));
  CHECK(R.is_unit(3));

  auto maxes = maximal_ideals(R);
  REQUIRE(maxes.size() == 1);
  CHECK(maxes[0] == ElemSet::of(4, {0, 2}));

  CHECK_THROWS_AS(ring_zmod(1), Error);
  CHECK_THROWS_AS(ring_zmod(300, 256), Error);
}

TEST_CASE("finite fields") {
  FiniteCommRing F4 = ring_gf(2, FpPoly{1, 1, 1});
  CHECK(F4.n == 4);
  CHECK(is_field(F4));
  CHECK(F4.names[2] == "x");
  CHECK(F4.mul(2, 2) == 3);  // x^2 = x + 1

  // the canonical modulus for degree 2 is x^2+x+1
  FiniteCommRing F4c = ring_gf(2, 2);
  CHECK(F4c.mul_tab == F4.mul_tab);

  try {
    ring_gf(2, FpPoly{1, 0, 1});  // (x+1)^2
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotIrreducible);
  }
  CHECK_THROWS_AS(ring_gf(4, 2), Error);

  auto maxes = maximal_ideals(F4);
  REQUIRE(maxes.size() == 1);
  CHECK(maxes[0].count() == 1);

  ResidueField k = residue_field(F4, maxes[0]);
  CHECK(k.p == 2);
  CHECK(k.deg == 2);
}

TEST_CASE("products split into local factors") {
  FiniteCommRing F2 = ring_gf(2, 1);
  FiniteCommRing F4 = ring_gf(2, 2);
  FiniteCommRing P = ring_product({F2, F4});
  CHECK(P.n == 8);
  CHECK(idempotents(P).size() == 4);
  CHECK(primitive_idempotents(P).size() == 2);
  CHECK(maximal_ideals(P).size() == 2);
  CHECK_FALSE(is_local(P));
  CHECK(is_local(ring_zmod(4)));
}

TEST_CASE("quotients") {
  FiniteCommRing Z8 = ring_zmod(8);
  FiniteCommRing Q = ring_quotient(Z8, {4});
  CHECK(Q.n == 4);
  CHECK(rings_isomorphic(Q, ring_zmod(4)));

  ElemSet I = ideal_generated(Z8, {2});
  CHECK(I == ElemSet::of(8, {0, 2, 4, 6}));
  CHECK(is_ideal(Z8, I));
  CHECK_FALSE(is_ideal(Z8, ElemSet::of(8, {0, 3})));
  CHECK(all_ideals(Z8).size() == 4);  // (0), (4), (2), (1)
}

TEST_CASE("polynomial quotients") {
  FiniteCommRing F2 = ring_gf(2, 1);
  FiniteCommRing D = ring_poly_quotient(F2, {0, 0, 1});  // F2[t]/(t^2)
  CHECK(D.n == 4);
  CHECK(is_local(D));
  CHECK_FALSE(is_field(D));
  // t^2 = 0
  CHECK(D.mul(2, 2) == D.zero);
  CHECK(maximal_ideals(D)[0] == ElemSet::of(4, {0, 2}));

  // monicity is required
  CHECK_THROWS_AS(ring_poly_quotient(F2, {1, 0}), Error);
}

TEST_CASE("idealization") {
  FiniteCommRing F2 = ring_gf(2, 1);
  FiniteCommRing A = idealization(F2, module_free(F2, 1));
  CHECK(A.n == 4);
  CHECK(rings_isomorphic(A, ring_poly_quotient(F2, {0, 0, 1})));

  // trivial module gives the ring back
  FiniteCommRing B = idealization(F2, module_free(F2, 0));
  CHECK(rings_isomorphic(B, F2));

  FiniteCommRing C = idealization(F2, module_free(F2, 2));
  CHECK(C.n == 8);
  CHECK(is_local(C));

  FiniteCommRing Z4 = ring_zmod(4);
  FiniteCommRing D = idealization(Z4, module_quotient(Z4, {2}));
  CHECK(D.n == 8);
  CHECK(is_local(D));

  ModuleSpec bad = module_free(F2, 1);
  bad.action_tab[1 * bad.size + 1] = 0;  // 1*1 = 0 breaks the identity law
  CHECK_THROWS_AS(idealization(F2, bad), Error);
}

TEST_CASE("axiom checking catches corrupted tables") {
  FiniteCommRing R = ring_zmod(4);
  CHECK_FALSE(R.check_axioms().has_value());
  R.mul_tab[1 * R.n + 1] = 0;
  CHECK(R.check_axioms().has_value());
}

TEST_CASE("ring isomorphism is structural") {
  CHECK(rings_isomorphic(ring_zmod(4), ring_zmod(4)));
  CHECK_FALSE(rings_isomorphic(ring_zmod(4), ring_gf(2, 2)));
  FiniteCommRing F2 = ring_gf(2, 1);
  CHECK_FALSE(
      rings_isomorphic(ring_product({F2, F2}), ring_poly_quotient(F2, {0, 0, 1})));
}

TEST_CASE("factor rings by idempotents") {
  FiniteCommRing F2 = ring_gf(2, 1);
  FiniteCommRing F4 = ring_gf(2, 2);
  FiniteCommRing P = ring_product({F2, F4});
  // (0,1) is the idempotent selecting the second factor
  uint32_t e = 0;
  for (uint32_t x = 0; x < P.n; ++x)
    if (P.mul(x, x) == x && x != P.zero && x != P.one && P.add(x, x) == P.zero) {
      FactorRing F = factor_ring(P, x);
      if (F.ring.n == 4) e = x;
    }
  FactorRing F = factor_ring(P, e);
  CHECK(F.ring.n == 4);
  CHECK(is_field(F.ring));
}
