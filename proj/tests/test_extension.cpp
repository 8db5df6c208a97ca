#include <doctest.h>

#include "catena/error.hpp"
#include "catena/ext_lattice.hpp"
#include "catena/extension.hpp"

using namespace catena;

namespace {

RingExtension prime_extension(FiniteCommRing ring) {
  auto S = std::make_shared<FiniteCommRing>(std::move(ring));
  ElemSet seed(S->n);
  seed.set(S->zero);
  seed.set(S->one);
  return RingExtension::from_subring(S, closure_subring(*S, seed));
}

}  // namespace

TEST_CASE("from_subring validates") {
  auto F4 = std::make_shared<FiniteCommRing>(ring_gf(2, 2));
  CHECK_THROWS_AS(RingExtension::from_subring(F4, ElemSet::of(4, {0, 2})), Error);
  RingExtension ok = RingExtension::from_subring(F4, ElemSet::of(4, {0, 1}));
  CHECK(ok.R->n == 2);
  CHECK(ok.image() == ElemSet::of(4, {0, 1}));
}

TEST_CASE("subalgebra generation") {
  RingExtension ext = prime_extension(ring_gf(2, 2));
  // empty set gives the image of R
  CHECK(subalgebra_generated(ext, ElemSet(4)).elems == ext.image());
  // the primitive element generates everything
  ElemSet x(4);
  x.set(2);
  CHECK(subalgebra_generated(ext, x).elems.count() == 4);
}

TEST_CASE("interval enumeration on small fields") {
  RingExtension f4 = prime_extension(ring_gf(2, 2));
  CHECK(enumerate_subrings(f4).size() == 2);

  FiniteCommRing F2 = ring_gf(2, 1);
  RingExtension sq = prime_extension(ring_product({F2, F2}));
  CHECK(enumerate_subrings(sq).size() == 2);

  // F2 < F4 < F16 is the full subring chain of F16
  RingExtension f16 = prime_extension(ring_gf(2, 4));
  auto subs = enumerate_subrings(f16);
  CHECK(subs.size() == 3);
  CHECK(subs[0].count() == 2);
  CHECK(subs[1].count() == 4);
  CHECK(subs[2].count() == 16);
}

TEST_CASE("the three-element chain of F2 in F2xF4") {
  FiniteCommRing F2 = ring_gf(2, 1);
  FiniteCommRing F4 = ring_gf(2, 2);
  RingExtension ext = prime_extension(ring_product({F2, F4}));
  ExtensionLattice EL = enumerate_interval(ext);
  REQUIRE(EL.lattice.size() == 3);
  CHECK(EL.lattice.covers().size() == 2);

  // the middle ring is the pairs with second coordinate in the prime field
  ElemSet middle(8);
  for (uint32_t a = 0; a < 2; ++a)
    for (uint32_t b = 0; b < 2; ++b) middle.set(a * 4 + b);
  CHECK(EL.subrings[1] == middle);
}

TEST_CASE("joins are generated subalgebras and meets are intersections") {
  FiniteCommRing F2 = ring_gf(2, 1);
  RingExtension ext = prime_extension(ring_product({F2, F2, F2}));
  ExtensionLattice EL = enumerate_interval(ext);
  CHECK(EL.lattice.size() == 5);  // diamond with three atoms
  for (int a = 0; a < EL.lattice.size(); ++a)
    for (int b = 0; b < EL.lattice.size(); ++b) {
      ElemSet u = EL.subrings[a] | EL.subrings[b];
      CHECK(EL.index_of(closure_subring(*ext.S, u)) == EL.lattice.join(a, b));
      CHECK(EL.index_of(EL.subrings[a] & EL.subrings[b]) == EL.lattice.meet(a, b));
    }
}

TEST_CASE("conductors") {
  RingExtension f4 = prime_extension(ring_gf(2, 2));
  CHECK(conductor(f4) == ElemSet::of(4, {0}));

  FiniteCommRing F2 = ring_gf(2, 1);
  FiniteCommRing F4 = ring_gf(2, 2);
  auto P = std::make_shared<FiniteCommRing>(ring_product({F2, F4}));
  // T = F2 x F2, V = F2 x F4: the conductor is F2 x 0
  ElemSet T(8), V(8), expect(8);
  for (uint32_t a = 0; a < 2; ++a) {
    for (uint32_t b = 0; b < 2; ++b) T.set(a * 4 + b);
    for (uint32_t b = 0; b < 4; ++b) V.set(a * 4 + b);
    expect.set(a * 4);
  }
  CHECK(conductor(*P, T, V) == expect);
  // (R : R) = R
  CHECK(conductor(*P, V, V) == V);
}

TEST_CASE("localization at maximal ideals") {
  FiniteCommRing F2 = ring_gf(2, 1);
  FiniteCommRing F4 = ring_gf(2, 2);

  // R local: localization is the extension itself
  RingExtension ext = prime_extension(ring_product({F2, F4}));
  auto maxes = maximal_ideals(*ext.R);
  REQUIRE(maxes.size() == 1);
  LocalizedExtension loc = localize_at(ext, maxes[0]);
  CHECK(loc.ext.R->n == ext.R->n);
  CHECK(loc.ext.S->n == ext.S->n);

  // R = F4 x F2 < S = F4 x F4: proper only at the second coordinate
  auto S = std::make_shared<FiniteCommRing>(ring_product({F4, F4}));
  ElemSet sub(16);
  for (uint32_t a = 0; a < 4; ++a)
    for (uint32_t b = 0; b < 2; ++b) sub.set(a * 4 + b);
  RingExtension mixed = RingExtension::from_subring(S, sub);
  auto mm = maximal_ideals(*mixed.R);
  REQUIRE(mm.size() == 2);
  auto supp = support(mixed);
  REQUIRE(supp.size() == 1);
  LocalizedExtension at_supp = localize_at(mixed, supp[0]);
  CHECK(at_supp.ext.R->n == 2);
  CHECK(at_supp.ext.S->n == 4);
  // the other maximal ideal localizes to a trivial extension
  for (const auto& M : mm)
    if (!(M == supp[0])) {
      LocalizedExtension triv = localize_at(mixed, M);
      CHECK(triv.ext.R->n == triv.ext.S->n);
    }

  CHECK_THROWS_AS(localize_at(mixed, ElemSet::of(8, {0})), Error);
}

TEST_CASE("support") {
  RingExtension f4 = prime_extension(ring_gf(2, 2));
  CHECK(support(f4).size() == 1);

  auto F4 = std::make_shared<FiniteCommRing>(ring_gf(2, 2));
  RingExtension trivial = RingExtension::from_subring(
      F4, closure_subring(*F4, ElemSet::of(4, {0, 1, 2})));
  CHECK(support(trivial).empty());
}

TEST_CASE("residue extensions") {
  RingExtension f4 = prime_extension(ring_gf(2, 2));
  auto Q = maximal_ideals(*f4.S);
  ResidueExtension r = residue_extension(f4, Q[0]);
  CHECK(r.lower.p == 2);
  CHECK(r.lower.deg == 1);
  CHECK(r.upper.deg == 2);
  CHECK(r.degree == 2);

  FiniteCommRing F2 = ring_gf(2, 1);
  RingExtension sq = prime_extension(ring_product({F2, F2}));
  for (const auto& q : maximal_ideals(*sq.S))
    CHECK(residue_extension(sq, q).degree == 1);

  RingExtension dual = prime_extension(ring_poly_quotient(F2, {0, 0, 1}));
  for (const auto& q : maximal_ideals(*dual.S))
    CHECK(residue_extension(dual, q).degree == 1);
}

TEST_CASE("quotient extensions") {
  FiniteCommRing F2 = ring_gf(2, 1);
  RingExtension dual = prime_extension(ring_poly_quotient(F2, {0, 0, 1}));

  // J = 0 reproduces the extension
  QuotientExtension q0 = quotient_extension(dual, ElemSet::of(4, {0}));
  CHECK(q0.ext.R->n == dual.R->n);
  CHECK(q0.ext.S->n == dual.S->n);

  CHECK_THROWS_AS(quotient_extension(dual, ElemSet::of(4, {0, 1})), Error);

  // a shared ideal inside F2[t]/(t^3): I = (t^2) lies in F2[t^2]
  auto S = std::make_shared<FiniteCommRing>(ring_poly_quotient(F2, {0, 0, 0, 1}));
  ElemSet sub = closure_subring(*S, ElemSet::of(8, {S->zero, S->one, 4}));  // t^2
  RingExtension ext = RingExtension::from_subring(S, sub);
  ElemSet I = ideal_generated(*S, {4});
  CHECK(I.subset_of(sub));
  QuotientExtension q = quotient_extension(ext, I);
  CHECK(q.ext.S->n == 4);
  CHECK(q.ext.R->n == 2);
  // the bijection preserves the two-element lattice
  CHECK(enumerate_subrings(ext).size() == enumerate_subrings(q.ext).size());
}

TEST_CASE("enumeration cap") {
  RingExtension f4 = prime_extension(ring_gf(2, 2));
  CHECK_THROWS_AS(enumerate_subrings(f4, 2), Error);
}
