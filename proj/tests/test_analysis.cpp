#include <doctest.h>

#include "catena/error.hpp"
#include "catena/ext_lattice.hpp"

using namespace catena;

namespace {

RingExtension prime_extension(FiniteCommRing ring) {
  auto S = std::make_shared<FiniteCommRing>(std::move(ring));
  ElemSet seed(S->n);
  seed.set(S->zero);
  seed.set(S->one);
  return RingExtension::from_subring(S, closure_subring(*S, seed));
}

ElemSet full_set(const FiniteCommRing& R) {
  ElemSet s(R.n);
  for (uint32_t i = 0; i < R.n; ++i) s.set(i);
  return s;
}

}  // namespace

TEST_CASE("the minimal-type trichotomy on the three witnesses") {
  // inert: F2 < F4
  {
    RingExtension ext = prime_extension(ring_gf(2, 2));
    EdgeInfo e = classify_minimal(*ext.S, ext.image(), full_set(*ext.S));
    CHECK(e.type == MinimalType::Inert);
    CHECK(e.crucial == ElemSet::of(4, {0}));
  }
  // decomposed: F2 < F2 x F2
  {
    FiniteCommRing F2 = ring_gf(2, 1);
    RingExtension ext = prime_extension(ring_product({F2, F2}));
    EdgeInfo e = classify_minimal(*ext.S, ext.image(), full_set(*ext.S));
    CHECK(e.type == MinimalType::Decomposed);
    CHECK(e.crucial == ElemSet::of(4, {0}));
  }
  // ramified: F2 < F2[t]/(t^2)
  {
    FiniteCommRing F2 = ring_gf(2, 1);
    RingExtension ext = prime_extension(ring_poly_quotient(F2, {0, 0, 1}));
    EdgeInfo e = classify_minimal(*ext.S, ext.image(), full_set(*ext.S));
    CHECK(e.type == MinimalType::Ramified);
    CHECK(e.crucial == ElemSet::of(4, {0}));
  }
}

TEST_CASE("classify rejects non-minimal steps") {
  FiniteCommRing F2 = ring_gf(2, 1);
  FiniteCommRing F4 = ring_gf(2, 2);
  RingExtension ext = prime_extension(ring_product({F2, F4}));
  try {
    classify_minimal(*ext.S, ext.image(), full_set(*ext.S));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotMinimal);
  }
}

TEST_CASE("t-closure") {
  FiniteCommRing F2 = ring_gf(2, 1);
  FiniteCommRing F4 = ring_gf(2, 2);

  // the named instance: t-closure of F2 in F2xF4 is F2xF2
  {
    RingExtension ext = prime_extension(ring_product({F2, F4}));
    ElemSet expect(8);
    for (uint32_t a = 0; a < 2; ++a)
      for (uint32_t b = 0; b < 2; ++b) expect.set(a * 4 + b);
    CHECK(t_closure(ext).elems == expect);

    ExtensionLattice EL = enumerate_interval(ext);
    CHECK(t_closure_index(EL) == 1);
    CHECK_FALSE(is_infra_integral(EL));
    CHECK_FALSE(is_t_closed(EL));
  }
  // a t-closed extension is its own fixpoint
  {
    RingExtension ext = prime_extension(ring_gf(2, 2));
    CHECK(t_closure(ext).elems == ext.image());
    ExtensionLattice EL = enumerate_interval(ext);
    CHECK(is_t_closed(EL));
    CHECK_FALSE(is_infra_integral(EL));
  }
  // infra-integral extensions close to all of S
  {
    RingExtension ext = prime_extension(ring_product({F2, F2}));
    CHECK(t_closure(ext).elems.count() == 4);
    ExtensionLattice EL = enumerate_interval(ext);
    CHECK(is_infra_integral(EL));
    CHECK_FALSE(is_t_closed(EL));
  }
  // trivial extension: both
  {
    auto F4p = std::make_shared<FiniteCommRing>(F4);
    RingExtension triv = RingExtension::from_subring(F4p, full_set(*F4p));
    ExtensionLattice EL = enumerate_interval(triv);
    CHECK(is_infra_integral(EL));
    CHECK(is_t_closed(EL));
  }
}

TEST_CASE("subintegral chains") {
  FiniteCommRing F2 = ring_gf(2, 1);
  {
    ExtensionLattice EL =
        enumerate_interval(prime_extension(ring_poly_quotient(F2, {0, 0, 1})));
    CHECK(is_subintegral_chainwise(EL));
    CHECK(seminormalization_chainwise(EL) == EL.lattice.top());
  }
  {
    ExtensionLattice EL = enumerate_interval(prime_extension(ring_product({F2, F2})));
    CHECK_FALSE(is_subintegral_chainwise(EL));
    CHECK(seminormalization_chainwise(EL) == EL.lattice.bottom());
  }
}

TEST_CASE("crosswise exchange") {
  FiniteCommRing F2 = ring_gf(2, 1);
  FiniteCommRing F4 = ring_gf(2, 2);
  auto S = std::make_shared<FiniteCommRing>(ring_product({F4, F4}));
  auto pick = [&](bool a_big, bool b_big) {
    ElemSet out(16);
    for (uint32_t a = 0; a < (a_big ? 4u : 2u); ++a)
      for (uint32_t b = 0; b < (b_big ? 4u : 2u); ++b) out.set(a * 4 + b);
    return out;
  };
  ElemSet A = pick(false, false);  // F2 x F2
  ElemSet B = pick(true, false);   // F4 x F2
  ElemSet C = pick(true, true);    // F4 x F4

  CrosswiseReport rep = check_crosswise_exchange(S, A, B, C);
  CHECK(rep.interval_is_four);
  CHECK(rep.types_swap);
  CHECK(rep.crucials_match);
  CHECK(rep.s_prime_set == pick(false, true));

  // a tower with nested crucial traces violates the hypothesis
  auto T = std::make_shared<FiniteCommRing>(ring_poly_quotient(F2, {0, 0, 0, 1}));
  ElemSet lo = closure_subring(*T, ElemSet::of(8, {0, 1}));
  ElemSet mid = closure_subring(*T, ElemSet::of(8, {0, 1, 4}));
  CHECK_THROWS_AS(check_crosswise_exchange(T, lo, mid, full_set(*T)), Error);
}

TEST_CASE("inert followed by non-inert") {
  FiniteCommRing F2 = ring_gf(2, 1);
  FiniteCommRing F4 = ring_gf(2, 2);

  // equal conductors force length > 2: F2 < F4 < F4[t]/(t^2)
  {
    auto S = std::make_shared<FiniteCommRing>(ring_poly_quotient(F4, {0, 0, 1}));
    ElemSet U = closure_subring(*S, ElemSet::of(16, {S->zero, S->one}));
    ElemSet T(16);
    for (uint32_t a = 0; a < 4; ++a) T.set(a);  // constants
    Lemma341Report rep = check_lemma_341(S, U, T, full_set(*S));
    CHECK(rep.conductors_equal);
    CHECK(rep.longest > 2);
    CHECK(rep.ok());
  }
  // distinct conductors give the four-element interval with swapped types
  {
    auto S = std::make_shared<FiniteCommRing>(ring_product({F4, F2, F2}));
    auto pick = [&](bool big, bool diag) {
      ElemSet out(16);
      for (uint32_t a = 0; a < (big ? 4u : 2u); ++a)
        for (uint32_t b = 0; b < 2; ++b)
          for (uint32_t c = 0; c < 2; ++c) {
            if (diag && b != c) continue;
            out.set(a * 4 + b * 2 + c);
          }
      return out;
    };
    ElemSet U = pick(false, true);   // F2 x diag
    ElemSet T = pick(true, true);    // F4 x diag
    ElemSet V = pick(true, false);   // F4 x F2 x F2
    Lemma341Report rep = check_lemma_341(S, U, T, V);
    CHECK_FALSE(rep.conductors_equal);
    CHECK(rep.interval_is_four);
    CHECK(rep.types_swap);
    CHECK(rep.ok());

    // the pattern gate rejects a non-inert first step
    CHECK_THROWS_AS(check_lemma_341(S, U, pick(false, false), V), Error);
  }
}

TEST_CASE("catenarity report on the named chain") {
  FiniteCommRing F2 = ring_gf(2, 1);
  FiniteCommRing F4 = ring_gf(2, 2);
  ExtensionLattice EL = enumerate_interval(prime_extension(ring_product({F2, F4})));
  CatenarityReport rep = analyze_catenarity(EL);
  CHECK(rep.graded);
  CHECK(rep.len == LengthRange{2, 2});
  CHECK(rep.split);
  CHECK(rep.two_catenarian);
  CHECK(rep.t_interval_graded);
  CHECK(rep.thm_3_62_ok);
  CHECK(rep.cor_3_63_ok);
  CHECK(rep.prop_3_411_ok);
  CHECK(rep.prop_3_42_ok);
  CHECK(rep.prop_3_6_ok);
  CHECK_FALSE(rep.unbranched);  // two maximal ideals upstairs

  // local case: F2 < F2[t]/(t^3) is unbranched
  ExtensionLattice loc =
      enumerate_interval(prime_extension(ring_poly_quotient(F2, {0, 0, 0, 1})));
  CatenarityReport lrep = analyze_catenarity(loc);
  CHECK(lrep.unbranched);
  CHECK(lrep.all_elements_local);
  CHECK(lrep.thm_3_5_ok);
}

TEST_CASE("pointwise minimal classification") {
  FiniteCommRing F2 = ring_gf(2, 1);
  FiniteCommRing F4 = ring_gf(2, 2);

  {
    ExtensionLattice EL = enumerate_interval(prime_extension(ring_product({F2, F2})));
    PointwiseReport rep = is_pointwise_minimal(EL);
    CHECK(rep.pointwise_minimal);
    CHECK(rep.conductor_maximal);
    CHECK(rep.case_tag == 1);
  }
  {
    ExtensionLattice EL =
        enumerate_interval(prime_extension(ring_poly_quotient(F2, {0, 0, 1})));
    PointwiseReport rep = is_pointwise_minimal(EL);
    CHECK(rep.pointwise_minimal);
    CHECK(rep.case_tag == 2);
  }
  {
    ExtensionLattice EL = enumerate_interval(prime_extension(ring_gf(2, 2)));
    PointwiseReport rep = is_pointwise_minimal(EL);
    CHECK(rep.pointwise_minimal);
    CHECK(rep.case_tag == 3);
  }
  {
    ExtensionLattice EL = enumerate_interval(prime_extension(ring_product({F2, F4})));
    PointwiseReport rep = is_pointwise_minimal(EL);
    CHECK_FALSE(rep.pointwise_minimal);
  }
}
