#include <doctest.h>

#include <map>

#include "catena/error.hpp"
#include "catena/group.hpp"

using namespace catena;

TEST_CASE("group construction basics") {
  FiniteGroup triv = cyclic_group(1);
  CHECK(triv.order() == 1);
  CHECK(subgroup_lattice(triv).lattice.size() == 1);

  FiniteGroup z6 = cyclic_group(6);
  CHECK(z6.order() == 6);
  CHECK(z6.is_abelian());

  FiniteGroup s3 = dihedral_group(3);
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.is_abelian());

  FiniteGroup q8 = dicyclic_group(2);
  CHECK(q8.order() == 8);
  int involutions = 0;
  for (uint32_t i = 0; i < q8.order(); ++i)
    if (q8.element_order(i) == 2) ++involutions;
  CHECK(involutions == 1);  // the quaternion signature

  CHECK(special_linear_2_3().order() == 24);
  CHECK(semidirect_cyclic(7, 3, 2).order() == 21);
  CHECK(direct_product(alternating_4(), cyclic_group(2)).order() == 48 / 2);

  CHECK_THROWS_AS(FiniteGroup::from_generators(4, {{1, 1, 2, 3}}), Error);
  CHECK_THROWS_AS(cyclic_group(100), Error);  // past the default bound
}

TEST_CASE("subgroup lattices of the named groups") {
  CHECK(subgroups(cyclic_group(12)).size() == 6);
  CHECK(subgroups(dihedral_group(3)).size() == 6);
  CHECK(subgroups(symmetric_4()).size() == 30);
  CHECK(subgroups(alternating_4()).size() == 10);
  CHECK(subgroups(special_linear_2_3()).size() == 15);

  // Z12's subgroup lattice is the divisor lattice of 12
  SubgroupLattice SL = subgroup_lattice(cyclic_group(12));
  CHECK(SL.lattice.size() == 6);
  CHECK(is_graded(SL.lattice).graded);
  CHECK(length_range(SL.lattice, SL.lattice.bottom(), SL.lattice.top()) ==
        LengthRange{3, 3});
  CHECK(is_distributive(SL.lattice));
}

TEST_CASE("normality and cyclic quotients") {
  FiniteGroup s3 = dihedral_group(3);
  auto subs = subgroups(s3);
  int normal_count = 0;
  for (const auto& H : subs)
    if (is_normal(s3, H)) ++normal_count;
  CHECK(normal_count == 3);  // 1, A3, S3

  // S3 / A3 is cyclic
  ElemSet a3(6);
  for (const auto& H : subs)
    if (H.count() == 3) a3 = H;
  ElemSet whole(6), triv(6);
  for (uint32_t i = 0; i < 6; ++i) whole.set(i);
  triv.set(0);
  CHECK(quotient_is_cyclic(s3, whole, a3));
  CHECK(quotient_is_cyclic(s3, a3, triv));
}

TEST_CASE("supersolvable groups") {
  CHECK(is_supersolvable_group(cyclic_group(24)));
  CHECK(is_supersolvable_group(abelian_group({2, 2, 2})));
  CHECK(is_supersolvable_group(dihedral_group(3)));
  CHECK(is_supersolvable_group(dihedral_group(4)));
  CHECK(is_supersolvable_group(dicyclic_group(2)));
  CHECK(is_supersolvable_group(semidirect_cyclic(5, 4, 2)));
  CHECK_FALSE(is_supersolvable_group(alternating_4()));
  CHECK_FALSE(is_supersolvable_group(symmetric_4()));
  CHECK_FALSE(is_supersolvable_group(special_linear_2_3()));
  CHECK_FALSE(
      is_supersolvable_group(direct_product(alternating_4(), cyclic_group(2))));
}

TEST_CASE("supersolvability matches gradedness of the subgroup lattice") {
  // the biconditional, spot-checked on the three named cases
  {
    Prop3814Report rep = check_prop_3814(symmetric_4());
    CHECK_FALSE(rep.group_supersolvable);
    CHECK_FALSE(rep.lattice_graded);
    CHECK(rep.iwasawa_ok);
    REQUIRE(rep.lattice_supersolvable.has_value());
    CHECK_FALSE(*rep.lattice_supersolvable);
    CHECK(rep.lattice_equiv_ok);
  }
  {
    Prop3814Report rep = check_prop_3814(dihedral_group(4));
    CHECK(rep.group_supersolvable);
    CHECK(rep.lattice_graded);
    CHECK(rep.iwasawa_ok);
  }
  {
    Prop3814Report rep = check_prop_3814(cyclic_group(12));
    CHECK(rep.group_supersolvable);
    CHECK(rep.lattice_graded);
    CHECK(rep.lattice_length == 3);
  }
}

TEST_CASE("the catalog covers every order up to 24") {
  auto catalog = group_catalog();
  std::map<uint32_t, int> by_order;
  for (const auto& [name, G] : catalog) ++by_order[G.order()];
  for (uint32_t n = 1; n <= 24; ++n) CHECK(by_order[n] >= 1);
  // all five groups of order 8 and order 12 are present
  CHECK(by_order[8] == 5);
  CHECK(by_order[12] == 5);
  CHECK(by_order[16] >= 10);
  CHECK(by_order[24] >= 12);
}

TEST_CASE("V4 subgroup lattice is the three-atom diamond") {
  SubgroupLattice SL = subgroup_lattice(abelian_group({2, 2}));
  CHECK(SL.lattice.size() == 5);
  CHECK(atoms(SL.lattice, SL.lattice.bottom(), SL.lattice.top()).size() == 3);
  CHECK_FALSE(is_distributive(SL.lattice));
  CHECK(is_supersolvable(SL.lattice));
}
