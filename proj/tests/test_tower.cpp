#include <doctest.h>

#include "catena/error.hpp"
#include "catena/field_tower.hpp"
#include "catena/math_util.hpp"

using namespace catena;

TEST_CASE("tower construction") {
  FieldTower T = FieldTower::make(2, 2);
  CHECK(T.order() == 4);
  CHECK(T.modulus == FpPoly{1, 1, 1});  // x^2+x+1 is the least irreducible
  CHECK(T.mul(T.x, T.x) == T.add(T.x, 1));

  CHECK_THROWS_AS(FieldTower::make(4, 2), Error);
  CHECK_THROWS_AS(FieldTower::make(2, 17), Error);
}

TEST_CASE("minimal polynomials over the intermediate fields") {
  // d = n gives X - x
  FieldTower T2 = FieldTower::make(2, 2);
  CHECK(minimal_poly(T2, 2) == TowerPoly{T2.x, 1});

  // over the prime field the minimal polynomial is the modulus itself
  TowerPoly f1 = minimal_poly(T2, 1);
  REQUIRE(f1.size() == 3);
  CHECK(f1 == TowerPoly{1, 1, 1});

  // degree-2 coefficients over F4 inside F16
  FieldTower T4 = FieldTower::make(2, 4);
  TowerPoly f2 = minimal_poly(T4, 2);
  REQUIRE(f2.size() == 3);
  CHECK(f2.back() == 1);
  for (uint32_t c : f2) CHECK(T4.in_subfield(c, 2));
  // some coefficient must lie outside the prime field
  bool outside = false;
  for (uint32_t c : f2)
    if (!T4.in_subfield(c, 1)) outside = true;
  CHECK(outside);

  // the degree identity: deg f_d * d = n for every divisor
  for (uint32_t d : divisors_sorted(12)) {
    FieldTower T = FieldTower::make(2, 12);
    CHECK((minimal_poly(T, d).size() - 1) * d == 12);
  }

  CHECK_THROWS_AS(minimal_poly(T4, 3), Error);
}

TEST_CASE("divisibility reverses the subfield order") {
  FieldTower T = FieldTower::make(2, 12);
  auto divs = divisors_sorted(12);
  std::vector<TowerPoly> polys;
  for (uint32_t d : divs) polys.push_back(minimal_poly(T, d));
  for (std::size_t i = 0; i < divs.size(); ++i)
    for (std::size_t j = 0; j < divs.size(); ++j) {
      bool field_incl = divs[j] % divs[i] == 0;
      CHECK(field_incl == tower_poly_divides(T, polys[j], polys[i]));
    }
}

TEST_CASE("minimal-polynomial lattice reports") {
  {
    DLatticeReport rep = check_D_lattice(FieldTower::make(2, 12));
    CHECK(rep.ok());
    CHECK(rep.d_lat.size() == 6);
    CHECK(rep.length == 3);
    CHECK(rep.omega == 3);
  }
  {
    // prime degree: a single minimal step
    DLatticeReport rep = check_D_lattice(FieldTower::make(2, 5));
    CHECK(rep.ok());
    CHECK(rep.d_lat.size() == 2);
    CHECK(rep.length == 1);
  }
  {
    // two prime factors: length 2
    DLatticeReport rep = check_D_lattice(FieldTower::make(3, 4));
    CHECK(rep.ok());
    CHECK(rep.length == 2);
  }
  {
    DLatticeReport rep = check_D_lattice(FieldTower::make(2, 6));
    CHECK(rep.ok());
    CHECK(rep.length == 2);
  }
}

TEST_CASE("tower arithmetic is a field") {
  FieldTower T = FieldTower::make(3, 2);
  for (uint32_t a = 1; a < T.order(); ++a) {
    // Fermat: a^(q-1) = 1
    CHECK(T.pow(a, T.order() - 1) == 1);
  }
  CHECK(T.sub(T.add(5, 7), 7) == 5);
}
