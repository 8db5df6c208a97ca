#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "catena/lattice.hpp"
#include "catena/poly_fp.hpp"

namespace catena {

/// F_p <= F_{p^n} with exact arithmetic modulo the canonical irreducible.
/// Elements are indices < p^n encoding little-endian coefficient vectors.
/// Intermediate fields are F_{p^d} for d | n; x denotes the class of X.
struct FieldTower {
  uint32_t p = 0, n = 0;
  FpPoly modulus;  // canonical monic irreducible of degree n
  uint32_t x = 0;  // generator of F_{p^n} over F_p

  static FieldTower make(uint32_t p, uint32_t n);

  uint64_t order() const;
  uint32_t add(uint32_t a, uint32_t b) const;
  uint32_t sub(uint32_t a, uint32_t b) const;
  uint32_t mul(uint32_t a, uint32_t b) const;
  uint32_t pow(uint32_t a, uint64_t e) const;
  uint32_t neg(uint32_t a) const;
  /// Membership in F_{p^d}: fixed by the d-fold Frobenius.
  bool in_subfield(uint32_t a, uint32_t d) const;

  std::string element_name(uint32_t a) const;
};

/// Monic polynomial over F_{p^n}, little-endian tower-element coefficients.
using TowerPoly = std::vector<uint32_t>;

/// Minimal polynomial of x over F_{p^d}: the product of (X - x^(p^(d*i))),
/// i < n/d. Coefficients are verified to lie in F_{p^d}.
TowerPoly minimal_poly(const FieldTower& T, uint32_t d);

bool tower_poly_divides(const FieldTower& T, const TowerPoly& g, const TowerPoly& f);

std::string tower_poly_to_string(const FieldTower& T, const TowerPoly& f);

struct DLatticeReport {
  FiniteLattice divisor_lat;   // divisors of n
  FiniteLattice d_lat;         // minimal polynomials under divisibility
  bool bijection_ok = false;       // d | d'  <=>  f_{d'} | f_d, all pairs
  bool covers_match = false;       // cover pairs correspond, reversed
  bool graded_match = false;       // both graded
  int length = 0;                  // common maximal-chain length
  uint32_t omega = 0;              // expected length
  bool ok() const { return bijection_ok && covers_match && graded_match; }
};

DLatticeReport check_D_lattice(const FieldTower& T);

}  // namespace catena
