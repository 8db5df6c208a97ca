#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "catena/elemset.hpp"
#include "catena/poly_fp.hpp"

namespace catena {

inline constexpr uint32_t kDefaultRingCap = 256;

/// Finite commutative unital ring as exact operation tables over element
/// indices. All constructors verify the ring axioms on every triple and
/// keep a symbolic recipe plus printable element names.
struct FiniteCommRing {
  uint32_t n = 0;
  std::vector<uint16_t> add_tab, mul_tab;  // n*n, row-major
  uint16_t zero = 0, one = 0;
  std::vector<std::string> names;
  std::string recipe;

  uint16_t add(uint32_t a, uint32_t b) const { return add_tab[a * n + b]; }
  uint16_t mul(uint32_t a, uint32_t b) const { return mul_tab[a * n + b]; }
  uint16_t neg(uint32_t a) const;
  uint16_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }
  bool is_unit(uint32_t a) const;
  uint32_t characteristic() const;  // additive order of 1

  /// Throws SpecError when an axiom fails.
  void validate() const;
  /// Non-throwing variant; empty on success.
  std::optional<std::string> check_axioms() const;
};

using RingPtr = std::shared_ptr<const FiniteCommRing>;

FiniteCommRing ring_zmod(uint32_t n, uint32_t cap = kDefaultRingCap);
/// F_{p^deg} with the given monic irreducible (little-endian, length deg+1).
FiniteCommRing ring_gf(uint32_t p, const FpPoly& f, uint32_t cap = kDefaultRingCap);
/// Same, choosing the canonical (lexicographically least) irreducible.
FiniteCommRing ring_gf(uint32_t p, uint32_t deg, uint32_t cap = kDefaultRingCap);
FiniteCommRing ring_product(const std::vector<FiniteCommRing>& factors,
                            uint32_t cap = kDefaultRingCap);
FiniteCommRing ring_quotient(const FiniteCommRing& base,
                             const std::vector<uint32_t>& ideal_gens,
                             uint32_t cap = kDefaultRingCap);
/// base[t]/(f) with f monic over base; coefficients are base indices,
/// little-endian, length deg+1.
FiniteCommRing ring_poly_quotient(const FiniteCommRing& base,
                                  const std::vector<uint32_t>& f,
                                  uint32_t cap = kDefaultRingCap);

/// Finite module over a ring: abelian group table plus scalar action.
struct ModuleSpec {
  uint32_t size = 0;
  std::vector<uint16_t> add_tab;     // size*size
  std::vector<uint16_t> action_tab;  // ring.n * size, (r, m) -> r.m
  std::vector<std::string> names;
  std::string desc;
};

ModuleSpec module_free(const FiniteCommRing& R, uint32_t rank);
ModuleSpec module_quotient(const FiniteCommRing& R,
                           const std::vector<uint32_t>& ideal_gens);

/// Ring on R x M with (r,m)(s,n) = (rs, rn+sm); unit (1,0).
FiniteCommRing idealization(const FiniteCommRing& R, const ModuleSpec& M,
                            uint32_t cap = kDefaultRingCap);

/// In a product ring built by ring_product, the index of a component tuple.
uint32_t product_index(const std::vector<FiniteCommRing>& factors,
                       const std::vector<uint32_t>& coords);

/// Ideal generated by a set of elements.
ElemSet ideal_generated(const FiniteCommRing& R, const std::vector<uint32_t>& gens);
bool is_ideal(const FiniteCommRing& R, const ElemSet& I);
/// Every ideal, canonically sorted.
std::vector<ElemSet> all_ideals(const FiniteCommRing& R);

std::vector<uint32_t> idempotents(const FiniteCommRing& R);
std::vector<uint32_t> primitive_idempotents(const FiniteCommRing& R);

/// Maximal ideals via the decomposition into local factors. For finite
/// commutative rings these are exactly the primes.
std::vector<ElemSet> maximal_ideals(const FiniteCommRing& R);
std::vector<ElemSet> spec_ideals(const FiniteCommRing& R);

struct QuotientRing {
  FiniteCommRing ring;
  std::vector<uint16_t> proj;  // base index -> quotient index
  std::vector<uint16_t> rep;   // quotient index -> representative
};
QuotientRing quotient_ring(const FiniteCommRing& R, const ElemSet& I);

struct FactorRing {
  FiniteCommRing ring;  // R*e with identity e
  std::vector<uint16_t> to_parent;
  std::vector<uint16_t> from_parent;  // x -> index of x*e
};
FactorRing factor_ring(const FiniteCommRing& R, uint32_t idempotent);

/// Quotient by a maximal ideal, tagged with (p, degree).
struct ResidueField {
  FiniteCommRing field;
  uint32_t p = 0;
  uint32_t deg = 0;
};
ResidueField residue_field(const FiniteCommRing& R, const ElemSet& M);

bool is_field(const FiniteCommRing& R);
bool is_local(const FiniteCommRing& R);

/// Brute-force ring isomorphism test for small orders.
bool rings_isomorphic(const FiniteCommRing& A, const FiniteCommRing& B);

}  // namespace catena
