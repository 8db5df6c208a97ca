#pragma once

#include <cstdint>
#include <vector>

#include "catena/elemset.hpp"
#include "catena/ring.hpp"

namespace catena {

/// A pair R <= S with an explicit injective unital embedding, given as the
/// image index of every R element. Extensions of finite rings are always
/// integral and module-finite.
struct RingExtension {
  RingPtr R, S;
  std::vector<uint16_t> embed;

  /// Validates that embed is an injective unital ring homomorphism.
  static RingExtension make(RingPtr R, RingPtr S, std::vector<uint16_t> embed);

  /// R is materialized as the induced ring on a subset of S.
  static RingExtension from_subring(RingPtr S, const ElemSet& subset);

  ElemSet image() const;
  bool is_trivial() const { return R->n == S->n; }
};

/// Element subset of S closed under + and * and containing the image of R.
struct Subring {
  ElemSet elems;
};

struct IdealData {
  ElemSet elems;
};

/// Closure of a subset of S under + and * (the subset must contain 1).
ElemSet closure_subring(const FiniteCommRing& S, ElemSet start);

bool is_subring(const FiniteCommRing& S, const ElemSet& T);

/// Smallest subring containing embed(R) and the given subset.
Subring subalgebra_generated(const RingExtension& ext, const ElemSet& subset);

/// Every T with image(R) <= T <= S, canonically sorted by (size, indices).
/// Frontier search over one-element enlargements; throws TooLarge past cap.
std::vector<ElemSet> enumerate_subrings(const RingExtension& ext,
                                        uint32_t cap = kDefaultRingCap);

/// (T : V) = {x in V : xV <= T}, the largest common ideal, for T <= V <= S.
ElemSet conductor(const FiniteCommRing& S, const ElemSet& T, const ElemSet& V);
ElemSet conductor(const RingExtension& ext);

struct InducedRing {
  FiniteCommRing ring;
  std::vector<uint16_t> to_ambient;
  std::vector<int32_t> from_ambient;  // -1 when absent
};
InducedRing induce_ring(const FiniteCommRing& S, const ElemSet& subset);

/// Extension lower <= upper between two nested subrings of an ambient ring.
RingExtension sub_extension(RingPtr ambient, const ElemSet& lower,
                            const ElemSet& upper);

struct LocalizedExtension {
  RingExtension ext;
  std::vector<uint16_t> from_R;  // R index -> R_M index
  std::vector<uint16_t> from_S;  // S index -> S_M index
};

/// Localization at a maximal ideal of R, realized as projection onto local
/// factors (multiplication by the complementary primitive idempotent).
LocalizedExtension localize_at(const RingExtension& ext, const ElemSet& M);

/// Maximal ideals of R where the extension is locally nontrivial.
std::vector<ElemSet> support(const RingExtension& ext);

struct ResidueExtension {
  ResidueField lower, upper;
  uint32_t degree = 0;
};

/// Residue fields at Q in Max(S) and at its trace in R.
ResidueExtension residue_extension(const RingExtension& ext, const ElemSet& Q);

/// Trace {r in R : embed(r) in J} of a subset of S.
ElemSet contract_to_R(const RingExtension& ext, const ElemSet& J);

struct QuotientExtension {
  RingExtension ext;  // R/I <= S/J
  std::vector<uint16_t> proj_R, proj_S;
};

/// R/(J cap R) <= S/J for an ideal J of S.
QuotientExtension quotient_extension(const RingExtension& ext, const ElemSet& J);

}  // namespace catena
