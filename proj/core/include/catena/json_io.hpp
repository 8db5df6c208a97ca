#pragma once

#include <string>
#include <utility>
#include <vector>

#include "catena/corpus.hpp"
#include "catena/ext_lattice.hpp"
#include "catena/field_tower.hpp"
#include "catena/group.hpp"
#include "catena/lattice.hpp"
#include "catena/ring.hpp"

namespace catena {

/// {"elements": [...], "covers": [["a","b"], ...]}
FiniteLattice parse_lattice_json(const std::string& text);
std::string lattice_to_json(const FiniteLattice& L);

/// Ring recipes: {"construct":"zmod"|"gf"|"product"|"quotient"|
/// "poly_quotient"|"idealization", ...}
FiniteCommRing parse_ring_spec(const std::string& text, uint32_t cap = kDefaultRingCap);

/// {"ring": <recipe>, "subring_generators": [indices]}
RingExtension parse_extension_spec(const std::string& text,
                                   uint32_t cap = kDefaultRingCap);

/// {"points": n, "generators": [[...], ...]} with 1-indexed images.
FiniteGroup parse_group_spec(const std::string& text,
                             uint32_t bound = kDefaultGroupBound);

/// {"p": 2, "n": 12}
FieldTower parse_tower_spec(const std::string& text);

// deterministic report serialization (2-space indent, stable key order)
std::string lattice_report_json(const FiniteLattice& L,
                                const std::vector<std::string>& checks,
                                int supersolvable_cap = 64);
std::string lattice_report_text(const FiniteLattice& L,
                                const std::vector<std::string>& checks,
                                int supersolvable_cap = 64);

std::string ring_report_json(const ExtensionLattice& EL, const CatenarityReport& rep);
std::string ring_report_text(const ExtensionLattice& EL, const CatenarityReport& rep);

std::string group_report_json(const std::string& name, const FiniteGroup& G,
                              const Prop3814Report& rep, const SubgroupLattice& SL);
std::string group_report_text(const std::string& name, const FiniteGroup& G,
                              const Prop3814Report& rep, const SubgroupLattice& SL);

std::string tower_report_json(const FieldTower& T, const DLatticeReport& rep);
std::string tower_report_text(const FieldTower& T, const DLatticeReport& rep);

std::string verify_report_json(const VerifyReport& rep);
std::string verify_report_text(const VerifyReport& rep);

const std::vector<std::string>& known_lattice_checks();

}  // namespace catena
