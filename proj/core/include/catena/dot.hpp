#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "catena/lattice.hpp"

namespace catena {

/// One node per element, one edge per cover, bottom at rank 0 (rankdir=BT).
/// Optional per-cover edge attributes (e.g. color by minimal type).
std::string to_dot(const FiniteLattice& L,
                   const std::map<std::pair<int, int>, std::string>& edge_attrs = {},
                   const std::string& graph_name = "lattice");

/// Rebuilds (labels, covers) from DOT emitted by to_dot.
std::pair<std::vector<std::string>, std::vector<std::pair<std::string, std::string>>>
parse_dot_covers(const std::string& text);

}  // namespace catena
