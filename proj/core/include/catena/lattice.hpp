#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "catena/elemset.hpp"

namespace catena {

/// A finite bounded lattice given by its Hasse diagram. Construction
/// validates acyclicity, irredundancy of covers, unique bounds and the
/// existence of all pairwise joins and meets; the full order relation and
/// the join/meet tables are cached. Immutable after build.
class FiniteLattice {
 public:
  FiniteLattice() = default;  // empty placeholder; use build() for a valid lattice

  static FiniteLattice build(std::vector<std::string> labels,
                             const std::vector<std::pair<int, int>>& covers);
  static FiniteLattice build_labeled(
      std::vector<std::string> labels,
      const std::vector<std::pair<std::string, std::string>>& covers);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }
  int index_of(const std::string& label) const;

  bool leq(int a, int b) const { return leq_[a * size() + b] != 0; }
  int join(int a, int b) const { return join_[a * size() + b]; }
  int meet(int a, int b) const { return meet_[a * size() + b]; }

  int bottom() const { return bottom_; }
  int top() const { return top_; }

  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  const std::vector<int>& upper_covers(int i) const { return up_[i]; }
  const std::vector<int>& lower_covers(int i) const { return down_[i]; }

  /// Indices in a linear extension of the order (bottom first).
  const std::vector<int>& topo_order() const { return topo_; }

  bool operator==(const FiniteLattice& o) const {
    return labels_ == o.labels_ && covers_ == o.covers_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> up_, down_;
  std::vector<uint8_t> leq_;
  std::vector<int32_t> join_, meet_;
  std::vector<int> topo_;
  int bottom_ = 0, top_ = 0;
};

struct LengthRange {
  int shortest = 0;
  int longest = 0;
  bool operator==(const LengthRange&) const = default;
};

struct GradedResult {
  bool graded = false;
  std::optional<std::vector<int>> rank;  // rank[bottom] == 0, +1 per cover
};

GradedResult is_graded(const FiniteLattice& L);

/// Sublattice [a, b] with the induced covers. Throws NotComparable.
FiniteLattice interval(const FiniteLattice& L, int a, int b);

/// Shortest and longest maximal-chain length in [a, b].
LengthRange length_range(const FiniteLattice& L, int a, int b);

bool is_distributive(const FiniteLattice& L);

/// Covers of a inside [a, b], ascending.
std::vector<int> atoms(const FiniteLattice& L, int a, int b);

/// Join of the atoms of [a, b]; a itself when the interval is a singleton.
int socle(const FiniteLattice& L, int a, int b);

/// Iterated socles from bottom to top; strictly increasing.
std::vector<int> loewy_series(const FiniteLattice& L);

/// True when every element lies in some interval of consecutive terms of
/// the Loewy series.
bool is_p_extension(const FiniteLattice& L);

bool is_left_modular_element(const FiniteLattice& L, int x);

/// True when some maximal chain consists of left-modular elements only.
bool is_left_modular_lattice(const FiniteLattice& L);

/// Closure of the subset under join and meet, with the induced order.
FiniteLattice sublattice_generated(const FiniteLattice& L,
                                   const std::vector<int>& subset);

/// Literal definition: some maximal chain C such that for every chain C'
/// the sublattice generated by C and C' is distributive. Exponential in the
/// worst case; guarded by the size bound (SizeLimitExceeded).
bool is_supersolvable(const FiniteLattice& L, int size_bound = 64);

FiniteLattice product_lattice(const std::vector<FiniteLattice>& factors);

/// Every pair of composable cover steps spans an interval of length 2.
bool is_2_catenarian(const FiniteLattice& L);

std::vector<std::vector<int>> maximal_chains_between(const FiniteLattice& L,
                                                     int a, int b);
std::vector<std::vector<int>> maximal_chains(const FiniteLattice& L);

/// Brute-force gradedness oracle: enumerates every maximal chain of every
/// interval and compares lengths. Never consults rank propagation.
bool graded_via_chain_enumeration(const FiniteLattice& L);

FiniteLattice dual_lattice(const FiniteLattice& L);

/// 0 < 1 < ... < len, labeled by the integers.
FiniteLattice chain_lattice(int len);

/// Divisors of n ordered by divisibility.
FiniteLattice divisor_lattice(uint32_t n);

}  // namespace catena
