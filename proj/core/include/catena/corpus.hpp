#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "catena/extension.hpp"

namespace catena {

struct Caps {
  uint32_t ring_cap = kDefaultRingCap;
  uint32_t corpus_max_order = 16;  // |S| bound for the generated corpus
  uint32_t enumerate_cap = kDefaultRingCap;
  uint32_t group_bound = 48;
  int supersolvable_cap = 64;
};

struct CorpusItem {
  std::string name;
  RingExtension ext;
};

/// Deterministic corpus: every proper extension R < S where S ranges over
/// the constructor grammar up to the order bound and R over the subrings
/// of S. Canonically ordered.
std::vector<CorpusItem> build_corpus(const Caps& caps = {});

struct CheckResult {
  std::string name;
  int instances = 0;
  int failures = 0;
  std::vector<std::string> notes;  // first few failure descriptions
  bool pass() const { return failures == 0; }
};

struct VerifyOptions {
  Caps caps;
  int sample = -1;      // corpus subsample size; -1 = all
  uint64_t seed = 0;    // subsample order only; enumeration is deterministic
  bool inject_fault = false;  // negative control: corrupt one ring table
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  int corpus_size = 0;
  bool ok() const {
    for (const auto& c : checks)
      if (!c.pass()) return false;
    return true;
  }
};

/// The full theorem-verification suite over the corpus, the group catalog
/// and the field towers.
VerifyReport run_verify(const VerifyOptions& opt = {});

}  // namespace catena
