#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "catena/error.hpp"
#include "catena/lattice.hpp"

using namespace catena;

namespace {

FiniteLattice m3() {
  return FiniteLattice::build_labeled(
      {"k", "k1", "k2", "k3", "L"},
      {{"k", "k1"}, {"k", "k2"}, {"k", "k3"}, {"k1", "L"}, {"k2", "L"}, {"k3", "L"}});
}

FiniteLattice n5() {
  return FiniteLattice::build_labeled(
      {"0", "a", "b", "c", "1"},
      {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}});
}

// distributive sublattices of a boolean lattice: random families of bitmasks
// closed under union and intersection
FiniteLattice random_closed_family(std::mt19937& rng, int universe_bits) {
  std::uniform_int_distribution<uint32_t> dist(0, (1u << universe_bits) - 1);
  std::set<uint32_t> members{0u, (1u << universe_bits) - 1};
  int extra = 1 + static_cast<int>(rng() % 4);
  for (int i = 0; i < extra; ++i) members.insert(dist(rng));
  for (;;) {
    std::set<uint32_t> next = members;
    for (uint32_t a : members)
      for (uint32_t b : members) {
        next.insert(a | b);
        next.insert(a & b);
      }
    if (next == members) break;
    members = std::move(next);
  }
  std::vector<uint32_t> elems(members.begin(), members.end());
  std::vector<std::string> labels;
  for (uint32_t e : elems) labels.push_back("m" + std::to_string(e));
  std::vector<std::pair<int, int>> covers;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j) {
      if (i == j) continue;
      if ((elems[i] & elems[j]) != elems[i]) continue;  // need i subset j
      bool cover = true;
      for (std::size_t k = 0; k < elems.size() && cover; ++k) {
        if (k == i || k == j) continue;
        if ((elems[i] & elems[k]) == elems[i] && (elems[k] & elems[j]) == elems[k])
          cover = false;
      }
      if (cover) covers.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  return FiniteLattice::build(std::move(labels), covers);
}

}  // namespace

TEST_CASE("build validates covers") {
  CHECK_THROWS_AS(FiniteLattice::build_labeled({"a", "b"}, {{"a", "b"}, {"b", "a"}}),
                  Error);
  try {
    FiniteLattice::build_labeled({"a", "b"}, {{"a", "b"}, {"b", "a"}});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CycleDetected);
  }

  // transitive edge is redundant
  try {
    FiniteLattice::build_labeled({"a", "b", "c"},
                                 {{"a", "b"}, {"b", "c"}, {"a", "c"}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RedundantCover);
  }

  // two maximal elements: no unique top
  try {
    FiniteLattice::build_labeled({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotALattice);
  }

  // bowtie: the middle pair has no unique join
  try {
    FiniteLattice::build_labeled(
        {"0", "a", "b", "c", "d", "1"},
        {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"b", "c"}, {"a", "d"}, {"b", "d"},
         {"c", "1"}, {"d", "1"}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotALattice);
  }

  CHECK_THROWS_AS(FiniteLattice::build_labeled({"a", "a"}, {}), Error);
}

TEST_CASE("three-element chain is a lattice of length 2") {
  FiniteLattice c = chain_lattice(2);
  CHECK(c.size() == 3);
  CHECK(is_graded(c).graded);
  CHECK(length_range(c, c.bottom(), c.top()) == LengthRange{2, 2});
  CHECK(is_distributive(c));
}

TEST_CASE("diamond M3") {
  FiniteLattice L = m3();
  auto g = is_graded(L);
  CHECK(g.graded);
  REQUIRE(g.rank.has_value());
  std::vector<int> expect{0, 1, 1, 1, 2};
  CHECK(*g.rank == expect);
  CHECK_FALSE(is_distributive(L));
  CHECK(length_range(L, L.bottom(), L.top()) == LengthRange{2, 2});

  auto at = atoms(L, L.bottom(), L.top());
  CHECK(at == std::vector<int>{1, 2, 3});
  CHECK(socle(L, L.bottom(), L.top()) == L.top());
  CHECK(loewy_series(L) == std::vector<int>{L.bottom(), L.top()});
  CHECK(is_p_extension(L));
  for (int x = 0; x < L.size(); ++x) CHECK(is_left_modular_element(L, x));
  CHECK(is_left_modular_lattice(L));
  CHECK(is_supersolvable(L));
  CHECK(is_2_catenarian(L));
}

TEST_CASE("pentagon N5") {
  FiniteLattice L = n5();
  CHECK_FALSE(is_graded(L).graded);
  CHECK(length_range(L, L.bottom(), L.top()) == LengthRange{2, 3});
  CHECK_FALSE(is_distributive(L));
  CHECK_FALSE(is_2_catenarian(L));
  CHECK_FALSE(is_supersolvable(L));

  // the two atoms join to the top, so the Loewy series collapses and the
  // lattice is covered by its single Loewy interval
  CHECK(loewy_series(L) == std::vector<int>{L.index_of("0"), L.index_of("1")});
  CHECK(is_p_extension(L));

  // the short-side middle element is the one that fails left modularity
  CHECK(is_left_modular_element(L, L.index_of("a")));
  CHECK(is_left_modular_element(L, L.index_of("b")));
  CHECK_FALSE(is_left_modular_element(L, L.index_of("c")));
  CHECK(is_left_modular_lattice(L));  // the long chain is left modular
}

TEST_CASE("a lattice that is not a P-extension") {
  // two atoms joining below the top plus a stray element over one atom
  FiniteLattice L = FiniteLattice::build_labeled(
      {"0", "a", "b", "s", "x", "1"},
      {{"0", "a"}, {"0", "b"}, {"a", "s"}, {"b", "s"}, {"a", "x"}, {"s", "1"},
       {"x", "1"}});
  CHECK(loewy_series(L) ==
        std::vector<int>{L.index_of("0"), L.index_of("s"), L.index_of("1")});
  CHECK_FALSE(is_p_extension(L));
}

TEST_CASE("intervals") {
  FiniteLattice L = m3();
  FiniteLattice I = interval(L, L.index_of("k"), L.index_of("k1"));
  CHECK(I.size() == 2);
  CHECK(interval(L, 2, 2).size() == 1);
  CHECK(socle(interval(L, 2, 2), 0, 0) == 0);

  FiniteLattice P = n5();
  CHECK(interval(P, P.bottom(), P.top()) == P);
  CHECK_THROWS_AS(interval(P, P.index_of("a"), P.index_of("c")), Error);
}

TEST_CASE("divisor lattices are distributive") {
  FiniteLattice D = divisor_lattice(12);
  CHECK(D.size() == 6);
  CHECK(is_distributive(D));
  CHECK(is_graded(D).graded);
  CHECK(length_range(D, D.bottom(), D.top()) == LengthRange{3, 3});
}

TEST_CASE("sublattice generation") {
  FiniteLattice L = m3();
  // a chain generates itself
  FiniteLattice C = sublattice_generated(L, {L.bottom(), 1, L.top()});
  CHECK(C.size() == 3);
  // two atoms close to a four-element diamond
  FiniteLattice Q = sublattice_generated(L, {1, 2});
  CHECK(Q.size() == 4);
  CHECK(is_distributive(Q));
  // everything generates everything
  CHECK(sublattice_generated(L, {0, 1, 2, 3, 4}).size() == 5);
}

TEST_CASE("supersolvable respects the size bound") {
  CHECK_THROWS_AS(is_supersolvable(m3(), 4), Error);
  CHECK(is_supersolvable(chain_lattice(5)));
}

TEST_CASE("products of chains") {
  FiniteLattice G = product_lattice({chain_lattice(2), chain_lattice(1)});
  CHECK(G.size() == 6);
  CHECK(is_graded(G).graded);
  CHECK(length_range(G, G.bottom(), G.top()) == LengthRange{3, 3});

  FiniteLattice single = product_lattice({m3()});
  CHECK(single == m3());
}

TEST_CASE("rank function invariant") {
  for (const FiniteLattice& L :
       {m3(), chain_lattice(4), divisor_lattice(36),
        product_lattice({chain_lattice(2), chain_lattice(2)})}) {
    auto g = is_graded(L);
    REQUIRE(g.graded);
    const auto& rank = *g.rank;
    CHECK(rank[L.bottom()] == 0);
    for (auto& [a, b] : L.covers()) CHECK(rank[b] == rank[a] + 1);
  }
}

TEST_CASE("maximal chain enumeration") {
  FiniteLattice P = n5();
  auto chains = maximal_chains(P);
  CHECK(chains.size() == 2);
  std::set<std::size_t> lengths;
  for (auto& c : chains) lengths.insert(c.size() - 1);
  CHECK(lengths == std::set<std::size_t>{2, 3});
  CHECK_FALSE(graded_via_chain_enumeration(P));
  CHECK(graded_via_chain_enumeration(m3()));
}

TEST_CASE("property: gradedness oracle on random closed families") {
  std::mt19937 rng(20260809);
  for (int trial = 0; trial < 60; ++trial) {
    FiniteLattice L = random_closed_family(rng, 4);
    bool graded = is_graded(L).graded;
    CAPTURE(L.size());
    // closed families are distributive, hence graded
    CHECK(is_distributive(L));
    CHECK(graded);
    if (L.size() <= 12) CHECK(graded == graded_via_chain_enumeration(L));
    // graded lattices have equal-length chains on every interval
    for (int a = 0; a < L.size(); ++a)
      for (int b = 0; b < L.size(); ++b)
        if (L.leq(a, b)) {
          LengthRange r = length_range(L, a, b);
          CHECK(r.shortest == r.longest);
        }
  }
}

TEST_CASE("property: products are graded with additive length") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    int a = 1 + static_cast<int>(rng() % 3);
    int b = 1 + static_cast<int>(rng() % 3);
    FiniteLattice P =
        product_lattice({chain_lattice(a), divisor_lattice(6), chain_lattice(b)});
    CHECK(is_graded(P).graded);
    CHECK(length_range(P, P.bottom(), P.top()).longest == a + b + 2);
  }
}

TEST_CASE("duality preserves the studied properties") {
  for (const FiniteLattice& L : {m3(), n5(), divisor_lattice(12)}) {
    FiniteLattice D = dual_lattice(L);
    CHECK(is_graded(D).graded == is_graded(L).graded);
    CHECK(is_distributive(D) == is_distributive(L));
    CHECK(length_range(D, D.bottom(), D.top()).longest ==
          length_range(L, L.bottom(), L.top()).longest);
  }
}

TEST_CASE("supersolvable equals graded plus left modular on fixtures") {
  for (const FiniteLattice& L :
       {m3(), n5(), chain_lattice(3), divisor_lattice(12),
        product_lattice({chain_lattice(1), chain_lattice(1), chain_lattice(1)})}) {
    bool ss = is_supersolvable(L);
    CHECK(ss == (is_graded(L).graded && is_left_modular_lattice(L)));
  }
}
