#include "catena/corpus.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "catena/error.hpp"
#include "catena/ext_lattice.hpp"
#include "catena/field_tower.hpp"
#include "catena/group.hpp"
#include "catena/math_util.hpp"

namespace catena {

namespace {

std::vector<FiniteCommRing> corpus_rings(const Caps& caps) {
  // constructed with an internal cap wide enough for every grammar entry;
  // the corpus bound then filters what is analyzed
  const uint32_t cap = std::max<uint32_t>(caps.ring_cap, 32);
  std::vector<FiniteCommRing> all;
  FiniteCommRing F2 = ring_gf(2, 1, cap);
  FiniteCommRing F3 = ring_gf(3, 1, cap);
  FiniteCommRing F4 = ring_gf(2, 2, cap);
  FiniteCommRing F8 = ring_gf(2, 3, cap);
  FiniteCommRing F9 = ring_gf(3, 2, cap);
  FiniteCommRing Z4 = ring_zmod(4, cap);
  FiniteCommRing F2t2 = ring_poly_quotient(F2, {0, 0, 1}, cap);  // F2[t]/(t^2)

  all.push_back(F4);
  all.push_back(F8);
  all.push_back(ring_gf(2, 4, cap));  // F16: tower F2 < F4 < F16
  all.push_back(F9);
  all.push_back(ring_product({F2, F2}, cap));
  all.push_back(ring_product({F2, F4}, cap));
  all.push_back(ring_product({F2, F2, F2}, cap));
  all.push_back(ring_product({F2, F8}, cap));
  all.push_back(ring_product({F4, F4}, cap));
  all.push_back(ring_product({F2, F2, F4}, cap));
  all.push_back(ring_product({F2, F2, F2, F2}, cap));
  all.push_back(ring_product({F3, F3}, cap));
  all.push_back(ring_product({F3, F9}, cap));
  all.push_back(ring_product({Z4, F2}, cap));
  all.push_back(ring_product({Z4, Z4}, cap));
  all.push_back(F2t2);
  all.push_back(ring_poly_quotient(F2, {0, 0, 0, 1}, cap));  // F2[t]/(t^3)
  all.push_back(ring_poly_quotient(F3, {0, 0, 1}, cap));
  all.push_back(ring_poly_quotient(F4, {0, 0, 1}, cap));
  all.push_back(ring_poly_quotient(Z4, {0, 0, 1}, cap));
  all.push_back(idealization(F2, module_free(F2, 2), cap));
  all.push_back(idealization(F4, module_free(F4, 1), cap));
  all.push_back(idealization(Z4, module_quotient(Z4, {2}), cap));
  all.push_back(ring_product({F2, F2t2}, cap));
  all.push_back(ring_product({F4, F2t2}, cap));

  std::vector<FiniteCommRing> out;
  for (auto& r : all)
    if (r.n <= caps.corpus_max_order) out.push_back(std::move(r));
  return out;
}

}  // namespace

std::vector<CorpusItem> build_corpus(const Caps& caps) {
  std::vector<CorpusItem> items;
  for (auto& ring : corpus_rings(caps)) {
    RingPtr S = std::make_shared<FiniteCommRing>(std::move(ring));
    ElemSet seed(S->n);
    seed.set(S->zero);
    seed.set(S->one);
    ElemSet prime = closure_subring(*S, seed);
    RingExtension base = RingExtension::from_subring(S, prime);
    auto subs = enumerate_subrings(base, caps.enumerate_cap);
    for (std::size_t i = 0; i + 1 < subs.size(); ++i)  // last one is S itself
      items.push_back({S->recipe + "[T" + std::to_string(i) + "]",
                       RingExtension::from_subring(S, subs[i])});
  }
  return items;
}

namespace {

struct Suite {
  std::vector<std::string> order;
  std::map<std::string, CheckResult> by_name;

  CheckResult& at(const std::string& name) {
    auto it = by_name.find(name);
    if (it == by_name.end()) {
      order.push_back(name);
      it = by_name.emplace(name, CheckResult{name, 0, 0, {}}).first;
    }
    return it->second;
  }

  void record(const std::string& name, bool ok, const std::string& what) {
    CheckResult& c = at(name);
    ++c.instances;
    if (!ok) {
      ++c.failures;
      if (c.notes.size() < 5) c.notes.push_back(what);
    }
  }
};

bool is_chain(const FiniteLattice& L) {
  for (int a = 0; a < L.size(); ++a)
    for (int b = a + 1; b < L.size(); ++b)
      if (!L.leq(a, b) && !L.leq(b, a)) return false;
  return true;
}

// Structural lattice checks shared by ring, group and fixture lattices.
void lattice_theory_checks(Suite& suite, const FiniteLattice& L,
                           const std::string& who, int supersolvable_cap) {
  bool graded = is_graded(L).graded;
  LengthRange len = length_range(L, L.bottom(), L.top());
  if (is_distributive(L))
    suite.record("prop_1_0", graded, who + ": distributive but not graded");
  if (is_chain(L)) suite.record("prop_1_04", graded, who + ": chain not graded");
  if (len.longest <= 2)
    suite.record("prop_1_2", graded, who + ": length <= 2 but not graded");
  if (L.size() <= 12)
    suite.record("graded_oracle",
                 graded == graded_via_chain_enumeration(L),
                 who + ": rank propagation disagrees with chain enumeration");
  if (graded) {
    // rank agreement with interval lengths on every comparable pair
    bool ok = true;
    for (int a = 0; a < L.size() && ok; ++a)
      for (int b = 0; b < L.size() && ok; ++b)
        if (L.leq(a, b)) {
          LengthRange r = length_range(L, a, b);
          if (r.shortest != r.longest) ok = false;
        }
    suite.record("graded_intervals", ok, who + ": graded with unequal interval chains");
  }
  {
    FiniteLattice D = dual_lattice(L);
    bool ok = is_graded(D).graded == graded && is_distributive(D) == is_distributive(L) &&
              length_range(D, D.bottom(), D.top()).longest == len.longest;
    suite.record("dual_invariance", ok, who + ": dual lattice differs");
  }
  if (is_p_extension(L)) {
    auto series = loewy_series(L);
    bool all_graded = true;
    int sum = 0;
    for (std::size_t i = 0; i + 1 < series.size(); ++i) {
      FiniteLattice seg = interval(L, series[i], series[i + 1]);
      if (!is_graded(seg).graded) all_graded = false;
      sum += length_range(seg, seg.bottom(), seg.top()).longest;
    }
    bool ok = (graded == all_graded) && (!graded || sum == len.longest);
    suite.record("prop_1_0143", ok, who + ": Loewy criterion fails");
  }
  if (L.size() <= 10 || L.size() <= supersolvable_cap) {
    bool within = L.size() <= supersolvable_cap;
    if (within) {
      bool ss = is_supersolvable(L, supersolvable_cap);
      bool lm = is_left_modular_lattice(L);
      suite.record("prop_3_812", (graded && lm) == ss,
                   who + ": graded+left-modular vs supersolvable mismatch");
    }
  }
}

void check_extension(Suite& suite, const CorpusItem& item, const Caps& caps) {
  const std::string& who = item.name;
  ExtensionLattice EL = enumerate_interval(item.ext, caps.enumerate_cap);
  const FiniteLattice& L = EL.lattice;
  const RingPtr& S = item.ext.S;

  bool graded = is_graded(L).graded;
  LengthRange len = length_range(L, L.bottom(), L.top());

  lattice_theory_checks(suite, L, who, caps.supersolvable_cap);

  // joins are generated subalgebras, meets are intersections
  {
    bool ok = true;
    for (int a = 0; a < L.size() && ok; ++a)
      for (int b = a; b < L.size() && ok; ++b) {
        ElemSet u = EL.subrings[a] | EL.subrings[b];
        if (EL.index_of(closure_subring(*S, u)) != L.join(a, b)) ok = false;
        if (EL.index_of(EL.subrings[a] & EL.subrings[b]) != L.meet(a, b)) ok = false;
      }
    suite.record("lattice_laws", ok, who + ": join/meet tables disagree with algebra");
  }

  // every cover edge classified with a maximal conductor (classification
  // throws otherwise); exactly one type per edge by construction
  suite.record("thm_minimal", static_cast<int>(EL.edges.size()) ==
                                  static_cast<int>(L.covers().size()),
               who + ": unclassified cover edge");

  // crucial ideal: the minimal step is local exactly at the conductor
  for (const auto& [e, info] : EL.edges) {
    RingExtension step = sub_extension(S, EL.subrings[e.first], EL.subrings[e.second]);
    auto supp = support(step);
    InducedRing it = induce_ring(*S, EL.subrings[e.first]);
    ElemSet crucial_local(it.ring.n);
    for (uint32_t x : info.crucial.indices())
      crucial_local.set(static_cast<uint32_t>(it.from_ambient[x]));
    bool ok = supp.size() == 1 && supp[0] == crucial_local;
    suite.record("thm_crucial", ok, who + ": support of a minimal step is not {M}");
  }

  // support equals the crucial traces along every maximal chain
  {
    auto supp = support(item.ext);
    std::set<ElemSet> expected(supp.begin(), supp.end());
    bool ok = true;
    for (const auto& chain : maximal_chains(L)) {
      std::set<ElemSet> traces;
      for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        const EdgeInfo& info = EL.edges.at({chain[i], chain[i + 1]});
        traces.insert(contract_to_R(item.ext, info.crucial));
      }
      if (traces != expected) ok = false;
    }
    suite.record("prop_1_14", ok, who + ": crucial traces differ from the support");
  }

  // closure cross-checks (throw InconsistentCharacterization on mismatch)
  (void)t_closure_index(EL);
  bool infra = is_infra_integral(EL);
  bool tclosed = is_t_closed(EL);
  suite.record("prop_1_31", true, who);

  if (tclosed)
    suite.record("prop_1_33", graded, who + ": t-closed extension not graded");
  if (infra)
    suite.record("prop_1_5", graded, who + ": infra-integral extension not graded");

  // localization: gradedness is local and lengths add over the support
  {
    bool all_graded = true;
    int sum = 0;
    for (const auto& M : maximal_ideals(*item.ext.R)) {
      LocalizedExtension loc = localize_at(item.ext, M);
      ExtensionLattice locEL = enumerate_interval(loc.ext, caps.enumerate_cap);
      if (!is_graded(locEL.lattice).graded) all_graded = false;
      sum += length_range(locEL.lattice, locEL.lattice.bottom(),
                          locEL.lattice.top()).longest;
    }
    bool ok = (graded == all_graded) && sum == len.longest;
    suite.record("prop_3_3", ok, who + ": localization transfer fails");
  }

  // catenarity characterizations
  CatenarityReport rep = analyze_catenarity(EL);
  suite.record("thm_3_62", rep.thm_3_62_ok, who + ": 2-catenarian biconditional fails");
  suite.record("cor_3_63", rep.cor_3_63_ok, who + ": split sufficiency fails");
  suite.record("prop_3_411", rep.prop_3_411_ok, who + ": chain through t-closure");
  suite.record("prop_3_42", rep.prop_3_42_ok, who + ": no maximal chain through t-closure realizes the length");
  suite.record("prop_3_6", rep.prop_3_6_ok, who + ": disjoint M1/M2 sufficiency fails");
  if (rep.unbranched) {
    suite.record("lemma_3_43", rep.all_elements_local, who + ": non-local element in an unbranched extension");
    suite.record("thm_3_5", rep.thm_3_5_ok, who + ": unbranched equivalence fails");
  }

  // quotient transfer across every shared ideal
  {
    for (const auto& I : all_ideals(*S)) {
      if (!I.subset_of(EL.subrings[0])) continue;
      if (I.count() == S->n) continue;
      QuotientExtension q = quotient_extension(item.ext, I);
      ExtensionLattice qEL = enumerate_interval(q.ext, caps.enumerate_cap);
      bool ok = qEL.lattice.size() == L.size();
      // explicit bijection T -> T/I
      std::vector<int> sigma(L.size(), -1);
      for (int i = 0; i < L.size() && ok; ++i) {
        ElemSet img(q.ext.S->n);
        for (uint32_t x : EL.subrings[i].indices()) img.set(q.proj_S[x]);
        sigma[i] = qEL.index_of(img);
        if (sigma[i] < 0) ok = false;
      }
      if (ok) {
        std::set<int> hit(sigma.begin(), sigma.end());
        ok = static_cast<int>(hit.size()) == L.size();
        for (auto& [a, b] : L.covers()) {
          bool cov = false;
          for (auto& [c, d] : qEL.lattice.covers())
            if (c == sigma[a] && d == sigma[b]) cov = true;
          if (!cov) ok = false;
        }
        if (is_graded(qEL.lattice).graded != graded) ok = false;
        if (length_range(qEL.lattice, qEL.lattice.bottom(), qEL.lattice.top())
                .longest != len.longest)
          ok = false;
      }
      suite.record("cor_1_014", ok, who + ": shared-ideal quotient transfer fails");
    }
  }

  // idealization transfer, kept to the small instances
  if (S->n <= 8) {
    const uint32_t icap = std::max<uint32_t>(caps.ring_cap, 64);
    FiniteCommRing big = idealization(*S, module_free(*S, 1), icap);
    RingPtr bigp = std::make_shared<FiniteCommRing>(std::move(big));
    ElemSet sub(bigp->n);
    for (uint32_t r : EL.subrings[0].indices())
      for (uint32_t m = 0; m < S->n; ++m) sub.set(r * S->n + m);
    ExtensionLattice bigEL =
        enumerate_interval(RingExtension::from_subring(bigp, sub), icap);
    bool ok = is_graded(bigEL.lattice).graded == graded &&
              length_range(bigEL.lattice, bigEL.lattice.bottom(),
                           bigEL.lattice.top()).longest == len.longest &&
              bigEL.lattice.size() == L.size();
    suite.record("prop_5_14", ok, who + ": idealization transfer fails");
  }

  // pointwise minimal classification
  {
    PointwiseReport pw = is_pointwise_minimal(EL);
    if (pw.pointwise_minimal) {
      bool ok = pw.conductor_maximal && pw.case_tag.has_value();
      suite.record("pointwise_cases", ok, who + ": pointwise minimal without a case");
      if (pw.case_tag) {
        suite.at("pointwise_case_" + std::to_string(*pw.case_tag)).instances++;
        if (*pw.case_tag == 4)
          suite.record("pointwise_case4_noncatenarian", !graded,
                       who + ": case 4 must not be graded");
      }
    }
  }

  // crosswise exchange and the inert/non-inert composition bounds
  for (int t = 0; t < L.size(); ++t)
    for (int u : L.lower_covers(t))
      for (int v : L.upper_covers(t)) {
        const EdgeInfo& lo = EL.edges.at({u, t});
        const EdgeInfo& hi = EL.edges.at({t, v});
        ElemSet traceN(S->n);
        for (uint32_t x : EL.subrings[u].indices())
          if (hi.crucial.test(x)) traceN.set(x);
        if (!traceN.subset_of(lo.crucial)) {
          CrosswiseReport cw = check_crosswise_exchange(S, EL.subrings[u],
                                                        EL.subrings[t],
                                                        EL.subrings[v]);
          suite.record("lemma_1_13", cw.ok(), who + ": crosswise exchange fails");
        }
        if (lo.type == MinimalType::Inert && hi.type != MinimalType::Inert) {
          Lemma341Report r341 =
              check_lemma_341(S, EL.subrings[u], EL.subrings[t], EL.subrings[v]);
          suite.record(r341.conductors_equal ? "lemma_3_41_equal"
                                             : "lemma_3_41_distinct",
                       r341.ok(), who + ": inert/non-inert composition");
        }
      }
}

void check_named_instances(Suite& suite, const Caps& caps) {
  const uint32_t cap = std::max<uint32_t>(caps.ring_cap, 16);
  FiniteCommRing F2 = ring_gf(2, 1, cap);
  FiniteCommRing F4 = ring_gf(2, 2, cap);

  // R <= R^n stays graded (n = 2, 3)
  for (uint32_t copies : {2u, 3u}) {
    std::vector<FiniteCommRing> fac(copies, F2);
    RingPtr S = std::make_shared<FiniteCommRing>(ring_product(fac, cap));
    ElemSet seed(S->n);
    seed.set(S->zero);
    seed.set(S->one);
    RingExtension ext = RingExtension::from_subring(S, closure_subring(*S, seed));
    ExtensionLattice EL = enumerate_interval(ext, caps.enumerate_cap);
    bool ok = is_infra_integral(EL) && is_graded(EL.lattice).graded;
    suite.record("cor_1_6", ok, "F2 in F2^" + std::to_string(copies));
  }

  // the three-element chain with decomposed then inert steps
  {
    RingPtr S = std::make_shared<FiniteCommRing>(ring_product({F2, F4}, cap));
    ElemSet seed(S->n);
    seed.set(S->zero);
    seed.set(S->one);
    RingExtension ext = RingExtension::from_subring(S, closure_subring(*S, seed));
    ExtensionLattice EL = enumerate_interval(ext, caps.enumerate_cap);
    bool ok = EL.lattice.size() == 3 && is_chain(EL.lattice);
    int t_idx = ok ? t_closure_index(EL) : -1;
    ok = ok && t_idx == 1 && is_graded(EL.lattice).graded;
    if (ok) {
      const EdgeInfo& e0 = EL.edges.at({0, 1});
      const EdgeInfo& e1 = EL.edges.at({1, 2});
      ok = e0.type == MinimalType::Decomposed && e1.type == MinimalType::Inert;
    }
    suite.record("remark_3_61", ok, "F2 in F2xF4 is not the expected 3-chain");
  }
}

void check_product_transfer(Suite& suite, const Caps& caps) {
  const uint32_t cap = std::max<uint32_t>(caps.ring_cap, 64);
  FiniteCommRing F2 = ring_gf(2, 1, cap);
  FiniteCommRing F3 = ring_gf(3, 1, cap);
  FiniteCommRing F4 = ring_gf(2, 2, cap);
  FiniteCommRing F9 = ring_gf(3, 2, cap);
  FiniteCommRing F2t2 = ring_poly_quotient(F2, {0, 0, 1}, cap);

  struct Pair {
    std::string name;
    std::vector<FiniteCommRing> lowers, uppers;
  };
  std::vector<Pair> pairs;
  pairs.push_back({"(F2<F4)x(F2<F2^2)",
                   {F2, F2},
                   {F4, ring_product({F2, F2}, cap)}});
  pairs.push_back({"(F2<F2[t])x(F2<F4)", {F2, F2}, {F2t2, F4}});
  pairs.push_back({"(F2<F2^2)x(F3<F9)",
                   {F2, F3},
                   {ring_product({F2, F2}, cap), F9}});
  pairs.push_back({"(F2<F4)^3", {F2, F2, F2}, {F4, F4, F4}});

  for (const auto& pr : pairs) {
    const std::size_t k = pr.lowers.size();
    std::vector<ExtensionLattice> factors;
    std::vector<RingExtension> exts;
    for (std::size_t i = 0; i < k; ++i) {
      RingPtr Si = std::make_shared<FiniteCommRing>(pr.uppers[i]);
      ElemSet seed(Si->n);
      seed.set(Si->zero);
      seed.set(Si->one);
      ElemSet sub = closure_subring(*Si, seed);
      // the lower ring is the prime subring in all chosen pairs
      RingExtension e = RingExtension::from_subring(Si, sub);
      factors.push_back(enumerate_interval(e, cap));
      exts.push_back(std::move(e));
    }
    RingPtr SP =
        std::make_shared<FiniteCommRing>(ring_product(pr.uppers, cap));
    // R = product of the lower subrings
    ElemSet sub(SP->n);
    {
      std::vector<std::vector<uint32_t>> lows;
      for (auto& f : factors) lows.push_back(f.subrings[0].indices());
      std::vector<std::size_t> iter(k, 0);
      for (;;) {
        std::vector<uint32_t> coords(k);
        for (std::size_t i = 0; i < k; ++i) coords[i] = lows[i][iter[i]];
        sub.set(product_index(pr.uppers, coords));
        std::size_t pos = k;
        while (pos > 0) {
          --pos;
          if (++iter[pos] < lows[pos].size()) break;
          iter[pos] = 0;
          if (pos == 0) {
            pos = k + 1;
            break;
          }
        }
        if (pos == k + 1) break;
      }
    }
    ExtensionLattice EL =
        enumerate_interval(RingExtension::from_subring(SP, sub), cap);

    std::size_t expect = 1;
    int expect_len = 0;
    bool expect_graded = true;
    for (auto& f : factors) {
      expect *= f.subrings.size();
      expect_len += length_range(f.lattice, f.lattice.bottom(), f.lattice.top()).longest;
      if (!is_graded(f.lattice).graded) expect_graded = false;
    }
    bool ok = EL.subrings.size() == expect;

    // every intermediate ring splits as a product of components
    std::vector<uint32_t> sizes;
    for (auto& u : pr.uppers) sizes.push_back(u.n);
    auto decompose = [&](uint32_t idx) {
      std::vector<uint32_t> c(k);
      for (int i = static_cast<int>(k) - 1; i >= 0; --i) {
        c[i] = idx % sizes[i];
        idx /= sizes[i];
      }
      return c;
    };
    // T <= proj_1(T) x ... x proj_k(T) always holds, so T splits as the
    // product of its projections exactly when the cardinalities agree
    for (const auto& T : EL.subrings) {
      std::vector<std::set<uint32_t>> proj(k);
      for (uint32_t t : T.indices()) {
        auto c = decompose(t);
        for (std::size_t i = 0; i < k; ++i) proj[i].insert(c[i]);
      }
      std::size_t total = 1;
      for (std::size_t i = 0; i < k; ++i) total *= proj[i].size();
      if (total != T.count()) ok = false;
    }

    ok = ok &&
         is_graded(EL.lattice).graded == expect_graded &&
         length_range(EL.lattice, EL.lattice.bottom(), EL.lattice.top()).longest ==
             expect_len;
    if (ok) {
      std::vector<FiniteLattice> ls;
      for (auto& f : factors) ls.push_back(f.lattice);
      FiniteLattice P = product_lattice(ls);
      ok = P.size() == EL.lattice.size() &&
           P.covers().size() == EL.lattice.covers().size() &&
           is_graded(P).graded == is_graded(EL.lattice).graded;
    }
    suite.record("prop_3_9", ok, pr.name + ": product transfer fails");
  }
}

void check_groups(Suite& suite, const Caps& caps) {
  for (const auto& [name, G] : group_catalog()) {
    Prop3814Report rep = check_prop_3814(G, caps.group_bound, caps.supersolvable_cap);
    suite.record("prop_3_814", rep.iwasawa_ok,
                 name + ": supersolvable vs graded subgroup lattice");
    if (rep.lattice_supersolvable.has_value())
      suite.record("prop_3_813", rep.lattice_equiv_ok,
                   name + ": lattice supersolvability mismatch");
    if (G.is_abelian()) {
      uint32_t expect = big_omega(G.order());
      suite.record("prop_3_82",
                   rep.lattice_graded &&
                       rep.lattice_length == static_cast<int>(expect),
                   name + ": abelian length differs from the exponent sum");
    }
    SubgroupLattice SL = subgroup_lattice(G, caps.group_bound);
    lattice_theory_checks(suite, SL.lattice, name, caps.supersolvable_cap);
  }
}

void check_towers(Suite& suite) {
  struct Case {
    uint32_t p, n;
  };
  for (auto [p, n] : {Case{2, 4}, Case{2, 6}, Case{2, 12}, Case{2, 5}, Case{2, 9},
                      Case{3, 4}, Case{3, 6}, Case{5, 4}}) {
    FieldTower T = FieldTower::make(p, n);
    DLatticeReport rep = check_D_lattice(T);
    std::string who = "F" + std::to_string(p) + "^" + std::to_string(n);
    suite.record("prop_3_71", rep.covers_match, who + ": cover/divisor mismatch");
    suite.record("prop_3_8", rep.bijection_ok && rep.graded_match,
                 who + ": D lattice not graded of the right length");
    if (is_prime_u32(n))
      suite.record("example_3_83", rep.d_lat.size() == 2 && rep.length == 1,
                   who + ": prime degree must give a minimal step");
    else if (big_omega(n) == 2)
      suite.record("example_3_83", rep.length == 2,
                   who + ": two prime factors must give length 2");
  }
}

void check_fixture_lattices(Suite& suite, const Caps& caps) {
  // the named five-element diamond and pentagon plus small standards
  FiniteLattice m3 = FiniteLattice::build_labeled(
      {"k", "k1", "k2", "k3", "L"},
      {{"k", "k1"}, {"k", "k2"}, {"k", "k3"}, {"k1", "L"}, {"k2", "L"}, {"k3", "L"}});
  FiniteLattice n5 = FiniteLattice::build_labeled(
      {"0", "a", "b", "c", "1"},
      {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}});
  lattice_theory_checks(suite, m3, "M3", caps.supersolvable_cap);
  lattice_theory_checks(suite, n5, "N5", caps.supersolvable_cap);
  lattice_theory_checks(suite, chain_lattice(3), "chain3", caps.supersolvable_cap);
  lattice_theory_checks(suite, divisor_lattice(12), "div12", caps.supersolvable_cap);
  lattice_theory_checks(suite, divisor_lattice(36), "div36", caps.supersolvable_cap);
  lattice_theory_checks(
      suite, product_lattice({chain_lattice(2), chain_lattice(2)}), "grid3x3",
      caps.supersolvable_cap);
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& opt) {
  Suite suite;
  auto items = build_corpus(opt.caps);
  const int full_size = static_cast<int>(items.size());

  // deterministic subsample when requested; reports stay in corpus order
  if (opt.sample >= 0 && opt.sample < static_cast<int>(items.size())) {
    std::vector<std::size_t> idx(items.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::mt19937_64 rng(opt.seed);
    std::shuffle(idx.begin(), idx.end(), rng);
    idx.resize(static_cast<std::size_t>(opt.sample));
    std::sort(idx.begin(), idx.end());
    std::vector<CorpusItem> keep;
    for (std::size_t i : idx) keep.push_back(items[i]);
    items = std::move(keep);
  }

  // ring table axioms, with the optional negative-control fault
  {
    std::set<std::string> seen;
    bool faulted = false;
    for (const auto& item : items) {
      if (!seen.insert(item.ext.S->recipe).second) continue;
      FiniteCommRing copy = *item.ext.S;
      if (opt.inject_fault && !faulted) {
        // 1*1 becomes 0*1: breaks the unit law
        copy.mul_tab[static_cast<std::size_t>(copy.one) * copy.n + copy.one] =
            copy.mul_tab[static_cast<std::size_t>(copy.zero) * copy.n + copy.one];
        faulted = true;
      }
      suite.record("ring_axioms", !copy.check_axioms().has_value(),
                   copy.recipe + ": axiom failure");
    }
  }

  for (const auto& item : items) {
    try {
      check_extension(suite, item, opt.caps);
    } catch (const Error& e) {
      suite.record("analysis_errors", false, item.name + ": " + e.what());
    }
  }
  // witness-existence assertions only make sense over the full corpus
  const bool full_corpus =
      opt.caps.corpus_max_order >= 16 && (opt.sample < 0 || opt.sample >= full_size);
  if (full_corpus) {
    suite.record("lemma_3_41_witnesses",
                 suite.at("lemma_3_41_equal").instances > 0 &&
                     suite.at("lemma_3_41_distinct").instances > 0,
                 "no witnessing triples found in the corpus");
    suite.record("lemma_1_13_witnesses", suite.at("lemma_1_13").instances > 0,
                 "no crosswise-exchange triples found in the corpus");
    for (int tag : {1, 2, 3})
      suite.record("pointwise_witnesses",
                   suite.at("pointwise_case_" + std::to_string(tag)).instances > 0,
                   "pointwise-minimal case " + std::to_string(tag) + " not witnessed");
  }

  try {
    check_named_instances(suite, opt.caps);
    check_product_transfer(suite, opt.caps);
    check_fixture_lattices(suite, opt.caps);
    check_groups(suite, opt.caps);
    check_towers(suite);
  } catch (const Error& e) {
    suite.record("analysis_errors", false, std::string("suite: ") + e.what());
  }

  VerifyReport rep;
  rep.corpus_size = static_cast<int>(items.size());
  for (const auto& name : suite.order) rep.checks.push_back(suite.by_name.at(name));
  return rep;
}

}  // namespace catena
