#include "catena/group.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <unordered_map>

#include "catena/error.hpp"

namespace catena {

namespace {

Perm identity_perm(uint32_t points) {
  Perm p(points);
  for (uint32_t i = 0; i < points; ++i) p[i] = static_cast<uint8_t>(i);
  return p;
}

Perm compose(const Perm& f, const Perm& g) {  // apply g first
  Perm r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[g[i]];
  return r;
}

Perm invert(const Perm& f) {
  Perm r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[f[i]] = static_cast<uint8_t>(i);
  return r;
}

}  // namespace

FiniteGroup FiniteGroup::from_generators(uint32_t points, const std::vector<Perm>& gens,
                                         uint32_t bound) {
  for (const auto& g : gens) {
    if (g.size() != points)
      throw Error(ErrorKind::SpecError, "generator degree mismatch");
    std::vector<uint8_t> hit(points, 0);
    for (uint8_t v : g) {
      if (v >= points || hit[v])
        throw Error(ErrorKind::SpecError, "generator is not a permutation");
      hit[v] = 1;
    }
  }
  std::set<Perm> elems;
  std::queue<Perm> q;
  Perm id = identity_perm(points);
  elems.insert(id);
  q.push(id);
  while (!q.empty()) {
    Perm u = q.front();
    q.pop();
    for (const auto& g : gens) {
      Perm v = compose(g, u);
      if (elems.insert(v).second) {
        if (elems.size() > bound)
          throw Error(ErrorKind::SizeLimitExceeded,
                      "group order exceeds bound " + std::to_string(bound));
        q.push(v);
      }
    }
  }
  FiniteGroup G;
  G.points = points;
  G.elements.assign(elems.begin(), elems.end());
  std::sort(G.elements.begin(), G.elements.end());
  // identity first
  auto it = std::find(G.elements.begin(), G.elements.end(), id);
  std::rotate(G.elements.begin(), it, it + 1);
  std::sort(G.elements.begin() + 1, G.elements.end());

  std::map<Perm, uint16_t> index;
  for (uint32_t i = 0; i < G.order(); ++i) index[G.elements[i]] = static_cast<uint16_t>(i);
  G.prod.resize(static_cast<std::size_t>(G.order()) * G.order());
  G.inverse.resize(G.order());
  for (uint32_t a = 0; a < G.order(); ++a) {
    G.inverse[a] = index[invert(G.elements[a])];
    for (uint32_t b = 0; b < G.order(); ++b)
      G.prod[a * G.order() + b] = index[compose(G.elements[a], G.elements[b])];
  }
  for (const auto& g : gens) G.generator_ids.push_back(index[g]);
  return G;
}

uint32_t FiniteGroup::element_order(uint32_t a) const {
  uint32_t k = 1, v = a;
  while (v != 0) {
    v = mul(v, a);
    ++k;
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (uint32_t a = 0; a < order(); ++a)
    for (uint32_t b = a + 1; b < order(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

FiniteGroup cyclic_group(uint32_t n) {
  if (n == 0) throw Error(ErrorKind::SpecError, "cyclic group order must be >= 1");
  if (n == 1) return FiniteGroup::from_generators(1, {});
  Perm cyc(n);
  for (uint32_t i = 0; i < n; ++i) cyc[i] = static_cast<uint8_t>((i + 1) % n);
  return FiniteGroup::from_generators(n, {cyc});
}

FiniteGroup abelian_group(const std::vector<uint32_t>& factors) {
  if (factors.empty()) throw Error(ErrorKind::SpecError, "no factors");
  FiniteGroup G = cyclic_group(factors[0]);
  for (std::size_t i = 1; i < factors.size(); ++i)
    G = direct_product(G, cyclic_group(factors[i]));
  return G;
}

FiniteGroup dihedral_group(uint32_t n) {
  if (n < 3) throw Error(ErrorKind::SpecError, "dihedral needs n >= 3");
  Perm rot(n), refl(n);
  for (uint32_t i = 0; i < n; ++i) {
    rot[i] = static_cast<uint8_t>((i + 1) % n);
    refl[i] = static_cast<uint8_t>((n - i) % n);
  }
  return FiniteGroup::from_generators(n, {rot, refl});
}

FiniteGroup dicyclic_group(uint32_t q) {
  if (q < 2) throw Error(ErrorKind::SpecError, "dicyclic needs q >= 2");
  // normal forms a^i b^j, i < 2q, j < 2, on 4q points; left regular action
  const uint32_t n = 4 * q;
  auto enc = [&](uint32_t i, uint32_t j) { return i * 2 + j; };
  Perm A(n), B(n);
  for (uint32_t i = 0; i < 2 * q; ++i)
    for (uint32_t j = 0; j < 2; ++j) {
      A[enc(i, j)] = static_cast<uint8_t>(enc((i + 1) % (2 * q), j));
      if (j == 0)
        B[enc(i, 0)] = static_cast<uint8_t>(enc((2 * q - i) % (2 * q), 1));
      else
        B[enc(i, 1)] = static_cast<uint8_t>(enc((q + 2 * q - i) % (2 * q), 0));
    }
  return FiniteGroup::from_generators(n, {A, B});
}

FiniteGroup semidirect_cyclic(uint32_t m, uint32_t n, uint32_t k) {
  uint64_t kn = 1;
  for (uint32_t i = 0; i < n; ++i) kn = (kn * k) % m;
  if (kn != 1 % m)
    throw Error(ErrorKind::SpecError, "k^n != 1 mod m; action ill-defined");
  const uint32_t total = m * n;
  auto enc = [&](uint32_t i, uint32_t j) { return i * n + j; };
  Perm A(total), B(total);
  for (uint32_t i = 0; i < m; ++i)
    for (uint32_t j = 0; j < n; ++j) {
      A[enc(i, j)] = static_cast<uint8_t>(enc((i + 1) % m, j));
      B[enc(i, j)] = static_cast<uint8_t>(enc((i * k) % m, (j + 1) % n));
    }
  return FiniteGroup::from_generators(total, {A, B});
}

FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B) {
  uint32_t points = A.points + B.points;
  std::vector<Perm> gens;
  for (uint16_t gi : A.generator_ids) {
    Perm g = identity_perm(points);
    for (uint32_t i = 0; i < A.points; ++i) g[i] = A.elements[gi][i];
    gens.push_back(g);
  }
  for (uint16_t gi : B.generator_ids) {
    Perm g = identity_perm(points);
    for (uint32_t i = 0; i < B.points; ++i)
      g[A.points + i] = static_cast<uint8_t>(A.points + B.elements[gi][i]);
    gens.push_back(g);
  }
  uint32_t bound = A.order() * B.order();
  return FiniteGroup::from_generators(points, gens, bound);
}

FiniteGroup symmetric_4() {
  return FiniteGroup::from_generators(4, {{1, 0, 2, 3}, {1, 2, 3, 0}}, 24);
}

FiniteGroup alternating_4() {
  return FiniteGroup::from_generators(4, {{1, 2, 0, 3}, {1, 0, 3, 2}}, 12);
}

FiniteGroup special_linear_2_3() {
  // action on the 8 nonzero vectors of F_3^2
  return FiniteGroup::from_generators(
      8, {{3, 7, 2, 6, 1, 5, 0, 4}, {5, 2, 0, 6, 3, 1, 7, 4}}, 24);
}

std::vector<ElemSet> subgroups(const FiniteGroup& G) {
  const uint32_t n = G.order();
  auto close = [&](ElemSet start) {
    std::vector<uint32_t> members, work = start.indices();
    ElemSet C(n);
    while (!work.empty()) {
      uint32_t x = work.back();
      work.pop_back();
      if (C.test(x)) continue;
      C.set(x);
      if (!C.test(G.mul(x, x))) work.push_back(G.mul(x, x));
      if (!C.test(G.inv(x))) work.push_back(G.inv(x));
      for (uint32_t m : members) {
        if (!C.test(G.mul(x, m))) work.push_back(G.mul(x, m));
        if (!C.test(G.mul(m, x))) work.push_back(G.mul(m, x));
      }
      members.push_back(x);
    }
    return C;
  };
  ElemSet triv(n);
  triv.set(0);
  std::unordered_map<ElemSet, int, ElemSetHash> seen;
  std::vector<ElemSet> out;
  std::queue<ElemSet> q;
  seen.emplace(triv, 0);
  out.push_back(triv);
  q.push(triv);
  while (!q.empty()) {
    ElemSet H = q.front();
    q.pop();
    for (uint32_t x = 0; x < n; ++x) {
      if (H.test(x)) continue;
      ElemSet U = H;
      U.set(x);
      U = close(U);
      if (seen.emplace(U, 1).second) {
        out.push_back(U);
        q.push(U);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const ElemSet& a, const ElemSet& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a < b;
  });
  return out;
}

SubgroupLattice subgroup_lattice(const FiniteGroup& G, uint32_t bound) {
  if (G.order() > bound)
    throw Error(ErrorKind::SizeLimitExceeded,
                "group order " + std::to_string(G.order()) + " exceeds bound");
  SubgroupLattice SL;
  SL.groups = subgroups(G);
  const int n = static_cast<int>(SL.groups.size());
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = "H" + std::to_string(i);
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !SL.groups[i].subset_of(SL.groups[j])) continue;
      bool cover = true;
      for (int k = 0; k < n && cover; ++k)
        if (k != i && k != j && SL.groups[i].subset_of(SL.groups[k]) &&
            SL.groups[k].subset_of(SL.groups[j]))
          cover = false;
      if (cover) covers.emplace_back(i, j);
    }
  SL.lattice = FiniteLattice::build(std::move(labels), covers);
  return SL;
}

bool is_normal(const FiniteGroup& G, const ElemSet& H) {
  for (uint32_t g = 0; g < G.order(); ++g)
    for (uint32_t h : H.indices())
      if (!H.test(G.mul(G.mul(g, h), G.inv(g)))) return false;
  return true;
}

bool quotient_is_cyclic(const FiniteGroup& G, const ElemSet& H, const ElemSet& K) {
  // K normal in H assumed; detect a coset generating H/K
  auto hm = H.indices();
  const std::size_t index = H.count() / K.count();
  for (uint32_t rep : hm) {
    std::size_t hit = 0;
    uint32_t v = 0;  // identity
    std::set<uint32_t> seen_cosets;
    for (std::size_t step = 0; step <= index; ++step) {
      // canonical coset id: least element of vK
      uint32_t least = G.order();
      for (uint32_t k : K.indices()) least = std::min<uint32_t>(least, G.mul(v, k));
      if (seen_cosets.insert(least).second) ++hit;
      v = G.mul(v, rep);
    }
    if (hit == index) return true;
  }
  return false;
}

bool is_supersolvable_group(const FiniteGroup& G, uint32_t bound) {
  if (G.order() > bound)
    throw Error(ErrorKind::SizeLimitExceeded, "group order exceeds bound");
  auto subs = subgroups(G);
  std::vector<int> normals;
  for (int i = 0; i < static_cast<int>(subs.size()); ++i)
    if (is_normal(G, subs[i])) normals.push_back(i);

  std::map<int, int> memo;  // subgroup index -> tri-state
  auto descend = [&](auto&& self, int hi) -> bool {
    if (subs[hi].count() == 1) return true;
    auto it = memo.find(hi);
    if (it != memo.end()) return it->second != 0;
    bool ok = false;
    for (int ki : normals) {
      if (ki == hi) continue;
      if (!subs[ki].subset_of(subs[hi])) continue;
      if (!quotient_is_cyclic(G, subs[hi], subs[ki])) continue;
      if (self(self, ki)) {
        ok = true;
        break;
      }
    }
    memo[hi] = ok ? 1 : 0;
    return ok;
  };
  int top = -1;
  for (int i = 0; i < static_cast<int>(subs.size()); ++i)
    if (subs[i].count() == G.order()) top = i;
  return descend(descend, top);
}

Prop3814Report check_prop_3814(const FiniteGroup& G, uint32_t group_bound,
                               int supersolvable_cap) {
  Prop3814Report rep;
  rep.group_supersolvable = is_supersolvable_group(G, group_bound);
  SubgroupLattice SL = subgroup_lattice(G, group_bound);
  rep.lattice_size = SL.lattice.size();
  rep.lattice_graded = is_graded(SL.lattice).graded;
  rep.iwasawa_ok = rep.group_supersolvable == rep.lattice_graded;
  rep.lattice_length =
      length_range(SL.lattice, SL.lattice.bottom(), SL.lattice.top()).longest;
  if (SL.lattice.size() <= supersolvable_cap) {
    rep.lattice_supersolvable = is_supersolvable(SL.lattice, supersolvable_cap);
    rep.lattice_equiv_ok = *rep.lattice_supersolvable == rep.group_supersolvable;
  }
  return rep;
}

std::vector<NamedGroup> group_catalog() {
  std::vector<NamedGroup> out;
  auto add = [&](std::string name, FiniteGroup g) {
    out.push_back({std::move(name), std::move(g)});
  };
  for (uint32_t n = 1; n <= 24; ++n) add("Z" + std::to_string(n), cyclic_group(n));
  add("Z2xZ2", abelian_group({2, 2}));
  add("Z2xZ4", abelian_group({2, 4}));
  add("Z2xZ2xZ2", abelian_group({2, 2, 2}));
  add("Z3xZ3", abelian_group({3, 3}));
  add("Z2xZ6", abelian_group({2, 6}));
  add("Z2xZ8", abelian_group({2, 8}));
  add("Z4xZ4", abelian_group({4, 4}));
  add("Z2xZ2xZ4", abelian_group({2, 2, 4}));
  add("Z2xZ2xZ2xZ2", abelian_group({2, 2, 2, 2}));
  add("Z3xZ6", abelian_group({3, 6}));
  add("Z2xZ10", abelian_group({2, 10}));
  add("Z2xZ12", abelian_group({2, 12}));
  add("Z2xZ2xZ6", abelian_group({2, 2, 6}));
  for (uint32_t n = 3; n <= 12; ++n)
    add("D" + std::to_string(n), dihedral_group(n));
  add("Q8", dicyclic_group(2));
  add("Dic3", dicyclic_group(3));
  add("Q16", dicyclic_group(4));
  add("Dic5", dicyclic_group(5));
  add("Dic6", dicyclic_group(6));
  add("SD16", semidirect_cyclic(8, 2, 3));
  add("M16", semidirect_cyclic(8, 2, 5));
  add("Z4:Z4", semidirect_cyclic(4, 4, 3));
  add("F20", semidirect_cyclic(5, 4, 2));
  add("Z7:Z3", semidirect_cyclic(7, 3, 2));
  add("Z3:Z8", semidirect_cyclic(3, 8, 2));
  add("A4", alternating_4());
  add("S4", symmetric_4());
  add("SL(2,3)", special_linear_2_3());
  add("A4xZ2", direct_product(alternating_4(), cyclic_group(2)));
  add("S3xZ3", direct_product(dihedral_group(3), cyclic_group(3)));
  add("S3xZ4", direct_product(dihedral_group(3), cyclic_group(4)));
  add("S3xZ2xZ2", direct_product(dihedral_group(3), abelian_group({2, 2})));
  add("D4xZ3", direct_product(dihedral_group(4), cyclic_group(3)));
  add("Q8xZ3", direct_product(dicyclic_group(2), cyclic_group(3)));
  add("Dic3xZ2", direct_product(dicyclic_group(3), cyclic_group(2)));
  // generalized dihedral over Z3 x Z3
  add("GD18", FiniteGroup::from_generators(
                  6, {{1, 2, 0, 3, 4, 5}, {0, 1, 2, 4, 5, 3}, {0, 2, 1, 3, 5, 4}}, 18));
  return out;
}

}  // namespace catena
