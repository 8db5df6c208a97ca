#include "catena/extension.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>

#include "catena/error.hpp"
#include "catena/math_util.hpp"

namespace catena {

RingExtension RingExtension::make(RingPtr R, RingPtr S, std::vector<uint16_t> embed) {
  if (embed.size() != R->n)
    throw Error(ErrorKind::SpecError, "embedding size mismatch");
  std::vector<uint8_t> hit(S->n, 0);
  for (uint16_t v : embed) {
    if (v >= S->n) throw Error(ErrorKind::SpecError, "embedding out of range");
    if (hit[v]) throw Error(ErrorKind::SpecError, "embedding not injective");
    hit[v] = 1;
  }
  if (embed[R->zero] != S->zero || embed[R->one] != S->one)
    throw Error(ErrorKind::SpecError, "embedding not unital");
  for (uint32_t a = 0; a < R->n; ++a)
    for (uint32_t b = 0; b < R->n; ++b) {
      if (embed[R->add(a, b)] != S->add(embed[a], embed[b]) ||
          embed[R->mul(a, b)] != S->mul(embed[a], embed[b]))
        throw Error(ErrorKind::SpecError, "embedding is not a ring homomorphism");
    }
  return RingExtension{std::move(R), std::move(S), std::move(embed)};
}

RingExtension RingExtension::from_subring(RingPtr S, const ElemSet& subset) {
  if (!is_subring(*S, subset))
    throw Error(ErrorKind::SpecError, "subset is not a subring");
  InducedRing ind = induce_ring(*S, subset);
  return RingExtension{std::make_shared<FiniteCommRing>(std::move(ind.ring)),
                       std::move(S), std::move(ind.to_ambient)};
}

ElemSet RingExtension::image() const {
  ElemSet img(S->n);
  for (uint16_t v : embed) img.set(v);
  return img;
}

ElemSet closure_subring(const FiniteCommRing& S, ElemSet start) {
  std::vector<uint32_t> members, work = start.indices();
  ElemSet C(S.n);
  while (!work.empty()) {
    uint32_t x = work.back();
    work.pop_back();
    if (C.test(x)) continue;
    C.set(x);
    uint32_t s2 = S.add(x, x), m2 = S.mul(x, x);
    if (!C.test(s2)) work.push_back(s2);
    if (!C.test(m2)) work.push_back(m2);
    for (uint32_t m : members) {
      uint32_t s = S.add(x, m), t = S.mul(x, m);
      if (!C.test(s)) work.push_back(s);
      if (!C.test(t)) work.push_back(t);
    }
    members.push_back(x);
  }
  return C;
}

bool is_subring(const FiniteCommRing& S, const ElemSet& T) {
  if (!T.test(S.one) || !T.test(S.zero)) return false;
  auto memb = T.indices();
  for (uint32_t a : memb)
    for (uint32_t b : memb)
      if (!T.test(S.add(a, b)) || !T.test(S.mul(a, b))) return false;
  return true;
}

Subring subalgebra_generated(const RingExtension& ext, const ElemSet& subset) {
  ElemSet start = ext.image();
  start |= subset;
  return Subring{closure_subring(*ext.S, start)};
}

std::vector<ElemSet> enumerate_subrings(const RingExtension& ext, uint32_t cap) {
  const FiniteCommRing& S = *ext.S;
  if (S.n > cap)
    throw Error(ErrorKind::TooLarge,
                "cannot enumerate subrings of a ring of order " + std::to_string(S.n));
  ElemSet base = closure_subring(S, ext.image());
  std::unordered_map<ElemSet, int, ElemSetHash> seen;
  std::vector<ElemSet> out;
  std::queue<ElemSet> q;
  seen.emplace(base, 0);
  out.push_back(base);
  q.push(base);
  while (!q.empty()) {
    ElemSet T = q.front();
    q.pop();
    for (uint32_t x = 0; x < S.n; ++x) {
      if (T.test(x)) continue;
      ElemSet U = T;
      U.set(x);
      U = closure_subring(S, U);
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

ElemSet conductor(const FiniteCommRing& S, const ElemSet& T, const ElemSet& V) {
  ElemSet out(S.n);
  auto vm = V.indices();
  for (uint32_t x : vm) {
    bool ok = true;
    for (uint32_t v : vm)
      if (!T.test(S.mul(x, v))) {
        ok = false;
        break;
      }
    if (ok) out.set(x);
  }
  return out;
}

ElemSet conductor(const RingExtension& ext) {
  ElemSet full(ext.S->n);
  for (uint32_t x = 0; x < ext.S->n; ++x) full.set(x);
  return conductor(*ext.S, ext.image(), full);
}

InducedRing induce_ring(const FiniteCommRing& S, const ElemSet& subset) {
  InducedRing ind;
  auto memb = subset.indices();
  const uint32_t n = static_cast<uint32_t>(memb.size());
  ind.to_ambient.assign(memb.begin(), memb.end());
  ind.from_ambient.assign(S.n, -1);
  for (uint32_t i = 0; i < n; ++i) ind.from_ambient[memb[i]] = static_cast<int32_t>(i);
  ind.ring.n = n;
  ind.ring.add_tab.resize(static_cast<std::size_t>(n) * n);
  ind.ring.mul_tab.resize(static_cast<std::size_t>(n) * n);
  for (uint32_t i = 0; i < n; ++i) {
    ind.ring.names.push_back(S.names[memb[i]]);
    for (uint32_t j = 0; j < n; ++j) {
      ind.ring.add_tab[i * n + j] =
          static_cast<uint16_t>(ind.from_ambient[S.add(memb[i], memb[j])]);
      ind.ring.mul_tab[i * n + j] =
          static_cast<uint16_t>(ind.from_ambient[S.mul(memb[i], memb[j])]);
    }
  }
  ind.ring.zero = static_cast<uint16_t>(ind.from_ambient[S.zero]);
  ind.ring.one = static_cast<uint16_t>(ind.from_ambient[S.one]);
  ind.ring.recipe = S.recipe + " subring#" + std::to_string(n);
  return ind;
}

RingExtension sub_extension(RingPtr ambient, const ElemSet& lower,
                            const ElemSet& upper) {
  if (!lower.subset_of(upper))
    throw Error(ErrorKind::SpecError, "lower subring not contained in upper");
  InducedRing up = induce_ring(*ambient, upper);
  ElemSet lowered(up.ring.n);
  for (uint32_t x : lower.indices()) lowered.set(static_cast<uint32_t>(up.from_ambient[x]));
  return RingExtension::from_subring(
      std::make_shared<FiniteCommRing>(std::move(up.ring)), lowered);
}

LocalizedExtension localize_at(const RingExtension& ext, const ElemSet& M) {
  auto maxes = maximal_ideals(*ext.R);
  bool found = false;
  for (const auto& mm : maxes)
    if (mm == M) found = true;
  if (!found) throw Error(ErrorKind::NotMaximal, "not a maximal ideal of R");

  uint32_t e = ext.R->n;  // the primitive idempotent outside M
  for (uint32_t cand : primitive_idempotents(*ext.R))
    if (!M.test(cand)) {
      e = cand;
      break;
    }
  if (e == ext.R->n)
    throw Error(ErrorKind::SpecError, "no idempotent outside the maximal ideal");

  FactorRing fr = factor_ring(*ext.R, e);
  FactorRing fs = factor_ring(*ext.S, ext.embed[e]);
  std::vector<uint16_t> emb(fr.ring.n);
  for (uint32_t i = 0; i < fr.ring.n; ++i)
    emb[i] = fs.from_parent[ext.embed[fr.to_parent[i]]];
  LocalizedExtension out;
  out.from_R = fr.from_parent;
  out.from_S = fs.from_parent;
  out.ext = RingExtension::make(std::make_shared<FiniteCommRing>(std::move(fr.ring)),
                                std::make_shared<FiniteCommRing>(std::move(fs.ring)),
                                std::move(emb));
  return out;
}

std::vector<ElemSet> support(const RingExtension& ext) {
  std::vector<ElemSet> out;
  for (const auto& M : maximal_ideals(*ext.R)) {
    LocalizedExtension loc = localize_at(ext, M);
    if (loc.ext.R->n != loc.ext.S->n) out.push_back(M);
  }
  return out;
}

ElemSet contract_to_R(const RingExtension& ext, const ElemSet& J) {
  ElemSet out(ext.R->n);
  for (uint32_t r = 0; r < ext.R->n; ++r)
    if (J.test(ext.embed[r])) out.set(r);
  return out;
}

ResidueExtension residue_extension(const RingExtension& ext, const ElemSet& Q) {
  auto maxes = maximal_ideals(*ext.S);
  bool found = false;
  for (const auto& mm : maxes)
    if (mm == Q) found = true;
  if (!found) throw Error(ErrorKind::NotMaximal, "not a maximal ideal of S");

  ElemSet P = contract_to_R(ext, Q);
  ResidueExtension out;
  out.lower = residue_field(*ext.R, P);
  out.upper = residue_field(*ext.S, Q);
  int d = ilog_exact(out.lower.field.n, out.upper.field.n);
  if (d < 0)
    throw Error(ErrorKind::SpecError, "residue field orders are not compatible");
  out.degree = static_cast<uint32_t>(d);
  return out;
}

QuotientExtension quotient_extension(const RingExtension& ext, const ElemSet& J) {
  if (!is_ideal(*ext.S, J)) throw Error(ErrorKind::NotAnIdeal, "J");
  ElemSet I = contract_to_R(ext, J);
  QuotientRing qR = quotient_ring(*ext.R, I);
  QuotientRing qS = quotient_ring(*ext.S, J);
  std::vector<uint16_t> emb(qR.ring.n);
  for (uint32_t i = 0; i < qR.ring.n; ++i) emb[i] = qS.proj[ext.embed[qR.rep[i]]];
  QuotientExtension out;
  out.proj_R = qR.proj;
  out.proj_S = qS.proj;
  out.ext = RingExtension::make(std::make_shared<FiniteCommRing>(std::move(qR.ring)),
                                std::make_shared<FiniteCommRing>(std::move(qS.ring)),
                                std::move(emb));
  return out;
}

}  // namespace catena
