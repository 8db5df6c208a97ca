#include "catena/ring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <unordered_map>

#include "catena/error.hpp"
#include "catena/math_util.hpp"

namespace catena {

namespace {

void check_cap(uint64_t order, uint32_t cap, const std::string& what) {
  if (cap > 65535) cap = 65535;
  if (order > cap)
    throw Error(ErrorKind::TooLarge,
                what + " has order " + std::to_string(order) + " > cap " +
                    std::to_string(cap));
  if (order < 2) throw Error(ErrorKind::SpecError, what + ": order must be >= 2");
}

}  // namespace

uint16_t FiniteCommRing::neg(uint32_t a) const {
  for (uint32_t b = 0; b < n; ++b)
    if (add(a, b) == zero) return static_cast<uint16_t>(b);
  throw Error(ErrorKind::SpecError, "no additive inverse");
}

bool FiniteCommRing::is_unit(uint32_t a) const {
  for (uint32_t b = 0; b < n; ++b)
    if (mul(a, b) == one) return true;
  return false;
}

uint32_t FiniteCommRing::characteristic() const {
  uint32_t k = 1;
  uint16_t v = one;
  while (v != zero) {
    v = add(v, one);
    ++k;
  }
  return k;
}

std::optional<std::string> FiniteCommRing::check_axioms() const {
  if (n < 2) return "order must be >= 2";
  if (zero == one) return "0 == 1";
  if (add_tab.size() != static_cast<std::size_t>(n) * n ||
      mul_tab.size() != static_cast<std::size_t>(n) * n)
    return "table size mismatch";
  for (uint32_t a = 0; a < n; ++a) {
    if (add(a, zero) != a) return "0 is not additively neutral";
    if (mul(a, one) != a) return "1 is not multiplicatively neutral";
    bool inv = false;
    for (uint32_t b = 0; b < n && !inv; ++b) inv = add(a, b) == zero;
    if (!inv) return "missing additive inverse";
  }
  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t b = a; b < n; ++b) {
      if (add(a, b) != add(b, a)) return "addition not commutative";
      if (mul(a, b) != mul(b, a)) return "multiplication not commutative";
    }
  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t b = 0; b < n; ++b)
      for (uint32_t c = 0; c < n; ++c) {
        if (add(add(a, b), c) != add(a, add(b, c))) return "addition not associative";
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          return "multiplication not associative";
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
          return "distributivity fails";
      }
  return std::nullopt;
}

void FiniteCommRing::validate() const {
  if (auto err = check_axioms())
    throw Error(ErrorKind::SpecError, recipe + ": " + *err);
}

FiniteCommRing ring_zmod(uint32_t n, uint32_t cap) {
  check_cap(n, cap, "Z/" + std::to_string(n));
  FiniteCommRing R;
  R.n = n;
  R.zero = 0;
  R.one = 1;
  R.recipe = "Z" + std::to_string(n);
  R.add_tab.resize(static_cast<std::size_t>(n) * n);
  R.mul_tab.resize(static_cast<std::size_t>(n) * n);
  for (uint32_t a = 0; a < n; ++a) {
    R.names.push_back(std::to_string(a));
    for (uint32_t b = 0; b < n; ++b) {
      R.add_tab[a * n + b] = static_cast<uint16_t>((a + b) % n);
      R.mul_tab[a * n + b] = static_cast<uint16_t>((a * b) % n);
    }
  }
  R.validate();
  return R;
}

FiniteCommRing ring_gf(uint32_t p, const FpPoly& f, uint32_t cap) {
  if (!is_prime_u32(p)) throw Error(ErrorKind::NotPrime, std::to_string(p));
  if (f.size() < 2 || f.back() != 1)
    throw Error(ErrorKind::SpecError, "gf modulus must be monic of degree >= 1");
  if (!fp_is_irreducible(f, p))
    throw Error(ErrorKind::NotIrreducible, fp_poly_to_string(f));
  const uint32_t d = static_cast<uint32_t>(f.size()) - 1;
  const uint64_t order = ipow_u64(p, d);
  check_cap(order, cap, "GF(" + std::to_string(p) + "^" + std::to_string(d) + ")");

  const uint32_t n = static_cast<uint32_t>(order);
  auto decode = [&](uint32_t idx) {
    FpPoly c(d, 0);
    for (uint32_t i = 0; i < d; ++i) {
      c[i] = idx % p;
      idx /= p;
    }
    return c;
  };
  auto encode = [&](const FpPoly& c) {
    uint32_t idx = 0;
    for (int i = static_cast<int>(d) - 1; i >= 0; --i)
      idx = idx * p + (i < static_cast<int>(c.size()) ? c[i] : 0);
    return idx;
  };

  FiniteCommRing R;
  R.n = n;
  R.zero = 0;
  R.one = 1;
  R.recipe = "F" + std::to_string(order);
  R.add_tab.resize(static_cast<std::size_t>(n) * n);
  R.mul_tab.resize(static_cast<std::size_t>(n) * n);
  for (uint32_t a = 0; a < n; ++a) {
    R.names.push_back(fp_poly_to_string(fp_trim(decode(a))));
    for (uint32_t b = 0; b < n; ++b) {
      R.add_tab[a * n + b] =
          static_cast<uint16_t>(encode(fp_add(decode(a), decode(b), p)));
      R.mul_tab[a * n + b] = static_cast<uint16_t>(
          encode(fp_mod(fp_mul(decode(a), decode(b), p), f, p)));
    }
  }
  R.validate();
  return R;
}

FiniteCommRing ring_gf(uint32_t p, uint32_t deg, uint32_t cap) {
  if (!is_prime_u32(p)) throw Error(ErrorKind::NotPrime, std::to_string(p));
  if (deg == 0) throw Error(ErrorKind::SpecError, "gf degree must be >= 1");
  return ring_gf(p, lex_least_irreducible(p, deg), cap);
}

FiniteCommRing ring_product(const std::vector<FiniteCommRing>& factors, uint32_t cap) {
  if (factors.empty()) throw Error(ErrorKind::SpecError, "empty product");
  uint64_t order = 1;
  for (const auto& f : factors) order *= f.n;
  check_cap(order, cap, "product");

  const uint32_t n = static_cast<uint32_t>(order);
  const int k = static_cast<int>(factors.size());
  auto decode = [&](uint32_t idx) {
    std::vector<uint32_t> c(k);
    for (int i = k - 1; i >= 0; --i) {
      c[i] = idx % factors[i].n;
      idx /= factors[i].n;
    }
    return c;
  };

  FiniteCommRing R;
  R.n = n;
  R.add_tab.resize(static_cast<std::size_t>(n) * n);
  R.mul_tab.resize(static_cast<std::size_t>(n) * n);
  for (uint32_t a = 0; a < n; ++a) {
    auto ca = decode(a);
    std::string nm = "(";
    for (int i = 0; i < k; ++i) {
      if (i) nm += ",";
      nm += factors[i].names[ca[i]];
    }
    R.names.push_back(nm + ")");
    for (uint32_t b = 0; b < n; ++b) {
      auto cb = decode(b);
      uint32_t s = 0, m = 0;
      for (int i = 0; i < k; ++i) {
        s = s * factors[i].n + factors[i].add(ca[i], cb[i]);
        m = m * factors[i].n + factors[i].mul(ca[i], cb[i]);
      }
      R.add_tab[a * n + b] = static_cast<uint16_t>(s);
      R.mul_tab[a * n + b] = static_cast<uint16_t>(m);
    }
  }
  std::vector<uint32_t> zs(k), os(k);
  for (int i = 0; i < k; ++i) {
    zs[i] = factors[i].zero;
    os[i] = factors[i].one;
  }
  R.zero = static_cast<uint16_t>(product_index(factors, zs));
  R.one = static_cast<uint16_t>(product_index(factors, os));
  std::string rec;
  for (int i = 0; i < k; ++i) {
    if (i) rec += "x";
    rec += factors[i].recipe;
  }
  R.recipe = rec;
  R.validate();
  return R;
}

uint32_t product_index(const std::vector<FiniteCommRing>& factors,
                       const std::vector<uint32_t>& coords) {
  uint32_t idx = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) idx = idx * factors[i].n + coords[i];
  return idx;
}

ElemSet ideal_generated(const FiniteCommRing& R, const std::vector<uint32_t>& gens) {
  // all multiples, then the additive closure
  ElemSet mult(R.n);
  mult.set(R.zero);
  for (uint32_t g : gens)
    for (uint32_t r = 0; r < R.n; ++r) mult.set(R.mul(r, g));
  ElemSet I(R.n);
  std::vector<uint32_t> members, work = mult.indices();
  while (!work.empty()) {
    uint32_t x = work.back();
    work.pop_back();
    if (I.test(x)) continue;
    I.set(x);
    for (uint32_t m : members) {
      uint32_t s = R.add(x, m);
      if (!I.test(s)) work.push_back(s);
    }
    members.push_back(x);
  }
  return I;
}

bool is_ideal(const FiniteCommRing& R, const ElemSet& I) {
  if (!I.test(R.zero)) return false;
  auto members = I.indices();
  for (uint32_t a : members) {
    for (uint32_t b : members)
      if (!I.test(R.add(a, b))) return false;
    for (uint32_t r = 0; r < R.n; ++r)
      if (!I.test(R.mul(r, a))) return false;
  }
  return true;
}

std::vector<ElemSet> all_ideals(const FiniteCommRing& R) {
  std::unordered_map<ElemSet, int, ElemSetHash> seen;
  std::vector<ElemSet> out;
  std::queue<ElemSet> q;
  ElemSet zero = ideal_generated(R, {});
  seen.emplace(zero, 0);
  out.push_back(zero);
  q.push(zero);
  while (!q.empty()) {
    ElemSet I = q.front();
    q.pop();
    for (uint32_t x = 0; x < R.n; ++x) {
      if (I.test(x)) continue;
      auto gens = I.indices();
      gens.push_back(x);
      ElemSet J = ideal_generated(R, gens);
      if (seen.emplace(J, 1).second) {
        out.push_back(J);
        q.push(J);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const ElemSet& a, const ElemSet& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a < b;
  });
  return out;
}

FiniteCommRing ring_quotient(const FiniteCommRing& base,
                             const std::vector<uint32_t>& ideal_gens, uint32_t cap) {
  for (uint32_t g : ideal_gens)
    if (g >= base.n) throw Error(ErrorKind::SpecError, "generator out of range");
  ElemSet I = ideal_generated(base, ideal_gens);
  QuotientRing q = quotient_ring(base, I);
  check_cap(q.ring.n, cap, "quotient");
  std::string rec = base.recipe + "/(";
  for (std::size_t i = 0; i < ideal_gens.size(); ++i) {
    if (i) rec += ",";
    rec += base.names[ideal_gens[i]];
  }
  q.ring.recipe = rec + ")";
  return q.ring;
}

FiniteCommRing ring_poly_quotient(const FiniteCommRing& base,
                                  const std::vector<uint32_t>& f, uint32_t cap) {
  if (f.size() < 2 || f.back() != base.one)
    throw Error(ErrorKind::SpecError, "poly modulus must be monic of degree >= 1");
  const uint32_t d = static_cast<uint32_t>(f.size()) - 1;
  const uint64_t order = ipow_u64(base.n, d);
  check_cap(order, cap, "poly quotient");
  const uint32_t n = static_cast<uint32_t>(order);

  using BPoly = std::vector<uint32_t>;  // base-ring indices, little-endian, length d
  auto decode = [&](uint32_t idx) {
    BPoly c(d, base.zero);
    for (uint32_t i = 0; i < d; ++i) {
      c[i] = idx % base.n;
      idx /= base.n;
    }
    return c;
  };
  auto encode = [&](const BPoly& c) {
    uint32_t idx = 0;
    for (int i = static_cast<int>(d) - 1; i >= 0; --i) idx = idx * base.n + c[i];
    return idx;
  };
  auto reduce = [&](BPoly c) {  // length up to 2d-1 -> length d, mod f
    for (int i = static_cast<int>(c.size()) - 1; i >= static_cast<int>(d); --i) {
      uint32_t lead = c[i];
      if (lead == base.zero) continue;
      c[i] = base.zero;
      // t^i = t^(i-d) * t^d = -t^(i-d) * (f - t^d)
      for (uint32_t j = 0; j < d; ++j) {
        uint32_t sub = base.mul(lead, f[j]);
        c[i - d + j] = base.sub(c[i - d + j], sub);
      }
    }
    c.resize(d, base.zero);
    return c;
  };

  FiniteCommRing R;
  R.n = n;
  R.add_tab.resize(static_cast<std::size_t>(n) * n);
  R.mul_tab.resize(static_cast<std::size_t>(n) * n);
  auto name_of = [&](const BPoly& c) {
    std::string s;
    for (int i = static_cast<int>(d) - 1; i >= 0; --i) {
      if (c[i] == base.zero) continue;
      if (!s.empty()) s += "+";
      std::string coef = base.names[c[i]];
      if (i == 0) {
        s += coef;
      } else {
        if (c[i] != base.one) s += coef + "*";
        s += "t";
        if (i > 1) s += "^" + std::to_string(i);
      }
    }
    return s.empty() ? std::string("0") : s;
  };
  for (uint32_t a = 0; a < n; ++a) {
    auto ca = decode(a);
    R.names.push_back(name_of(ca));
    for (uint32_t b = 0; b < n; ++b) {
      auto cb = decode(b);
      BPoly s(d);
      for (uint32_t i = 0; i < d; ++i) s[i] = base.add(ca[i], cb[i]);
      BPoly m(2 * d - 1, base.zero);
      for (uint32_t i = 0; i < d; ++i)
        for (uint32_t j = 0; j < d; ++j)
          m[i + j] = base.add(m[i + j], base.mul(ca[i], cb[j]));
      R.add_tab[a * n + b] = static_cast<uint16_t>(encode(s));
      R.mul_tab[a * n + b] = static_cast<uint16_t>(encode(reduce(std::move(m))));
    }
  }
  {
    BPoly z(d, base.zero), o(d, base.zero);
    o[0] = base.one;
    R.zero = static_cast<uint16_t>(encode(z));
    R.one = static_cast<uint16_t>(encode(o));
  }
  std::string fs;
  for (int i = static_cast<int>(d); i >= 0; --i) {
    if (f[i] == base.zero) continue;
    if (!fs.empty()) fs += "+";
    if (i == 0) {
      fs += base.names[f[i]];
    } else {
      if (f[i] != base.one) fs += base.names[f[i]] + "*";
      fs += "t";
      if (i > 1) fs += "^" + std::to_string(i);
    }
  }
  R.recipe = base.recipe + "[t]/(" + fs + ")";
  R.validate();
  return R;
}

ModuleSpec module_free(const FiniteCommRing& R, uint32_t rank) {
  if (rank == 0) {
    ModuleSpec M;
    M.size = 1;
    M.add_tab = {0};
    M.action_tab.assign(R.n, 0);
    M.names = {"0"};
    M.desc = "0";
    return M;
  }
  uint64_t size = ipow_u64(R.n, rank);
  if (size > 65535) throw Error(ErrorKind::TooLarge, "module too large");
  ModuleSpec M;
  M.size = static_cast<uint32_t>(size);
  auto decode = [&](uint32_t idx) {
    std::vector<uint32_t> c(rank);
    for (uint32_t i = 0; i < rank; ++i) {
      c[i] = idx % R.n;
      idx /= R.n;
    }
    return c;
  };
  auto encode = [&](const std::vector<uint32_t>& c) {
    uint32_t idx = 0;
    for (int i = static_cast<int>(rank) - 1; i >= 0; --i) idx = idx * R.n + c[i];
    return idx;
  };
  M.add_tab.resize(static_cast<std::size_t>(M.size) * M.size);
  M.action_tab.resize(static_cast<std::size_t>(R.n) * M.size);
  for (uint32_t a = 0; a < M.size; ++a) {
    auto ca = decode(a);
    std::string nm;
    if (rank == 1) {
      nm = R.names[ca[0]];
    } else {
      nm = "(";
      for (uint32_t i = 0; i < rank; ++i) {
        if (i) nm += ",";
        nm += R.names[ca[i]];
      }
      nm += ")";
    }
    M.names.push_back(nm);
    for (uint32_t b = 0; b < M.size; ++b) {
      auto cb = decode(b);
      std::vector<uint32_t> s(rank);
      for (uint32_t i = 0; i < rank; ++i) s[i] = R.add(ca[i], cb[i]);
      M.add_tab[a * M.size + b] = static_cast<uint16_t>(encode(s));
    }
    for (uint32_t r = 0; r < R.n; ++r) {
      std::vector<uint32_t> s(rank);
      for (uint32_t i = 0; i < rank; ++i) s[i] = R.mul(r, ca[i]);
      M.action_tab[r * M.size + a] = static_cast<uint16_t>(encode(s));
    }
  }
  M.desc = R.recipe + (rank > 1 ? "^" + std::to_string(rank) : "");
  return M;
}

ModuleSpec module_quotient(const FiniteCommRing& R,
                           const std::vector<uint32_t>& ideal_gens) {
  ElemSet I = ideal_generated(R, ideal_gens);
  QuotientRing q = quotient_ring(R, I);
  ModuleSpec M;
  M.size = q.ring.n;
  M.add_tab = q.ring.add_tab;
  M.names = q.ring.names;
  M.action_tab.resize(static_cast<std::size_t>(R.n) * M.size);
  for (uint32_t r = 0; r < R.n; ++r)
    for (uint32_t m = 0; m < M.size; ++m)
      M.action_tab[r * M.size + m] = q.proj[R.mul(r, q.rep[m])];
  std::string gens;
  for (std::size_t i = 0; i < ideal_gens.size(); ++i) {
    if (i) gens += ",";
    gens += R.names[ideal_gens[i]];
  }
  M.desc = R.recipe + "/(" + gens + ")";
  return M;
}

FiniteCommRing idealization(const FiniteCommRing& R, const ModuleSpec& M,
                            uint32_t cap) {
  if (M.size == 0 || M.add_tab.size() != static_cast<std::size_t>(M.size) * M.size ||
      M.action_tab.size() != static_cast<std::size_t>(R.n) * M.size)
    throw Error(ErrorKind::NotAModule, "malformed module tables");
  auto madd = [&](uint32_t a, uint32_t b) { return M.add_tab[a * M.size + b]; };
  auto act = [&](uint32_t r, uint32_t m) { return M.action_tab[r * M.size + m]; };
  // module axioms
  for (uint32_t a = 0; a < M.size; ++a) {
    if (madd(a, 0) != a) throw Error(ErrorKind::NotAModule, "0 not neutral");
    if (act(R.one, a) != a) throw Error(ErrorKind::NotAModule, "1 does not act as id");
    if (act(R.zero, a) != 0) throw Error(ErrorKind::NotAModule, "0 does not annihilate");
    bool inv = false;
    for (uint32_t b = 0; b < M.size && !inv; ++b) inv = madd(a, b) == 0;
    if (!inv) throw Error(ErrorKind::NotAModule, "missing inverse");
    for (uint32_t b = 0; b < M.size; ++b) {
      if (madd(a, b) != madd(b, a)) throw Error(ErrorKind::NotAModule, "not abelian");
      for (uint32_t c = 0; c < M.size; ++c)
        if (madd(madd(a, b), c) != madd(a, madd(b, c)))
          throw Error(ErrorKind::NotAModule, "addition not associative");
    }
  }
  for (uint32_t r = 0; r < R.n; ++r)
    for (uint32_t a = 0; a < M.size; ++a) {
      for (uint32_t b = 0; b < M.size; ++b)
        if (act(r, madd(a, b)) != madd(act(r, a), act(r, b)))
          throw Error(ErrorKind::NotAModule, "action not additive in the module");
      for (uint32_t s = 0; s < R.n; ++s) {
        if (act(R.add(r, s), a) != madd(act(r, a), act(s, a)))
          throw Error(ErrorKind::NotAModule, "action not additive in scalars");
        if (act(R.mul(r, s), a) != act(r, act(s, a)))
          throw Error(ErrorKind::NotAModule, "action not associative");
      }
    }

  uint64_t order = static_cast<uint64_t>(R.n) * M.size;
  check_cap(order, cap, "idealization");
  const uint32_t n = static_cast<uint32_t>(order);
  FiniteCommRing A;
  A.n = n;
  A.add_tab.resize(static_cast<std::size_t>(n) * n);
  A.mul_tab.resize(static_cast<std::size_t>(n) * n);
  auto enc = [&](uint32_t r, uint32_t m) { return r * M.size + m; };
  for (uint32_t r = 0; r < R.n; ++r)
    for (uint32_t m = 0; m < M.size; ++m) {
      A.names.push_back("(" + R.names[r] + "," + M.names[m] + ")");
      for (uint32_t s = 0; s < R.n; ++s)
        for (uint32_t k = 0; k < M.size; ++k) {
          A.add_tab[enc(r, m) * n + enc(s, k)] =
              static_cast<uint16_t>(enc(R.add(r, s), madd(m, k)));
          A.mul_tab[enc(r, m) * n + enc(s, k)] = static_cast<uint16_t>(
              enc(R.mul(r, s), madd(act(r, k), act(s, m))));
        }
    }
  A.zero = static_cast<uint16_t>(enc(R.zero, 0));
  A.one = static_cast<uint16_t>(enc(R.one, 0));
  A.recipe = R.recipe + "(+)" + M.desc;
  A.validate();
  return A;
}

std::vector<uint32_t> idempotents(const FiniteCommRing& R) {
  std::vector<uint32_t> out;
  for (uint32_t e = 0; e < R.n; ++e)
    if (R.mul(e, e) == e) out.push_back(e);
  return out;
}

std::vector<uint32_t> primitive_idempotents(const FiniteCommRing& R) {
  auto all = idempotents(R);
  std::vector<uint32_t> out;
  for (uint32_t e : all) {
    if (e == R.zero) continue;
    bool prim = true;
    for (uint32_t f : all) {
      uint16_t fe = R.mul(f, e);
      if (fe != R.zero && fe != e) {
        prim = false;
        break;
      }
    }
    if (prim) out.push_back(e);
  }
  return out;
}

FactorRing factor_ring(const FiniteCommRing& R, uint32_t idempotent) {
  if (R.mul(idempotent, idempotent) != idempotent)
    throw Error(ErrorKind::SpecError, "not an idempotent");
  std::set<uint16_t> memb;
  for (uint32_t x = 0; x < R.n; ++x) memb.insert(R.mul(x, idempotent));
  FactorRing F;
  F.to_parent.assign(memb.begin(), memb.end());
  const uint32_t n = static_cast<uint32_t>(F.to_parent.size());
  std::vector<int32_t> pos(R.n, -1);
  for (uint32_t i = 0; i < n; ++i) pos[F.to_parent[i]] = static_cast<int32_t>(i);
  F.from_parent.resize(R.n);
  for (uint32_t x = 0; x < R.n; ++x)
    F.from_parent[x] = static_cast<uint16_t>(pos[R.mul(x, idempotent)]);
  F.ring.n = n;
  F.ring.add_tab.resize(static_cast<std::size_t>(n) * n);
  F.ring.mul_tab.resize(static_cast<std::size_t>(n) * n);
  for (uint32_t i = 0; i < n; ++i) {
    F.ring.names.push_back(R.names[F.to_parent[i]]);
    for (uint32_t j = 0; j < n; ++j) {
      F.ring.add_tab[i * n + j] =
          static_cast<uint16_t>(pos[R.add(F.to_parent[i], F.to_parent[j])]);
      F.ring.mul_tab[i * n + j] =
          static_cast<uint16_t>(pos[R.mul(F.to_parent[i], F.to_parent[j])]);
    }
  }
  F.ring.zero = static_cast<uint16_t>(pos[R.zero]);
  F.ring.one = static_cast<uint16_t>(pos[idempotent]);
  F.ring.recipe = R.recipe + "@" + R.names[idempotent];
  if (F.ring.n >= 2) F.ring.validate();
  return F;
}

std::vector<ElemSet> maximal_ideals(const FiniteCommRing& R) {
  std::vector<ElemSet> out;
  for (uint32_t e : primitive_idempotents(R)) {
    FactorRing F = factor_ring(R, e);
    // units of R*e
    std::vector<uint8_t> unit(F.ring.n, 0);
    for (uint32_t u = 0; u < F.ring.n; ++u)
      for (uint32_t v = 0; v < F.ring.n; ++v)
        if (F.ring.mul(u, v) == F.ring.one) {
          unit[u] = 1;
          break;
        }
    ElemSet M(R.n);
    for (uint32_t x = 0; x < R.n; ++x)
      if (!unit[F.from_parent[x]]) M.set(x);
    out.push_back(M);
  }
  return out;
}

std::vector<ElemSet> spec_ideals(const FiniteCommRing& R) { return maximal_ideals(R); }

QuotientRing quotient_ring(const FiniteCommRing& R, const ElemSet& I) {
  if (!is_ideal(R, I)) throw Error(ErrorKind::NotAnIdeal, "quotient by a non-ideal");
  QuotientRing Q;
  Q.proj.assign(R.n, 0xffff);
  auto ideal = I.indices();
  for (uint32_t x = 0; x < R.n; ++x) {
    if (Q.proj[x] != 0xffff) continue;
    uint16_t id = static_cast<uint16_t>(Q.rep.size());
    Q.rep.push_back(static_cast<uint16_t>(x));
    for (uint32_t i : ideal) Q.proj[R.add(x, i)] = id;
  }
  const uint32_t n = static_cast<uint32_t>(Q.rep.size());
  Q.ring.n = n;
  Q.ring.add_tab.resize(static_cast<std::size_t>(n) * n);
  Q.ring.mul_tab.resize(static_cast<std::size_t>(n) * n);
  for (uint32_t i = 0; i < n; ++i) {
    Q.ring.names.push_back(R.names[Q.rep[i]]);
    for (uint32_t j = 0; j < n; ++j) {
      Q.ring.add_tab[i * n + j] = Q.proj[R.add(Q.rep[i], Q.rep[j])];
      Q.ring.mul_tab[i * n + j] = Q.proj[R.mul(Q.rep[i], Q.rep[j])];
    }
  }
  Q.ring.zero = Q.proj[R.zero];
  Q.ring.one = Q.proj[R.one];
  Q.ring.recipe = R.recipe + "/I" + std::to_string(I.count());
  if (Q.ring.n >= 2) Q.ring.validate();
  return Q;
}

bool is_field(const FiniteCommRing& R) {
  for (uint32_t a = 0; a < R.n; ++a)
    if (a != R.zero && !R.is_unit(a)) return false;
  return true;
}

bool is_local(const FiniteCommRing& R) { return maximal_ideals(R).size() == 1; }

ResidueField residue_field(const FiniteCommRing& R, const ElemSet& M) {
  QuotientRing q = quotient_ring(R, M);
  if (!is_field(q.ring))
    throw Error(ErrorKind::NotMaximal, "quotient is not a field");
  ResidueField out;
  out.p = q.ring.characteristic();
  int d = ilog_exact(out.p, q.ring.n);
  if (d < 0) throw Error(ErrorKind::SpecError, "residue field order not a prime power");
  out.deg = static_cast<uint32_t>(d);
  out.field = std::move(q.ring);
  return out;
}

namespace {

// Greedy generating sequence: elements that successively enlarge the closure.
std::vector<uint32_t> generating_sequence(const FiniteCommRing& A) {
  auto closure = [&](const std::vector<uint32_t>& gens) {
    ElemSet C(A.n);
    std::vector<uint32_t> members, work = gens;
    work.push_back(A.zero);
    work.push_back(A.one);
    while (!work.empty()) {
      uint32_t x = work.back();
      work.pop_back();
      if (C.test(x)) continue;
      C.set(x);
      for (uint32_t m : members) {
        if (!C.test(A.add(x, m))) work.push_back(A.add(x, m));
        if (!C.test(A.mul(x, m))) work.push_back(A.mul(x, m));
      }
      if (!C.test(A.add(x, x))) work.push_back(A.add(x, x));
      if (!C.test(A.mul(x, x))) work.push_back(A.mul(x, x));
      members.push_back(x);
    }
    return C;
  };
  std::vector<uint32_t> gens;
  ElemSet C = closure(gens);
  for (uint32_t x = 0; x < A.n; ++x) {
    if (C.test(x)) continue;
    gens.push_back(x);
    C = closure(gens);
  }
  return gens;
}

bool extend_iso(const FiniteCommRing& A, const FiniteCommRing& B,
                const std::vector<uint32_t>& gens, std::size_t k,
                std::vector<int32_t>& map) {
  if (k == gens.size()) {
    // map is total on the closure of the generators == all of A
    std::vector<uint8_t> hit(B.n, 0);
    for (uint32_t a = 0; a < A.n; ++a) {
      if (map[a] < 0) return false;
      if (hit[map[a]]) return false;
      hit[map[a]] = 1;
    }
    return true;
  }
  uint32_t g = gens[k];
  for (uint32_t img = 0; img < B.n; ++img) {
    std::vector<int32_t> m = map;
    m[g] = static_cast<int32_t>(img);
    // propagate: close under +/* wherever both operands are mapped
    bool consistent = true;
    bool changed = true;
    while (changed && consistent) {
      changed = false;
      for (uint32_t a = 0; a < A.n && consistent; ++a) {
        if (m[a] < 0) continue;
        for (uint32_t b = 0; b < A.n; ++b) {
          if (m[b] < 0) continue;
          uint32_t s = A.add(a, b), t = A.mul(a, b);
          int32_t ms = B.add(m[a], m[b]), mt = B.mul(m[a], m[b]);
          if (m[s] < 0) {
            m[s] = ms;
            changed = true;
          } else if (m[s] != ms) {
            consistent = false;
            break;
          }
          if (m[t] < 0) {
            m[t] = mt;
            changed = true;
          } else if (m[t] != mt) {
            consistent = false;
            break;
          }
        }
      }
    }
    if (consistent && extend_iso(A, B, gens, k + 1, m)) {
      map = m;
      return true;
    }
  }
  return false;
}

}  // namespace

bool rings_isomorphic(const FiniteCommRing& A, const FiniteCommRing& B) {
  if (A.n != B.n) return false;
  if (A.characteristic() != B.characteristic()) return false;
  auto gens = generating_sequence(A);
  std::vector<int32_t> map(A.n, -1);
  map[A.zero] = B.zero;
  map[A.one] = B.one;
  // close the prime subring first
  bool changed = true;
  while (changed) {
    changed = false;
    for (uint32_t a = 0; a < A.n; ++a) {
      if (map[a] < 0) continue;
      for (uint32_t b = 0; b < A.n; ++b) {
        if (map[b] < 0) continue;
        uint32_t s = A.add(a, b);
        if (map[s] < 0) {
          map[s] = B.add(map[a], map[b]);
          changed = true;
        }
        uint32_t t = A.mul(a, b);
        if (map[t] < 0) {
          map[t] = B.mul(map[a], map[b]);
          changed = true;
        }
      }
    }
  }
  return extend_iso(A, B, gens, 0, map);
}

}  // namespace catena
