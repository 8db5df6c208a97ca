#include "catena/field_tower.hpp"

#include <algorithm>

#include "catena/error.hpp"
#include "catena/math_util.hpp"

namespace catena {

FieldTower FieldTower::make(uint32_t p, uint32_t n) {
  if (!is_prime_u32(p)) throw Error(ErrorKind::NotPrime, std::to_string(p));
  if (n == 0) throw Error(ErrorKind::SpecError, "degree must be >= 1");
  uint64_t order = ipow_u64(p, n);
  if (order > (uint64_t{1} << 16))
    throw Error(ErrorKind::TooLarge, "p^n exceeds 2^16");
  FieldTower T;
  T.p = p;
  T.n = n;
  T.modulus = lex_least_irreducible(p, n);
  if (n == 1)
    T.x = (p - T.modulus[0] % p) % p;  // root of the linear modulus
  else
    T.x = p;  // the class of X
  return T;
}

uint64_t FieldTower::order() const { return ipow_u64(p, n); }

namespace {

FpPoly decode(const FieldTower& T, uint32_t a) {
  FpPoly c;
  while (a) {
    c.push_back(a % T.p);
    a /= T.p;
  }
  return c;
}

uint32_t encode(const FieldTower& T, const FpPoly& c) {
  uint32_t idx = 0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
    idx = idx * T.p + c[i];
  return idx;
}

}  // namespace

uint32_t FieldTower::add(uint32_t a, uint32_t b) const {
  return encode(*this, fp_add(decode(*this, a), decode(*this, b), p));
}

uint32_t FieldTower::sub(uint32_t a, uint32_t b) const {
  return encode(*this, fp_sub(decode(*this, a), decode(*this, b), p));
}

uint32_t FieldTower::neg(uint32_t a) const { return sub(0, a); }

uint32_t FieldTower::mul(uint32_t a, uint32_t b) const {
  return encode(*this,
                fp_mod(fp_mul(decode(*this, a), decode(*this, b), p), modulus, p));
}

uint32_t FieldTower::pow(uint32_t a, uint64_t e) const {
  uint32_t r = 1, base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

bool FieldTower::in_subfield(uint32_t a, uint32_t d) const {
  return pow(a, ipow_u64(p, d)) == a;
}

std::string FieldTower::element_name(uint32_t a) const {
  return fp_poly_to_string(decode(*this, a));
}

TowerPoly minimal_poly(const FieldTower& T, uint32_t d) {
  if (d == 0 || T.n % d != 0)
    throw Error(ErrorKind::SpecError, "d must divide the tower degree");
  const uint32_t m = T.n / d;
  TowerPoly f{1};  // monic product accumulator
  uint32_t conj = T.x;
  for (uint32_t i = 0; i < m; ++i) {
    // f *= (X - conj)
    TowerPoly g(f.size() + 1, 0);
    for (std::size_t j = 0; j < f.size(); ++j) {
      g[j + 1] = T.add(g[j + 1], f[j]);
      g[j] = T.sub(g[j], T.mul(conj, f[j]));
    }
    f = std::move(g);
    conj = T.pow(conj, ipow_u64(T.p, d));
  }
  if (conj != T.x)
    throw Error(ErrorKind::SpecError, "conjugate orbit did not close");
  for (uint32_t c : f)
    if (!T.in_subfield(c, d))
      throw Error(ErrorKind::SpecError,
                  "minimal polynomial coefficient outside the base subfield");
  return f;
}

bool tower_poly_divides(const FieldTower& T, const TowerPoly& g, const TowerPoly& f) {
  // monic g; long division of f by g, remainder must vanish
  TowerPoly r = f;
  const int dg = static_cast<int>(g.size()) - 1;
  while (static_cast<int>(r.size()) - 1 >= dg) {
    uint32_t lead = r.back();
    if (lead != 0) {
      int shift = static_cast<int>(r.size()) - 1 - dg;
      for (int i = 0; i <= dg; ++i)
        r[i + shift] = T.sub(r[i + shift], T.mul(lead, g[i]));
    }
    r.pop_back();
  }
  for (uint32_t c : r)
    if (c != 0) return false;
  return true;
}

std::string tower_poly_to_string(const FieldTower& T, const TowerPoly& f) {
  std::string out;
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
    if (f[i] == 0) continue;
    if (!out.empty()) out += "+";
    std::string coef = T.element_name(f[i]);
    if (i == 0) {
      out += coef;
    } else {
      if (f[i] != 1) out += "(" + coef + ")*";
      out += "X";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

DLatticeReport check_D_lattice(const FieldTower& T) {
  DLatticeReport rep;
  rep.divisor_lat = divisor_lattice(T.n);
  rep.omega = big_omega(T.n);

  auto divs = divisors_sorted(T.n);
  std::vector<TowerPoly> polys;
  for (uint32_t d : divs) polys.push_back(minimal_poly(T, d));

  const int k = static_cast<int>(divs.size());
  // divisibility among the minimal polynomials
  std::vector<uint8_t> div_tab(static_cast<std::size_t>(k) * k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      div_tab[i * k + j] = tower_poly_divides(T, polys[i], polys[j]) ? 1 : 0;

  rep.bijection_ok = true;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      bool field_incl = divs[j] % divs[i] == 0;  // F_{p^di} <= F_{p^dj}
      if (field_incl != static_cast<bool>(div_tab[j * k + i]))
        rep.bijection_ok = false;  // order reversal: d_i | d_j <=> f_{d_j} | f_{d_i}
      if (i != j && polys[i] == polys[j]) rep.bijection_ok = false;
    }

  // the lattice on D, ordered by divisibility (g <= f iff g | f)
  std::vector<std::string> labels;
  for (int i = 0; i < k; ++i)
    labels.push_back("f_F" + std::to_string(ipow_u64(T.p, divs[i])));
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j || !div_tab[i * k + j]) continue;
      bool cover = true;
      for (int l = 0; l < k && cover; ++l)
        if (l != i && l != j && div_tab[i * k + l] && div_tab[l * k + j])
          cover = false;
      if (cover) covers.emplace_back(i, j);
    }
  rep.d_lat = FiniteLattice::build(std::move(labels), covers);

  // covers of D correspond, reversed, to the covers of the divisor lattice
  std::vector<std::pair<int, int>> expect;
  for (auto& [a, b] : rep.divisor_lat.covers()) expect.emplace_back(b, a);
  std::sort(expect.begin(), expect.end());
  std::vector<std::pair<int, int>> got(rep.d_lat.covers());
  std::sort(got.begin(), got.end());
  rep.covers_match = expect == got;

  bool g1 = is_graded(rep.divisor_lat).graded;
  bool g2 = is_graded(rep.d_lat).graded;
  int l1 = length_range(rep.divisor_lat, rep.divisor_lat.bottom(),
                        rep.divisor_lat.top()).longest;
  int l2 = length_range(rep.d_lat, rep.d_lat.bottom(), rep.d_lat.top()).longest;
  rep.graded_match = g1 && g2 && l1 == l2 && l1 == static_cast<int>(rep.omega);
  rep.length = l2;
  return rep;
}

}  // namespace catena
