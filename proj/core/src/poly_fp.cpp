#include "catena/poly_fp.hpp"

#include <algorithm>

#include "catena/error.hpp"
#include "catena/math_util.hpp"

namespace catena {

FpPoly fp_trim(FpPoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

int fp_deg(const FpPoly& a) { return static_cast<int>(a.size()) - 1; }

FpPoly fp_add(const FpPoly& a, const FpPoly& b, uint32_t p) {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    uint32_t v = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
    r[i] = v % p;
  }
  return fp_trim(std::move(r));
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b, uint32_t p) {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    uint32_t v = (i < a.size() ? a[i] : 0) + p - (i < b.size() ? b[i] : 0) % p;
    r[i] = v % p;
  }
  return fp_trim(std::move(r));
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, uint32_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return fp_trim(std::move(r));
}

FpPoly fp_mod(FpPoly a, const FpPoly& f, uint32_t p) {
  a = fp_trim(std::move(a));
  const int df = fp_deg(f);
  while (fp_deg(a) >= df) {
    uint32_t lead = a.back();
    int shift = fp_deg(a) - df;
    for (int i = 0; i <= df; ++i) {
      uint32_t sub = (lead * f[i]) % p;
      a[i + shift] = (a[i + shift] + p - sub) % p;
    }
    a = fp_trim(std::move(a));
  }
  return a;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, uint32_t p) {
  a = fp_trim(std::move(a));
  b = fp_trim(std::move(b));
  while (!b.empty()) {
    // make b monic before reducing
    uint32_t lead = b.back();
    if (lead != 1) {
      uint32_t inv = 1;
      for (uint32_t v = 1; v < p; ++v)
        if ((v * lead) % p == 1) inv = v;
      for (auto& c : b) c = (c * inv) % p;
    }
    FpPoly r = fp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() != 1) {
    uint32_t lead = a.back(), inv = 1;
    for (uint32_t v = 1; v < p; ++v)
      if ((v * lead) % p == 1) inv = v;
    for (auto& c : a) c = (c * inv) % p;
  }
  return a;
}

FpPoly fp_x_powmod(uint64_t e, const FpPoly& f, uint32_t p) {
  FpPoly result{1};
  FpPoly base = fp_mod(FpPoly{0, 1}, f, p);
  while (e) {
    if (e & 1) result = fp_mod(fp_mul(result, base, p), f, p);
    base = fp_mod(fp_mul(base, base, p), f, p);
    e >>= 1;
  }
  return result;
}

bool fp_is_irreducible(const FpPoly& f, uint32_t p) {
  int d = fp_deg(f);
  if (d < 1) return false;
  if (d == 1) return true;
  // X^(p^d) == X mod f, and gcd(X^(p^(d/q)) - X, f) == 1 for prime q | d
  FpPoly x{0, 1};
  FpPoly xpow = fp_x_powmod(ipow_u64(p, static_cast<uint32_t>(d)), f, p);
  if (fp_trim(fp_sub(xpow, x, p)) != FpPoly{}) return false;
  for (auto [q, e] : prime_factorization(static_cast<uint32_t>(d))) {
    (void)e;
    FpPoly xq = fp_x_powmod(ipow_u64(p, static_cast<uint32_t>(d) / q), f, p);
    FpPoly g = fp_gcd(fp_sub(xq, x, p), f, p);
    if (fp_deg(g) != 0) return false;
  }
  return true;
}

FpPoly lex_least_irreducible(uint32_t p, uint32_t d) {
  uint64_t total = ipow_u64(p, d);
  for (uint64_t idx = 0; idx < total; ++idx) {
    FpPoly f(d + 1, 0);
    uint64_t v = idx;
    for (uint32_t i = 0; i < d; ++i) {
      f[i] = static_cast<uint32_t>(v % p);
      v /= p;
    }
    f[d] = 1;
    if (fp_is_irreducible(f, p)) return f;
  }
  throw Error(ErrorKind::NotIrreducible,
              "no irreducible polynomial found (degree " + std::to_string(d) + ")");
}

std::string fp_poly_to_string(const FpPoly& f, char var) {
  if (f.empty()) return "0";
  std::string out;
  for (int i = fp_deg(f); i >= 0; --i) {
    if (f[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(f[i]);
    } else {
      if (f[i] != 1) out += std::to_string(f[i]) + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace catena
