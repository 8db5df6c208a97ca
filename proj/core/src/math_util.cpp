#include "catena/math_util.hpp"

#include <algorithm>

namespace catena {

bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<uint32_t, uint32_t>> prime_factorization(uint32_t n) {
  std::vector<std::pair<uint32_t, uint32_t>> out;
  for (uint32_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      uint32_t e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<uint32_t> divisors_sorted(uint32_t n) {
  std::vector<uint32_t> out;
  for (uint32_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

uint32_t big_omega(uint32_t n) {
  uint32_t total = 0;
  for (auto [p, e] : prime_factorization(n)) total += e;
  return total;
}

uint64_t ipow_u64(uint64_t base, uint32_t exp) {
  uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

int ilog_exact(uint64_t q, uint64_t x) {
  if (q < 2) return -1;
  int d = 0;
  uint64_t v = 1;
  while (v < x) {
    v *= q;
    ++d;
  }
  return v == x ? d : -1;
}

}  // namespace catena
