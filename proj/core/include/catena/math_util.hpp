#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace catena {

bool is_prime_u32(uint32_t n);

/// (prime, exponent) pairs, primes ascending.
std::vector<std::pair<uint32_t, uint32_t>> prime_factorization(uint32_t n);

std::vector<uint32_t> divisors_sorted(uint32_t n);

/// Number of prime factors counted with multiplicity.
uint32_t big_omega(uint32_t n);

uint64_t ipow_u64(uint64_t base, uint32_t exp);

/// Integer log: returns d with q^d == x, or -1 if x is not a power of q.
int ilog_exact(uint64_t q, uint64_t x);

}  // namespace catena
