#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace catena {

/// Dense polynomials over F_p, little-endian coefficient vectors.
/// The zero polynomial is the empty vector; all entries lie in [0, p).
using FpPoly = std::vector<uint32_t>;

FpPoly fp_trim(FpPoly a);
int fp_deg(const FpPoly& a);  // -1 for zero
FpPoly fp_add(const FpPoly& a, const FpPoly& b, uint32_t p);
FpPoly fp_sub(const FpPoly& a, const FpPoly& b, uint32_t p);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b, uint32_t p);
/// Remainder of a modulo monic f.
FpPoly fp_mod(FpPoly a, const FpPoly& f, uint32_t p);
FpPoly fp_gcd(FpPoly a, FpPoly b, uint32_t p);  // monic result
/// X^e mod f (f monic).
FpPoly fp_x_powmod(uint64_t e, const FpPoly& f, uint32_t p);

bool fp_is_irreducible(const FpPoly& f, uint32_t p);

/// Lexicographically least monic irreducible of degree d over F_p, where
/// candidates are ordered by the base-p value of their lower coefficients.
FpPoly lex_least_irreducible(uint32_t p, uint32_t d);

/// "x^2+x+1" style rendering (descending powers, coefficients mod p).
std::string fp_poly_to_string(const FpPoly& f, char var = 'x');

}  // namespace catena
