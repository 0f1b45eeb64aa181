#pragma once

#include <cstdint>
#include <vector>

#include "ep/bigint.hpp"
#include "ep/poly.hpp"

namespace ep {

/// Element of the family B. Family 'A': (2^(2^(a+2)) - 1) / (2^(2^a) - 1).
/// Family 'R': (2^(r^(b+1)) - 1) / (2^(r^b) - 1) for an odd prime r.
struct BElement {
  BigInt value;
  char family;       // 'A' or 'R'
  unsigned a = 0;    // family A
  std::uint64_t r = 0;  // family R
  unsigned b = 0;    // family R

  bool operator==(const BElement&) const = default;
};

BigInt b_family_a(unsigned a);
BigInt b_family_r(std::uint64_t r, unsigned b);

/// All elements <= bound, ascending by value.
std::vector<BElement> b_elements(const BigInt& bound);

/// An element of B dividing (2^(st) - 1) / (2^s - 1), chosen as in the
/// constructive argument: the smallest odd prime r | t if any, else t is a
/// power of two >= 4. Throws InternalError if the divisibility check fails.
BElement b_divisor(std::uint64_t s, std::uint64_t t);

/// gcd(p^a - 1, p^b - 1); throws InternalError unless it equals p^gcd(a,b) - 1.
BigInt mersenne_gcd_law(std::uint32_t p, std::uint64_t a, std::uint64_t b);

/// Whether (p^(ab) - 1)/(p^b - 1) divides (p^(abc) - 1)/(p^(bc) - 1); requires gcd(a, c) = 1.
bool quotient_divisibility_law(std::uint32_t p, std::uint64_t a, std::uint64_t b, std::uint64_t c);

/// gcd((x^2 + x)^(q+1) - 1, x^(q^2) + x + 1) over F_2 with q = 2^s.
Poly h_poly(unsigned s);

struct HPolyReport {
  unsigned s;
  Poly h;
  BigInt exponent;        // q^3 + q^2 + q + 1
  bool nonconstant;
  bool shift_invariant;
  bool roots_in_group;    // x^N = 1 mod h
  bool shifted_roots_in_group;  // (x + 1)^N = 1 mod h
};
HPolyReport check_h_poly(unsigned s);

}  // namespace ep
