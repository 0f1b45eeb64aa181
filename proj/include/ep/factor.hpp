#pragma once

#include <cstdint>
#include <vector>

#include "ep/bigint.hpp"

namespace ep {

struct PrimePower {
  BigInt prime;
  unsigned exponent;
};

struct Factorization {
  BigInt value;
  std::vector<PrimePower> factors;  // ascending primes

  BigInt product() const;
  std::vector<BigInt> primes() const;
};

/// Deterministic below 2^64, strong probable-prime test above.
bool is_prime(const BigInt& n);

/// Complete factorization of 1 <= m < 2^128: trial division below 10^6, then
/// Brent's variant of Pollard rho with a seed derived from m.
Factorization factorize(const BigInt& m);

/// Factorization of lcm(a.value, b.value) by taking maximal exponents.
Factorization lcm(const Factorization& a, const Factorization& b);

/// All positive divisors, ascending.
std::vector<BigInt> divisors(const Factorization& f);
std::vector<std::uint64_t> divisors_u64(std::uint64_t n);

}  // namespace ep
