#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace ep {

using BigInt = mpz_class;

/// Thrown when an identity that must hold by construction fails to verify.
/// The CLI maps it to exit status 3.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

BigInt big_pow(std::uint64_t base, std::uint64_t exponent);
inline BigInt to_big(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

// Throws std::overflow_error when v does not fit.
std::uint64_t to_u64(const BigInt& v);
bool fits_u64(const BigInt& v);

inline std::string to_string(const BigInt& v) { return v.get_str(); }

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

// Smallest m >= 1 with n | p^m - 1; requires gcd(n, p) = 1.
std::uint64_t multiplicative_order_mod(std::uint64_t p, std::uint64_t n);

}  // namespace ep
