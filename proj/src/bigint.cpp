#include "ep/bigint.hpp"

#include <limits>
#include <numeric>

namespace ep {

BigInt big_pow(std::uint64_t base, std::uint64_t exponent) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exponent);
  return r;
}

bool fits_u64(const BigInt& v) {
  return sgn(v) >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}

std::uint64_t to_u64(const BigInt& v) {
  if (!fits_u64(v)) throw std::overflow_error("integer does not fit in 64 bits: " + v.get_str());
  return mpz_get_ui(v.get_mpz_t());
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t multiplicative_order_mod(std::uint64_t p, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("multiplicative_order_mod: n = 0");
  if (std::gcd(p, n) != 1) throw std::invalid_argument("multiplicative_order_mod: gcd(p, n) != 1");
  if (n == 1) return 1;
  using u128 = unsigned __int128;
  const std::uint64_t base = p % n;
  std::uint64_t acc = base;
  std::uint64_t m = 1;
  while (acc != 1) {
    acc = static_cast<std::uint64_t>(static_cast<u128>(acc) * base % n);
    ++m;
  }
  return m;
}

}  // namespace ep
