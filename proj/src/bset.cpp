#include "ep/bset.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ep/factor.hpp"
#include "ep/field.hpp"

namespace ep {

namespace {

BigInt two_pow_minus_one(const BigInt& e) {
  if (!e.fits_ulong_p()) throw std::overflow_error("exponent too large");
  return big_pow(2, e.get_ui()) - 1;
}

BigInt upow(std::uint64_t base, unsigned e) { return big_pow(base, e); }

}  // namespace

BigInt b_family_a(unsigned a) {
  return two_pow_minus_one(upow(2, a + 2)) / two_pow_minus_one(upow(2, a));
}

BigInt b_family_r(std::uint64_t r, unsigned b) {
  if (r < 3 || !is_prime_u64(r)) throw std::invalid_argument("family R needs an odd prime r");
  return two_pow_minus_one(upow(r, b + 1)) / two_pow_minus_one(upow(r, b));
}

std::vector<BElement> b_elements(const BigInt& bound) {
  if (bound < 1) throw std::invalid_argument("b_elements needs bound >= 1");
  std::vector<BElement> out;
  // Each family grows at least like 2^(exponent), so stopping on the first
  // value above the bound is safe.
  for (unsigned a = 0;; ++a) {
    BigInt v = b_family_a(a);
    if (v > bound) break;
    out.push_back({v, 'A', a, 0, 0});
  }
  for (std::uint64_t r = 3;; r += 2) {
    if (!is_prime_u64(r)) continue;
    if (b_family_r(r, 0) > bound) break;
    for (unsigned b = 0;; ++b) {
      BigInt v = b_family_r(r, b);
      if (v > bound) break;
      out.push_back({v, 'R', 0, r, b});
    }
  }
  std::sort(out.begin(), out.end(), [](const BElement& x, const BElement& y) { return x.value < y.value; });
  return out;
}

BElement b_divisor(std::uint64_t s, std::uint64_t t) {
  if (s < 1) throw std::invalid_argument("b_divisor needs s >= 1");
  if (t < 3) throw std::invalid_argument("b_divisor needs t >= 3");
  BElement e{};
  std::uint64_t odd = t;
  while (odd % 2 == 0) odd /= 2;
  std::uint64_t r = 0;  // smallest odd prime factor of t
  if (odd > 1) {
    r = odd;
    for (std::uint64_t d = 3; d * d <= odd; d += 2) {
      if (odd % d == 0) {
        r = d;
        break;
      }
    }
  }
  if (r != 0) {
    unsigned b = 0;
    std::uint64_t rest = s;
    while (rest % r == 0) {
      rest /= r;
      ++b;
    }
    e = {b_family_r(r, b), 'R', 0, r, b};
  } else {
    // t is a power of two, and t >= 4.
    unsigned a = 0;
    std::uint64_t rest = s;
    while (rest % 2 == 0) {
      rest /= 2;
      ++a;
    }
    e = {b_family_a(a), 'A', a, 0, 0};
  }
  const BigInt target = (big_pow(2, s * t) - 1) / (big_pow(2, s) - 1);
  if (target % e.value != 0) {
    throw InternalError("B element " + e.value.get_str() + " does not divide (2^" + std::to_string(s * t) +
                        "-1)/(2^" + std::to_string(s) + "-1)");
  }
  return e;
}

BigInt mersenne_gcd_law(std::uint32_t p, std::uint64_t a, std::uint64_t b) {
  if (a < 1 || b < 1) throw std::invalid_argument("mersenne_gcd_law needs a, b >= 1");
  const BigInt g = gcd(BigInt(big_pow(p, a) - 1), BigInt(big_pow(p, b) - 1));
  const BigInt expected = big_pow(p, std::gcd(a, b)) - 1;
  if (g != expected) {
    throw InternalError("gcd(" + std::to_string(p) + "^" + std::to_string(a) + "-1, " + std::to_string(p) + "^" +
                        std::to_string(b) + "-1) = " + g.get_str());
  }
  return g;
}

bool quotient_divisibility_law(std::uint32_t p, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  if (a < 1 || b < 1 || c < 1) throw std::invalid_argument("divisibility law needs a, b, c >= 1");
  if (std::gcd(a, c) != 1) throw std::invalid_argument("divisibility law needs gcd(a, c) = 1");
  const BigInt lhs = (big_pow(p, a * b) - 1) / (big_pow(p, b) - 1);
  const BigInt rhs = (big_pow(p, a * b * c) - 1) / (big_pow(p, b * c) - 1);
  return rhs % lhs == 0;
}

Poly h_poly(unsigned s) {
  if (s < 1 || s > 12) throw std::invalid_argument("h_poly supports 1 <= s <= 12");
  const Field f2 = prime_field(2);
  const std::uint64_t q = std::uint64_t{1} << s;
  const Poly x = Poly::x(f2);
  const Poly trinomial = Poly::monomial(f2, 1, q * q) + x + Poly::one(f2);
  const Poly x2x = Poly::monomial(f2, 1, 2) + x;
  // (x^2 + x)^(q+1) - 1 reduced modulo the trinomial first keeps degrees small.
  const Poly lhs = powmod(x2x, q + 1, trinomial).plus_constant(1);
  return gcd(trinomial, lhs);
}

HPolyReport check_h_poly(unsigned s) {
  HPolyReport r{s, h_poly(s), 0, false, false, false, false};
  const BigInt q = big_pow(2, s);
  r.exponent = q * q * q + q * q + q + 1;
  r.nonconstant = !r.h.is_constant();
  r.shift_invariant = shift_substitute(r.h, 1) == r.h;
  if (r.nonconstant) {
    const Poly x = Poly::x(r.h.field());
    r.roots_in_group = powmod(x, r.exponent, r.h).is_one();
    r.shifted_roots_in_group = powmod(x.plus_constant(1), r.exponent, r.h).is_one();
  }
  return r;
}

}  // namespace ep
