#include "ep/factor.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ep/field.hpp"

namespace ep {

namespace {

constexpr std::uint64_t kTrialBound = 1000000;
constexpr std::uint64_t kRhoIterationLimit = 1ULL << 32;

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialBound, false);
    std::vector<std::uint32_t> out;
    for (std::uint64_t i = 2; i < kTrialBound; ++i) {
      if (composite[i]) continue;
      out.push_back(static_cast<std::uint32_t>(i));
      for (std::uint64_t j = i * i; j < kTrialBound; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

// Brent's cycle detection on x -> x^2 + c mod n; returns a nontrivial factor
// of composite n.
BigInt rho(const BigInt& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  BigInt seed = n % 1000003;
  std::uint64_t total = 0;
  for (unsigned long c = 1;; ++c) {
    BigInt y = (seed + c) % n;
    BigInt x, ys, q = 1, g = 1;
    std::uint64_t r = 1;
    const std::uint64_t m = 128;
    while (g == 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = (y * y + c) % n;
      std::uint64_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        const std::uint64_t steps = std::min(m, r - k);
        for (std::uint64_t i = 0; i < steps; ++i) {
          y = (y * y + c) % n;
          BigInt diff = x - y;
          q = (q * abs(diff)) % n;
        }
        g = gcd(q, n);
        k += steps;
      }
      r *= 2;
      total += r;
      if (total > kRhoIterationLimit) throw std::runtime_error("factorization exceeded the iteration budget");
    }
    if (g == n) {
      // Backtrack one step at a time from the last saved point.
      do {
        ys = (ys * ys + c) % n;
        BigInt diff = x - ys;
        g = gcd(abs(diff), n);
      } while (g == 1);
    }
    if (g != n) return g;
    seed += 1;
  }
}

void split(const BigInt& n, std::map<BigInt, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  const BigInt d = rho(n);
  split(d, out);
  split(n / d, out);
}

}  // namespace

BigInt Factorization::product() const {
  BigInt r = 1;
  for (const auto& pp : factors) {
    BigInt t;
    mpz_pow_ui(t.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
    r *= t;
  }
  return r;
}

std::vector<BigInt> Factorization::primes() const {
  std::vector<BigInt> out;
  for (const auto& pp : factors) out.push_back(pp.prime);
  return out;
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  if (fits_u64(n)) return is_prime_u64(to_u64(n));
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

Factorization factorize(const BigInt& m) {
  if (m < 1) throw std::invalid_argument("factorize needs m >= 1");
  if (mpz_sizeinbase(m.get_mpz_t(), 2) > 128) throw std::overflow_error("factorize supports values below 2^128");
  std::map<BigInt, unsigned> found;
  BigInt rest = m;
  for (std::uint32_t p : small_primes()) {
    if (BigInt(p) * p > rest) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      ++found[BigInt(p)];
      rest /= p;
    }
  }
  if (rest > 1) {
    if (rest < BigInt(kTrialBound) * kTrialBound) {
      ++found[rest];
    } else {
      split(rest, found);
    }
  }
  Factorization f{m, {}};
  for (const auto& [prime, e] : found) f.factors.push_back({prime, e});
  return f;
}

Factorization lcm(const Factorization& a, const Factorization& b) {
  std::map<BigInt, unsigned> merged;
  for (const auto& pp : a.factors) merged[pp.prime] = std::max(merged[pp.prime], pp.exponent);
  for (const auto& pp : b.factors) merged[pp.prime] = std::max(merged[pp.prime], pp.exponent);
  Factorization f;
  for (const auto& [prime, e] : merged) f.factors.push_back({prime, e});
  f.value = f.product();
  return f;
}

std::vector<BigInt> divisors(const Factorization& f) {
  std::vector<BigInt> out{1};
  for (const auto& pp : f.factors) {
    const std::size_t base = out.size();
    BigInt power = 1;
    for (unsigned e = 1; e <= pp.exponent; ++e) {
      power *= pp.prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> divisors_u64(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace ep
