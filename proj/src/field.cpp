#include "ep/field.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "ep/element.hpp"
#include "ep/poly.hpp"

namespace ep {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

std::vector<Coef> to_digits(Coef v, std::uint32_t p, unsigned k) {
  std::vector<Coef> d(k, 0);
  for (unsigned i = 0; i < k; ++i) {
    d[i] = v % p;
    v /= p;
  }
  return d;
}

Coef from_digits(const Poly& a, std::uint32_t p, unsigned k) {
  Coef v = 0;
  for (unsigned i = k; i-- > 0;) v = v * p + a[i];
  return v;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t sp : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % sp == 0) return n == sp;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are a deterministic witness set for all n < 2^64.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldParams::FieldParams(std::uint32_t p, unsigned k)
    : p_(p), k_(k), reciprocal_(p == 0 ? 0 : ~std::uint64_t{0} / p + 1) {
  if (p < 2 || p >= kPrimeBound || !is_prime_u64(p)) {
    throw std::invalid_argument("field characteristic must be a prime below 2^16, got " + std::to_string(p));
  }
  if (k < 1) throw std::invalid_argument("extension degree must be at least 1");
  if (k == 1) q_ = p;
}

BigInt FieldParams::order() const { return big_pow(p_, k_); }

const Poly& FieldParams::modulus() const { return *modulus_; }

Field FieldParams::prime_field() const { return k_ == 1 ? shared_from_this() : prime_; }

Coef FieldParams::add_digits(Coef a, Coef b, bool subtract) const noexcept {
  Coef r = 0;
  Coef place = 1;
  for (unsigned i = 0; i < k_; ++i) {
    const Coef da = a % p_;
    const Coef db = b % p_;
    a /= p_;
    b /= p_;
    const Coef d = subtract ? (da + p_ - db) % p_ : (da + db) % p_;
    r += d * place;
    place *= p_;
  }
  return r;
}

Coef FieldParams::inv(Coef a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  if (k_ == 1) return pow(a, p_ - 2);
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Coef FieldParams::pow(Coef a, std::uint64_t e) const noexcept {
  Coef r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Coef FieldParams::from_int(std::int64_t v) const noexcept {
  std::int64_t m = v % static_cast<std::int64_t>(p_);
  if (m < 0) m += p_;
  return static_cast<Coef>(m);
}

Coef FieldParams::pth_root(Coef a) const noexcept {
  if (k_ == 1) return a;
  // a^(p^(k-1)) inverts the Frobenius on F_{p^k}.
  Coef r = a;
  for (unsigned i = 1; i < k_; ++i) r = pow(r, p_);
  return r;
}

void FieldParams::build_tables() {
  const std::uint64_t q = big_pow(p_, k_).get_ui();
  q_ = static_cast<std::uint32_t>(q);
  const Field self = shared_from_this();
  auto mul_slow = [&](Coef a, Coef b) {
    const Poly pa(prime_, to_digits(a, p_, k_));
    const Poly pb(prime_, to_digits(b, p_, k_));
    return from_digits((pa * pb) % *modulus_, p_, k_);
  };
  std::vector<std::uint64_t> primes;
  std::uint64_t rest = q - 1;
  for (std::uint64_t d = 2; d * d <= rest; ++d) {
    if (rest % d == 0) {
      primes.push_back(d);
      while (rest % d == 0) rest /= d;
    }
  }
  if (rest > 1) primes.push_back(rest);
  auto pow_slow = [&](Coef a, std::uint64_t e) {
    Coef r = 1;
    while (e) {
      if (e & 1) r = mul_slow(r, a);
      a = mul_slow(a, a);
      e >>= 1;
    }
    return r;
  };
  Coef g = 0;
  for (Coef cand = 1; cand < q; ++cand) {
    bool ok = true;
    for (std::uint64_t l : primes) {
      if (pow_slow(cand, (q - 1) / l) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      g = cand;
      break;
    }
  }
  exp_.assign(2 * (q - 1), 0);
  log_.assign(q, 0);
  Coef cur = 1;
  for (std::uint64_t i = 0; i < q - 1; ++i) {
    exp_[i] = cur;
    exp_[i + q - 1] = cur;
    log_[cur] = static_cast<std::uint32_t>(i);
    cur = mul_slow(cur, g);
  }
}

void require_same_field(const Field& a, const Field& b) {
  if (!same_field(a, b)) throw std::invalid_argument("operands live over different fields");
}

namespace {

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::pair<std::uint32_t, unsigned>, Field>& cache() {
  static std::map<std::pair<std::uint32_t, unsigned>, Field> c;
  return c;
}

}  // namespace

Field prime_field(std::uint32_t p) { return make_field(p, 1); }

Field make_field(std::uint32_t p, unsigned k) {
  {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto it = cache().find({p, k});
    if (it != cache().end()) return it->second;
  }
  auto params = std::make_shared<FieldParams>(p, k);
  if (k == 1) {
    // x is the canonical degree-one modulus; prime-field elements reduce to constants.
    params->modulus_ = std::make_shared<const Poly>(Poly::x(params));
  } else {
    params->prime_ = make_field(p, 1);
    params->modulus_ = std::make_shared<const Poly>(find_irreducible(p, k));
    const BigInt q = params->order();
    if (q <= to_big(kScalarFieldBound)) params->build_tables();
  }
  std::lock_guard<std::mutex> lock(cache_mutex());
  auto [it, inserted] = cache().emplace(std::make_pair(p, k), params);
  return it->second;
}

}  // namespace ep
