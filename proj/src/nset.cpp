#include "ep/nset.hpp"

#include <algorithm>
#include <stdexcept>

#include "ep/factor.hpp"

namespace ep {

namespace {

// r(c) -> r(c^p), which equals r(c)^p over F_p.
Poly spread_to_p(const Poly& r) {
  const std::uint32_t p = r.field()->p();
  if (r.packed()) return r * r;
  if (r.is_zero()) return r;
  std::vector<Coef> out(static_cast<std::size_t>(r.degree()) * p + 1, 0);
  for (long i = 0; i <= r.degree(); ++i) out[static_cast<std::size_t>(i) * p] = r[static_cast<std::size_t>(i)];
  return Poly(r.field(), std::move(out));
}

void require_coprime(const BigInt& n, std::uint32_t p, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + " needs n >= 1");
  if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
    throw std::invalid_argument(std::string(what) + " needs n coprime to p");
  }
}

// (x + lambda)^n mod (x^n - 1), using (x + lambda)^(p^i) = x^(p^i) + lambda and
// reducing exponents cyclically; the result is a coefficient vector of length n.
std::vector<Coef> cyclic_binomial_power(std::uint64_t n, Coef lambda, const FieldParams& f) {
  const std::uint32_t p = f.p();
  std::vector<Coef> r(n, 0), next(n);
  r[0] = 1;
  std::uint64_t rest = n;
  std::uint64_t shift = 1 % n;  // p^i mod n
  while (rest > 0) {
    const std::uint64_t digit = rest % p;
    for (std::uint64_t t = 0; t < digit; ++t) {
      for (std::uint64_t j = 0; j < n; ++j) next[j] = f.mul(lambda, r[j]);
      for (std::uint64_t j = 0; j < n; ++j) {
        std::uint64_t k = j + shift;
        if (k >= n) k -= n;
        next[k] = f.add(next[k], r[j]);
      }
      r.swap(next);
    }
    rest /= p;
    shift = static_cast<std::uint64_t>(static_cast<unsigned __int128>(shift) * p % n);
  }
  return r;
}

}  // namespace

ArtinSchreierRemainder::ArtinSchreierRemainder(std::uint32_t p) {
  const Field f = prime_field(p);
  r_.assign(p, Poly::zero(f));
  r_[0] = Poly::one(f);
}

ArtinSchreierRemainder::ArtinSchreierRemainder(std::uint32_t p, std::vector<Poly> coeffs) : r_(std::move(coeffs)) {
  if (r_.size() != p) throw std::invalid_argument("remainder needs exactly p coefficients");
  const Field f = prime_field(p);
  for (const Poly& c : r_) require_same_field(c.field(), f);
}

void ArtinSchreierRemainder::multiply_by_x() {
  const std::size_t p = r_.size();
  Poly t = std::move(r_[p - 1]);
  for (std::size_t i = p - 1; i >= 1; --i) r_[i] = std::move(r_[i - 1]);
  r_[0] = t.shifted(1);
  r_[1] += t;
}

void ArtinSchreierRemainder::raise_to_p() {
  const std::size_t p = r_.size();
  const Field& f = field();
  // Horner in (x + c): acc <- acc * (x + c) + s_i, for i = p-1 down to 0.
  std::vector<Poly> acc(p, Poly::zero(f));
  for (std::size_t i = p; i-- > 0;) {
    std::vector<Poly> next(p, Poly::zero(f));
    for (std::size_t j = 0; j < p; ++j) {
      if (acc[j].is_zero()) continue;
      next[j] += acc[j].shifted(1);
      if (j + 1 < p) next[j + 1] += acc[j];
    }
    next[0] += spread_to_p(r_[i]);
    acc = std::move(next);
  }
  r_ = std::move(acc);
}

ArtinSchreierRemainder reduce_xn(const BigInt& n, std::uint32_t p) {
  if (n < 0) throw std::invalid_argument("reduce_xn needs n >= 0");
  ArtinSchreierRemainder rem(p);
  if (n == 0) return rem;
  std::vector<unsigned> digits;
  BigInt rest = n;
  while (rest > 0) digits.push_back(static_cast<unsigned>(mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), p)));
  for (std::size_t i = digits.size(); i-- > 0;) {
    rem.raise_to_p();
    for (unsigned t = 0; t < digits[i]; ++t) rem.multiply_by_x();
  }
  return rem;
}

Poly coefficient_gcd(const std::vector<Poly>& coeffs, bool early_exit) {
  std::optional<Poly> g;
  for (const Poly& c : coeffs) {
    if (c.is_zero()) continue;
    g = g ? gcd(*g, c) : c.monic();
    if (early_exit && g->is_constant()) break;
  }
  if (!g) throw InternalError("all coefficients of the remainder vanish");
  return *g;
}

Poly coefficient_gcd_of_xn_minus_one(const ArtinSchreierRemainder& xn, bool early_exit) {
  std::vector<Poly> c = xn.coeffs();
  c[0] = c[0].plus_constant(c[0].field()->neg(1));
  // The constant-bearing entry last: the others usually shrink the gcd faster.
  std::rotate(c.begin(), c.begin() + 1, c.end());
  return coefficient_gcd(c, early_exit);
}

std::uint64_t coprime_part(std::uint64_t n, std::uint32_t p) {
  if (n == 0) throw std::invalid_argument("coprime_part of 0");
  while (n % p == 0) n /= p;
  return n;
}

BigInt coprime_part(const BigInt& n, std::uint32_t p) {
  if (n < 1) throw std::invalid_argument("coprime_part needs n >= 1");
  BigInt r = n;
  while (mpz_divisible_ui_p(r.get_mpz_t(), p)) r /= p;
  return r;
}

std::uint64_t e_value(const BigInt& n, std::uint32_t p) {
  require_coprime(n, p, "e_value");
  const Poly g = coefficient_gcd_of_xn_minus_one(reduce_xn(n, p));
  return static_cast<std::uint64_t>(p) * static_cast<std::uint64_t>(g.degree());
}

bool member(const BigInt& n, std::uint32_t p) {
  if (n < 1) throw std::invalid_argument("member needs n >= 1");
  const BigInt m = coprime_part(n, p);
  if (m == 1) return false;
  return !coefficient_gcd_of_xn_minus_one(reduce_xn(m, p), true).is_constant();
}

Poly direct_gcd(const BigInt& n, std::uint32_t p) {
  require_coprime(n, p, "direct_gcd");
  const std::uint64_t nn = to_u64(n);
  const Field f = prime_field(p);
  Poly g = Poly::x_pow_minus_one(f, nn);
  for (std::uint32_t lambda = 1; lambda < p; ++lambda) {
    if (g.is_constant()) break;
    Poly shifted_power(f);
    if (lambda == 1) {
      shifted_power = Poly(f, cyclic_binomial_power(nn, lambda, *f));
    } else {
      shifted_power = powmod(Poly::x(f).plus_constant(lambda), n, g);
    }
    g = gcd(g, shifted_power.plus_constant(f->neg(1)));
  }
  return g.monic();
}

EsetPolynomial eset_polynomial(const BigInt& n, std::uint32_t p) {
  require_coprime(n, p, "eset_polynomial");
  const Field f = prime_field(p);
  Poly g = coefficient_gcd_of_xn_minus_one(reduce_xn(n, p));
  const Poly artin = Poly::monomial(f, 1, p) - Poly::x(f);
  Poly pullback = compose(g, artin);
  return {n, p, std::move(g), std::move(pullback)};
}

std::string to_string(MemberClass c) {
  switch (c) {
    case MemberClass::nonmember: return "nonmember";
    case MemberClass::trivial_member: return "trivial-member";
    case MemberClass::primitive_member: return "primitive-member";
    case MemberClass::multiple_of_member: return "multiple-of-member";
  }
  throw InternalError("unknown member class");
}

MemberClass parse_member_class(const std::string& s) {
  if (s == "nonmember") return MemberClass::nonmember;
  if (s == "trivial-member") return MemberClass::trivial_member;
  if (s == "primitive-member") return MemberClass::primitive_member;
  if (s == "multiple-of-member") return MemberClass::multiple_of_member;
  throw std::invalid_argument("unknown class '" + s + "'");
}

std::optional<std::uint64_t> trivial_witness(std::uint64_t n, std::uint32_t p) {
  std::uint64_t power = static_cast<std::uint64_t>(p) * p;
  while (power - 1 < n) {
    if (n % (power - 1) == 0) return power - 1;
    if (power > (~std::uint64_t{0}) / p) break;
    power *= p;
  }
  return std::nullopt;
}

void classify_record(MembershipRecord& record, const MembershipOracle& is_member) {
  record.witness.reset();
  if (!record.member) {
    record.classification = MemberClass::nonmember;
    return;
  }
  if (auto w = trivial_witness(record.n, record.p)) {
    record.classification = MemberClass::trivial_member;
    record.witness = *w;
    return;
  }
  for (std::uint64_t d : divisors_u64(record.n)) {
    if (d == 1 || d == record.n) continue;
    if (is_member(d)) {
      record.classification = MemberClass::multiple_of_member;
      record.witness = d;
      return;
    }
  }
  record.classification = MemberClass::primitive_member;
}

MembershipRecord classify(std::uint64_t n, std::uint32_t p, const MembershipOracle& is_member) {
  if (n < 1) throw std::invalid_argument("classify needs n >= 1");
  MembershipRecord r;
  r.n = n;
  r.p = p;
  const std::uint64_t m = coprime_part(n, p);
  r.delegated = m != n;
  r.e = e_value(to_big(m), p);
  r.member = r.e > 0;
  classify_record(r, is_member);
  return r;
}

MembershipRecord classify(std::uint64_t n, std::uint32_t p) {
  return classify(n, p, [p](std::uint64_t d) { return member(to_big(d), p); });
}

}  // namespace ep
