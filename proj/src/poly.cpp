#include "ep/poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ep/detail/fpx.hpp"
#include "ep/detail/gf2x.hpp"

namespace ep {

// ---------------------------------------------------------------------------
// Generic coefficient kernels
// ---------------------------------------------------------------------------

namespace fpx {

void normalize(Coefs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Coefs add(const FieldParams& f, std::span<const Coef> a, std::span<const Coef> b) {
  Coefs r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const Coef x = i < a.size() ? a[i] : 0;
    const Coef y = i < b.size() ? b[i] : 0;
    r[i] = f.add(x, y);
  }
  normalize(r);
  return r;
}

Coefs sub(const FieldParams& f, std::span<const Coef> a, std::span<const Coef> b) {
  Coefs r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const Coef x = i < a.size() ? a[i] : 0;
    const Coef y = i < b.size() ? b[i] : 0;
    r[i] = f.sub(x, y);
  }
  normalize(r);
  return r;
}

Coefs mul(const FieldParams& f, std::span<const Coef> a, std::span<const Coef> b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t n = a.size() + b.size() - 1;
  Coefs r(n, 0);
  if (f.is_prime_field()) {
    // Products are below 2^32, so 64-bit accumulators never overflow here.
    std::vector<std::uint64_t> acc(n, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      const std::uint64_t ai = a[i];
      if (ai == 0) continue;
      std::uint64_t* out = acc.data() + i;
      for (std::size_t j = 0; j < b.size(); ++j) out[j] += ai * b[j];
    }
    const std::uint64_t p = f.p();
    for (std::size_t i = 0; i < n; ++i) r[i] = static_cast<Coef>(acc[i] % p);
  } else {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    }
  }
  normalize(r);
  return r;
}

namespace {

// a -= c * x^shift * b on the leading part; prime-field fast path.
inline void submul_shifted(const FieldParams& f, Coef* a, const Coef* b, std::size_t nb, Coef c) {
  if (f.is_prime_field()) {
    const Coef negc = f.neg(c);
    for (std::size_t j = 0; j < nb; ++j) a[j] = f.reduce(a[j] + negc * b[j]);
  } else {
    for (std::size_t j = 0; j < nb; ++j) a[j] = f.sub(a[j], f.mul(c, b[j]));
  }
}

}  // namespace

void divrem(const FieldParams& f, std::span<const Coef> a, std::span<const Coef> b, Coefs& q, Coefs& r) {
  if (b.empty() || b.back() == 0) throw std::domain_error("division by zero polynomial");
  r.assign(a.begin(), a.end());
  normalize(r);
  q.clear();
  if (r.size() < b.size()) return;
  const std::size_t db = b.size() - 1;
  const Coef lead_inv = f.inv(b.back());
  q.assign(r.size() - db, 0);
  for (std::size_t i = r.size(); i-- > db;) {
    if (r[i] == 0) continue;
    const Coef c = f.mul(r[i], lead_inv);
    q[i - db] = c;
    submul_shifted(f, r.data() + (i - db), b.data(), b.size(), c);
  }
  r.resize(db);
  normalize(r);
  normalize(q);
}

void rem_inplace(const FieldParams& f, Coefs& a, std::span<const Coef> b) {
  if (b.empty() || b.back() == 0) throw std::domain_error("division by zero polynomial");
  normalize(a);
  if (a.size() < b.size()) return;
  const std::size_t db = b.size() - 1;
  const Coef lead_inv = f.inv(b.back());
  for (std::size_t i = a.size(); i-- > db;) {
    if (a[i] == 0) continue;
    submul_shifted(f, a.data() + (i - db), b.data(), b.size(), f.mul(a[i], lead_inv));
  }
  a.resize(db);
  normalize(a);
}

Coefs monic(const FieldParams& f, Coefs a) {
  normalize(a);
  if (a.empty() || a.back() == 1) return a;
  const Coef inv = f.inv(a.back());
  for (Coef& c : a) c = f.mul(c, inv);
  return a;
}

Coefs gcd(const FieldParams& f, Coefs a, Coefs b) {
  normalize(a);
  normalize(b);
  while (!b.empty()) {
    rem_inplace(f, a, b);
    std::swap(a, b);
  }
  return monic(f, std::move(a));
}

}  // namespace fpx

// ---------------------------------------------------------------------------
// Poly
// ---------------------------------------------------------------------------

namespace {

void require_scalars(const Field& f) {
  if (!f) throw std::invalid_argument("polynomial needs a field");
  if (!f->has_scalars()) {
    throw std::invalid_argument("coefficient field too large for polynomial arithmetic (p^k > 2^16)");
  }
}

}  // namespace

Poly::Poly(Field field) : field_(std::move(field)) { require_scalars(field_); }

Poly::Poly(Field field, std::vector<Coef> coeffs) : field_(std::move(field)) {
  require_scalars(field_);
  const Coef q = field_->scalar_count();
  for (Coef c : coeffs) {
    if (c >= q) throw std::invalid_argument("coefficient " + std::to_string(c) + " out of range for field");
  }
  if (packed()) {
    w_.assign((coeffs.size() + 63) / 64, 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i]) w_[i / 64] |= Word{1} << (i % 64);
    }
  } else {
    c_ = std::move(coeffs);
  }
  normalize();
}

Poly Poly::constant(Field field, Coef c) { return Poly(std::move(field), std::vector<Coef>{c}); }

Poly Poly::monomial(Field field, Coef c, std::size_t degree) {
  Poly r(std::move(field));
  if (c == 0) return r;
  if (r.packed()) {
    gf2x::set_bit(r.w_, degree);
  } else {
    r.c_.assign(degree + 1, 0);
    r.c_[degree] = c;
  }
  return r;
}

Poly Poly::x_pow_minus_one(Field field, std::size_t n) {
  Poly r = monomial(field, 1, n);
  return r.plus_constant(field->neg(1));
}

Poly Poly::from_words(std::vector<Word> words) {
  Poly r(prime_field(2));
  r.w_ = std::move(words);
  r.normalize();
  return r;
}

void Poly::normalize() {
  if (packed()) {
    gf2x::normalize(w_);
  } else {
    fpx::normalize(c_);
  }
}

long Poly::degree() const noexcept {
  if (packed()) return gf2x::degree(w_);
  return static_cast<long>(c_.size()) - 1;
}

Coef Poly::operator[](std::size_t i) const noexcept {
  if (packed()) return gf2x::bit(w_, i) ? 1 : 0;
  return i < c_.size() ? c_[i] : 0;
}

Coef Poly::leading() const noexcept {
  const long d = degree();
  return d < 0 ? 0 : (*this)[static_cast<std::size_t>(d)];
}

std::vector<Coef> Poly::coefficients() const {
  if (!packed()) return c_;
  std::vector<Coef> r(static_cast<std::size_t>(degree() + 1));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = (*this)[i];
  return r;
}

const std::vector<Poly::Word>& Poly::words() const {
  if (!packed()) throw std::logic_error("packed words requested for a polynomial not over F_2");
  return w_;
}

bool Poly::operator==(const Poly& other) const {
  if (!same_field(field_, other.field_)) return false;
  return packed() ? w_ == other.w_ : c_ == other.c_;
}

Poly& Poly::operator+=(const Poly& other) {
  require_same_field(field_, other.field_);
  if (packed()) {
    gf2x::add_into(w_, other.w_);
  } else {
    c_ = fpx::add(*field_, c_, other.c_);
  }
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  require_same_field(field_, other.field_);
  if (packed()) {
    gf2x::add_into(w_, other.w_);
  } else {
    c_ = fpx::sub(*field_, c_, other.c_);
  }
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_field(a.field_, b.field_);
  Poly r(a.field_);
  if (a.packed()) {
    r.w_ = gf2x::mul(a.w_, b.w_);
  } else {
    r.c_ = fpx::mul(*a.field_, a.c_, b.c_);
  }
  return r;
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly Poly::operator-() const {
  if (packed()) return *this;
  Poly r = *this;
  for (Coef& c : r.c_) c = field_->neg(c);
  return r;
}

Poly Poly::scaled(Coef c) const {
  if (c == 0) return Poly(field_);
  if (c == 1) return *this;
  Poly r = *this;
  for (Coef& v : r.c_) v = field_->mul(v, c);
  r.normalize();
  return r;
}

Poly Poly::shifted(std::size_t s) const {
  if (is_zero() || s == 0) return *this;
  Poly r(field_);
  if (packed()) {
    r.w_ = gf2x::shift_left(w_, s);
  } else {
    r.c_.assign(s, 0);
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  }
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_->inv(leading()));
}

Poly Poly::derivative() const {
  const long d = degree();
  if (d <= 0) return Poly(field_);
  std::vector<Coef> r(static_cast<std::size_t>(d), 0);
  for (std::size_t i = 1; i <= static_cast<std::size_t>(d); ++i) {
    r[i - 1] = field_->mul((*this)[i], field_->from_int(static_cast<std::int64_t>(i % field_->p())));
  }
  return Poly(field_, std::move(r));
}

Poly Poly::plus_constant(Coef c) const {
  Poly r = *this;
  if (c == 0) return r;
  if (packed()) {
    gf2x::flip_bit(r.w_, 0);
  } else {
    if (r.c_.empty()) r.c_.push_back(0);
    r.c_[0] = field_->add(r.c_[0], c);
    r.normalize();
  }
  return r;
}

Coef Poly::eval(Coef point) const {
  Coef acc = 0;
  for (long i = degree(); i >= 0; --i) acc = field_->add(field_->mul(acc, point), (*this)[static_cast<std::size_t>(i)]);
  return acc;
}

// ---------------------------------------------------------------------------
// Division, gcd, powering
// ---------------------------------------------------------------------------

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
  require_same_field(a.field(), b.field());
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.packed()) {
    gf2x::Words q;
    gf2x::Words r;
    gf2x::divrem(a.words(), b.words(), q, r);
    return {Poly::from_words(std::move(q)), Poly::from_words(std::move(r))};
  }
  fpx::Coefs q;
  fpx::Coefs r;
  fpx::divrem(*a.field(), a.coefficients(), b.coefficients(), q, r);
  return {Poly(a.field(), std::move(q)), Poly(a.field(), std::move(r))};
}

Poly operator/(const Poly& a, const Poly& b) { return divrem(a, b).first; }

Poly operator%(const Poly& a, const Poly& b) {
  require_same_field(a.field(), b.field());
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.packed()) {
    gf2x::Words r = a.words();
    gf2x::rem_inplace(r, b.words());
    return Poly::from_words(std::move(r));
  }
  fpx::Coefs r = a.coefficients();
  fpx::rem_inplace(*a.field(), r, b.coefficients());
  return Poly(a.field(), std::move(r));
}

Poly gcd(const Poly& a, const Poly& b) {
  require_same_field(a.field(), b.field());
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
  if (a.packed()) return Poly::from_words(gf2x::gcd(a.words(), b.words()));
  return Poly(a.field(), fpx::gcd(*a.field(), a.coefficients(), b.coefficients()));
}

namespace {

template <typename BitAt>
Poly powmod_bits(const Poly& base, std::size_t nbits, BitAt bit_at, const Poly& modulus) {
  require_same_field(base.field(), modulus.field());
  if (modulus.is_constant()) throw std::domain_error("powmod needs a nonconstant modulus");
  const Poly b = base % modulus;
  const bool base_is_x = b == Poly::x(base.field());
  Poly r = Poly::one(base.field()) % modulus;
  for (std::size_t i = nbits; i-- > 0;) {
    if (r.packed()) {
      r = Poly::from_words(gf2x::sqr(r.words())) % modulus;
    } else {
      r = (r * r) % modulus;
    }
    if (bit_at(i)) r = (base_is_x ? r.shifted(1) : r * b) % modulus;
  }
  return r;
}

}  // namespace

Poly powmod(const Poly& base, const BigInt& exponent, const Poly& modulus) {
  if (sgn(exponent) < 0) throw std::domain_error("powmod with negative exponent");
  const std::size_t nbits = sgn(exponent) == 0 ? 0 : mpz_sizeinbase(exponent.get_mpz_t(), 2);
  return powmod_bits(base, nbits, [&](std::size_t i) { return mpz_tstbit(exponent.get_mpz_t(), i) != 0; },
                     modulus);
}

Poly powmod(const Poly& base, std::uint64_t exponent, const Poly& modulus) {
  const std::size_t nbits = exponent == 0 ? 0 : 64 - static_cast<std::size_t>(__builtin_clzll(exponent));
  return powmod_bits(base, nbits, [&](std::size_t i) { return ((exponent >> i) & 1) != 0; }, modulus);
}

Poly compose(const Poly& a, const Poly& b) {
  require_same_field(a.field(), b.field());
  Poly r(a.field());
  for (long i = a.degree(); i >= 0; --i) r = (r * b).plus_constant(a[static_cast<std::size_t>(i)]);
  return r;
}

Poly shift_substitute(const Poly& a, Coef lambda) {
  const Poly x_plus = Poly::x(a.field()).plus_constant(lambda);
  return compose(a, x_plus);
}

Poly reciprocal(const Poly& a) {
  if (a.is_zero() || a[0] == 0) throw std::domain_error("reciprocal needs a(0) != 0");
  std::vector<Coef> c = a.coefficients();
  std::reverse(c.begin(), c.end());
  return Poly(a.field(), std::move(c)).monic();
}

bool squarefree(const Poly& a) {
  if (a.is_zero()) throw std::domain_error("squarefree test of the zero polynomial");
  if (a.is_constant()) return true;
  const Poly d = a.derivative();
  if (d.is_zero()) return false;  // a is a p-th power
  return gcd(a, d).is_constant();
}

std::vector<DegreePart> ddf_degrees(const Poly& a) {
  if (a.is_zero() || a[0] == 0) throw std::domain_error("ddf_degrees needs a(0) != 0");
  if (!squarefree(a)) throw std::invalid_argument("ddf_degrees needs a squarefree polynomial");
  const std::uint32_t q = a.field()->scalar_count();
  const Poly x = Poly::x(a.field());
  std::vector<DegreePart> parts;
  Poly rest = a.monic();
  Poly h = x;
  unsigned d = 0;
  while (rest.degree() >= 2 * static_cast<long>(d + 1)) {
    ++d;
    h = powmod(h, std::uint64_t{q}, rest);
    const Poly g = gcd(rest, h - x);
    if (!g.is_constant()) {
      parts.push_back({d, static_cast<std::size_t>(g.degree()), g});
      rest = rest / g;
      h = h % rest;
    }
  }
  if (rest.degree() > 0) {
    parts.push_back({static_cast<unsigned>(rest.degree()), static_cast<std::size_t>(rest.degree()), rest});
  }
  return parts;
}

bool is_irreducible(const Poly& a) {
  const long n = a.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  if (a[0] == 0) return false;
  const std::uint32_t q = a.field()->scalar_count();
  const Poly f = a.monic();
  const Poly x = Poly::x(a.field());
  Poly h = x;
  for (long d = 1; 2 * d <= n; ++d) {
    h = powmod(h, std::uint64_t{q}, f);
    if (!gcd(f, h - x).is_one()) return false;
  }
  return true;
}

}  // namespace ep
