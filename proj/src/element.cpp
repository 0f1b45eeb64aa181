#include "ep/element.hpp"

#include <functional>
#include <stdexcept>

namespace ep {

FieldElement::FieldElement(Field field) : field_(std::move(field)), value_(field_->prime_field()) {}

FieldElement::FieldElement(Field field, Poly value) : field_(std::move(field)), value_(std::move(value)) {}

FieldElement FieldElement::one(Field field) {
  Poly v = Poly::one(field->prime_field());
  return FieldElement(std::move(field), std::move(v));
}

FieldElement FieldElement::from_coeffs(Field field, std::vector<Coef> coeffs) {
  Poly v(field->prime_field(), std::move(coeffs));
  return from_poly(std::move(field), v);
}

FieldElement FieldElement::from_poly(Field field, const Poly& value) {
  require_same_field(value.field(), field->prime_field());
  if (field->is_prime_field()) return FieldElement(field, Poly::constant(value.field(), value.eval(0)));
  return FieldElement(field, value % field->modulus());
}

FieldElement FieldElement::from_index(Field field, const BigInt& index) {
  if (index < 0 || index >= field->order()) throw std::invalid_argument("element index out of range");
  std::vector<Coef> digits;
  BigInt rest = index;
  const unsigned long p = field->p();
  while (rest > 0) {
    digits.push_back(static_cast<Coef>(mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), p)));
  }
  return from_coeffs(std::move(field), std::move(digits));
}

FieldElement FieldElement::generator_class(Field field) {
  return from_poly(field, Poly::x(field->prime_field()));
}

std::vector<Coef> FieldElement::coefficients() const {
  std::vector<Coef> c(field_->k(), 0);
  for (unsigned i = 0; i < field_->k(); ++i) c[i] = value_[i];
  return c;
}

BigInt FieldElement::index() const {
  BigInt r = 0;
  for (long i = value_.degree(); i >= 0; --i) r = r * field_->p() + value_[static_cast<std::size_t>(i)];
  return r;
}

Coef FieldElement::scalar() const {
  if (!field_->has_scalars()) throw std::invalid_argument("field elements of this size are not scalars");
  Coef r = 0;
  for (long i = value_.degree(); i >= 0; --i) r = r * field_->p() + value_[static_cast<std::size_t>(i)];
  return r;
}

bool FieldElement::operator==(const FieldElement& other) const {
  return same_field(field_, other.field_) && value_ == other.value_;
}

FieldElement FieldElement::operator+(const FieldElement& other) const {
  require_same_field(field_, other.field_);
  return FieldElement(field_, value_ + other.value_);
}

FieldElement FieldElement::operator-(const FieldElement& other) const {
  require_same_field(field_, other.field_);
  return FieldElement(field_, value_ - other.value_);
}

FieldElement FieldElement::operator*(const FieldElement& other) const {
  require_same_field(field_, other.field_);
  Poly prod = value_ * other.value_;
  if (!field_->is_prime_field()) prod = prod % field_->modulus();
  return FieldElement(field_, std::move(prod));
}

FieldElement FieldElement::operator/(const FieldElement& other) const { return *this * other.inverse(); }

FieldElement FieldElement::operator-() const { return FieldElement(field_, -value_); }

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (field_->is_prime_field()) {
    return FieldElement(field_, Poly::constant(value_.field(), field_->inv(value_[0])));
  }
  return pow(field_->order() - 2);
}

FieldElement FieldElement::pow(const BigInt& e) const {
  if (e < 0) return inverse().pow(BigInt(-e));
  if (field_->is_prime_field()) {
    const BigInt r = BigInt(value_[0]);
    BigInt out;
    mpz_powm(out.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), BigInt(field_->p()).get_mpz_t());
    return FieldElement(field_, Poly::constant(value_.field(), static_cast<Coef>(out.get_ui())));
  }
  return FieldElement(field_, powmod(value_, e, field_->modulus()));
}

FieldElement FieldElement::pow(std::uint64_t e) const { return pow(to_big(e)); }

FieldElement FieldElement::frobenius(unsigned times) const {
  if (field_->is_prime_field()) return *this;
  FieldElement r = *this;
  for (unsigned i = 0; i < times % field_->k(); ++i) {
    r = FieldElement(field_, powmod(r.value_, std::uint64_t{field_->p()}, field_->modulus()));
  }
  return r;
}

std::size_t FieldElement::hash() const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  auto mix = [&h](std::uint64_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  if (value_.packed()) {
    for (auto w : value_.words()) mix(w);
  } else {
    for (long i = 0; i <= value_.degree(); ++i) mix(value_[static_cast<std::size_t>(i)]);
  }
  return h;
}

Poly find_irreducible(std::uint32_t p, unsigned k) {
  if (k < 1) throw std::invalid_argument("find_irreducible needs k >= 1");
  const Field fp = prime_field(p);
  if (k == 1) return Poly::x(fp);
  // c_0 is the most significant digit of the comparison, c_{k-1} the least.
  // c_0 = 0 is skipped: every such candidate is divisible by x.
  std::vector<Coef> c(k + 1, 0);
  c[0] = 1;
  c[k] = 1;
  while (true) {
    Poly candidate(fp, c);
    if (is_irreducible(candidate)) return candidate;
    unsigned i = k - 1;
    while (c[i] == p - 1) {
      c[i] = 0;
      if (i == 0) throw InternalError("no irreducible polynomial found");
      --i;
    }
    ++c[i];
  }
}

FieldElement trace(const FieldElement& x) {
  const Field& f = x.field();
  FieldElement sum = x;
  FieldElement term = x;
  for (unsigned i = 1; i < f->k(); ++i) {
    term = term.frobenius();
    sum = sum + term;
  }
  if (sum.poly().degree() > 0) throw InternalError("trace left the prime field");
  return FieldElement::from_coeffs(f->prime_field(), {sum.poly()[0]});
}

FieldElement find_generator(const Field& field, const Factorization& q_minus_one) {
  const BigInt q1 = field->order() - 1;
  if (q_minus_one.value != q1 || q_minus_one.product() != q1) {
    throw std::invalid_argument("find_generator needs the factorization of p^k - 1");
  }
  for (BigInt idx = 1; idx <= q1; ++idx) {
    const FieldElement cand = FieldElement::from_index(field, idx);
    bool ok = true;
    for (const auto& pp : q_minus_one.factors) {
      if (cand.pow(BigInt(q1 / pp.prime)).is_one()) {
        ok = false;
        break;
      }
    }
    if (ok) return cand;
  }
  throw InternalError("multiplicative group has no generator");
}

BigInt element_order(const FieldElement& x, const Factorization& multiple) {
  if (x.is_zero()) throw std::domain_error("element_order of zero");
  if (multiple.product() != multiple.value) throw std::invalid_argument("inconsistent factorization");
  if (!x.pow(multiple.value).is_one()) throw std::invalid_argument("x^multiple != 1");
  BigInt t = multiple.value;
  for (const auto& pp : multiple.factors) {
    for (unsigned i = 0; i < pp.exponent; ++i) {
      const BigInt smaller = t / pp.prime;
      if (!x.pow(smaller).is_one()) break;
      t = smaller;
    }
  }
  return t;
}

FieldElement evaluate(const Poly& a, const FieldElement& x) {
  require_same_field(a.field(), x.field()->prime_field());
  FieldElement r = FieldElement::zero(x.field());
  for (long i = a.degree(); i >= 0; --i) {
    r = r * x + FieldElement::from_coeffs(x.field(), {a[static_cast<std::size_t>(i)]});
  }
  return r;
}

}  // namespace ep
