#include "ep/matrixper.hpp"

#include <stdexcept>

namespace ep {

namespace {

void require_invertible(const Mat2& m) {
  if (!m.field || !m.field->has_scalars()) throw std::invalid_argument("matrix needs a scalar field");
  const Coef q = m.field->scalar_count();
  if (m.a >= q || m.b >= q || m.c >= q || m.d >= q) throw std::invalid_argument("matrix entry out of range");
  if (!m.invertible()) throw std::invalid_argument("matrix is singular");
}

std::uint64_t group_order_bound(const Mat2& m) {
  const std::uint64_t q = m.field->scalar_count();
  return (q * q - 1) * (q * q - q);
}

template <typename Pred>
std::uint64_t first_power(const Mat2& m, Pred pred) {
  require_invertible(m);
  const std::uint64_t bound = group_order_bound(m);
  Mat2 power = m;
  for (std::uint64_t k = 1; k <= bound; ++k) {
    if (pred(power)) return k;
    power = power * m;
  }
  throw InternalError("matrix power never reached the target");
}

}  // namespace

Coef Mat2::det() const {
  const FieldParams& f = *field;
  return f.sub(f.mul(a, d), f.mul(b, c));
}

Mat2 Mat2::operator*(const Mat2& o) const {
  const FieldParams& f = *field;
  return {field, f.add(f.mul(a, o.a), f.mul(b, o.c)), f.add(f.mul(a, o.b), f.mul(b, o.d)),
          f.add(f.mul(c, o.a), f.mul(d, o.c)), f.add(f.mul(c, o.b), f.mul(d, o.d))};
}

std::uint64_t gl2_order(const Mat2& m) {
  return first_power(m, [](const Mat2& x) { return x.is_identity(); });
}

std::uint64_t pgl2_order(const Mat2& m) {
  return first_power(m, [](const Mat2& x) { return x.is_scalar(); });
}

bool orbit_condition(const Mat2& m) {
  const std::uint64_t v = gl2_order(m);
  Mat2 power = m;
  for (std::uint64_t k = 1; k <= v; ++k) {
    if (power.c == 1 && power.d == 0) return true;
    power = power * m;
  }
  return false;
}

Poly build_poly(const Mat2& m) {
  require_invertible(m);
  const FieldParams& f = *m.field;
  const std::size_t q = f.scalar_count();
  std::vector<Coef> coeffs(q + 2, 0);
  coeffs[q + 1] = m.c;
  coeffs[q] = m.d;
  coeffs[1] = f.neg(m.a);
  coeffs[0] = f.neg(m.b);
  return Poly(m.field, std::move(coeffs));
}

MatrixReport check_periods(const Mat2& m, bool allow_degenerate) {
  require_invertible(m);
  if (m.b == 0 && !allow_degenerate) throw std::invalid_argument("check_periods needs b != 0");
  MatrixReport r{m.field->scalar_count(), pgl2_order(m), gl2_order(m), orbit_condition(m), build_poly(m), false,
                 std::nullopt};
  const Poly x = Poly::x(m.field);
  Poly h = x % r.f;
  for (std::uint64_t i = 0; i < r.u; ++i) h = powmod(h, r.q, r.f);
  r.frobenius_holds = h == x % r.f;
  if (m.b != 0 && r.orbit) {
    const BigInt q = to_big(r.q);
    BigInt qv;
    mpz_pow_ui(qv.get_mpz_t(), q.get_mpz_t(), r.v);
    const BigInt exponent = (qv - 1) / (q - 1);
    r.period_holds = powmod(x, exponent, r.f).is_one();
  }
  return r;
}

}  // namespace ep
