#include "ep/period.hpp"

#include <algorithm>
#include <stdexcept>

namespace ep {

namespace {

// f must be a polynomial in x^p; returns its p-th root.
Poly pth_root(const Poly& f) {
  const FieldParams& fp = *f.field();
  const std::uint32_t p = fp.p();
  std::vector<Coef> out(static_cast<std::size_t>(f.degree()) / p + 1, 0);
  for (long i = 0; i <= f.degree(); ++i) {
    const Coef c = f[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (i % p != 0) throw InternalError("p-th root of a polynomial with a non-p-th-power term");
    out[static_cast<std::size_t>(i) / p] = fp.pth_root(c);
  }
  return Poly(f.field(), std::move(out));
}

void musser(const Poly& f, std::size_t scale, std::vector<SquarefreeFactor>& out) {
  if (f.is_constant()) return;
  const Poly d = f.derivative();
  Poly c = d.is_zero() ? f : gcd(f, d);
  Poly w = f / c;
  std::size_t i = 1;
  while (!w.is_constant()) {
    const Poly y = gcd(w, c);
    const Poly z = w / y;
    if (!z.is_constant()) out.push_back({z.monic(), i * scale});
    ++i;
    w = y;
    c = c / y;
  }
  if (!c.is_constant()) musser(pth_root(c.monic()), scale * f.field()->p(), out);
}

bool x_power_is_one(const Poly& f, const BigInt& t) {
  return powmod(Poly::x(f.field()), t, f).is_one();
}

BigInt peel(const Poly& f, BigInt t, const std::vector<BigInt>& primes) {
  for (const BigInt& l : primes) {
    while (t % l == 0 && x_power_is_one(f, BigInt(t / l))) t /= l;
  }
  return t;
}

bool certify_with_primes(const Poly& f, const BigInt& t, const std::vector<BigInt>& primes) {
  if (!x_power_is_one(f, t)) return false;
  for (const BigInt& l : primes) {
    if (t % l == 0 && x_power_is_one(f, BigInt(t / l))) return false;
  }
  return true;
}

void require_period_input(const Poly& f) {
  if (f.is_constant()) throw std::domain_error("period needs a nonconstant polynomial");
  if (f[0] == 0) throw std::domain_error("period needs f(0) != 0");
}

}  // namespace

std::vector<SquarefreeFactor> squarefree_decomposition(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("squarefree decomposition of zero");
  std::vector<SquarefreeFactor> out;
  musser(f.monic(), 1, out);
  std::stable_sort(out.begin(), out.end(),
                   [](const SquarefreeFactor& a, const SquarefreeFactor& b) { return a.multiplicity < b.multiplicity; });
  return out;
}

BigInt order_dividing(const Poly& f, const Factorization& multiple) {
  require_period_input(f);
  if (multiple.value < 1 || multiple.product() != multiple.value) {
    throw std::invalid_argument("order_dividing needs a complete factorization");
  }
  if (!x_power_is_one(f, multiple.value)) throw std::invalid_argument("x^multiple != 1 modulo f");
  return peel(f, multiple.value, multiple.primes());
}

PeriodReport poly_period(const Poly& f) {
  require_period_input(f);
  const auto parts = squarefree_decomposition(f);
  Poly radical = Poly::one(f.field());
  std::size_t max_mult = 1;
  for (const auto& part : parts) {
    radical *= part.factor;
    max_mult = std::max(max_mult, part.multiplicity);
  }
  const std::uint32_t q = f.field()->scalar_count();
  const std::uint32_t p = f.field()->p();

  PeriodReport report{f, 0, 1, {}, max_mult, 1};
  Factorization multiple = factorize(BigInt(1));
  for (const auto& part : ddf_degrees(radical)) {
    report.ddf_profile.emplace_back(part.degree, part.total_degree);
    multiple = lcm(multiple, factorize(BigInt(big_pow(q, part.degree) - 1)));
  }
  report.exponent_multiple = multiple.value;
  BigInt order = order_dividing(radical, multiple);
  while (report.multiplicity_factor < max_mult) report.multiplicity_factor *= p;
  report.period = order * report.multiplicity_factor;

  std::vector<BigInt> primes = multiple.primes();
  if (report.multiplicity_factor > 1 && std::find(primes.begin(), primes.end(), BigInt(p)) == primes.end()) {
    primes.push_back(p);
  }
  if (!certify_with_primes(f, report.period, primes)) {
    throw InternalError("computed period of " + to_string(f) + " failed certification");
  }
  return report;
}

bool certify_period(const Poly& f, const BigInt& t) {
  require_period_input(f);
  if (t < 1) return false;
  return certify_with_primes(f, t, factorize(t).primes());
}

}  // namespace ep
