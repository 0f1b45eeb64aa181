#include <gtest/gtest.h>

#include "ep/factor.hpp"
#include "ep/period.hpp"
#include "test_support.hpp"

namespace ep {
namespace {

Poly P(const char* text, std::uint32_t p = 2) { return parse_poly(text, prime_field(p)); }

// Least t with x^t = 1 mod f, by stepping through the powers of x.
std::uint64_t period_by_stepping(const Poly& f) {
  const Poly x = Poly::x(f.field());
  Poly h = x % f;
  std::uint64_t t = 1;
  while (!h.is_one()) {
    h = (h * x) % f;
    ++t;
  }
  return t;
}

BigInt product_of(const Factorization& f) {
  BigInt r = 1;
  for (const auto& pp : f.factors) {
    EXPECT_TRUE(is_prime(pp.prime)) << pp.prime;
    for (unsigned i = 0; i < pp.exponent; ++i) r *= pp.prime;
  }
  return r;
}

std::string render(const Factorization& f) {
  std::string s;
  for (const auto& pp : f.factors) {
    if (!s.empty()) s += "*";
    s += pp.prime.get_str();
    if (pp.exponent > 1) s += "^" + std::to_string(pp.exponent);
  }
  return s;
}

TEST(Factorize, Examples) {
  EXPECT_EQ(render(factorize(511)), "7*73");
  EXPECT_EQ(render(factorize(255)), "3*5*17");
  const Factorization m30 = factorize(big_pow(2, 30) - 1);
  EXPECT_EQ(product_of(m30), big_pow(2, 30) - 1);
  EXPECT_EQ(render(m30), "3^2*7*11*31*151*331");
  EXPECT_EQ(render(factorize(1)), "");
  EXPECT_THROW(factorize(0), std::invalid_argument);
}

TEST(Factorize, LargeMersenneNumbersNeedRho) {
  // 2^64 - 1 and 2^96 - 1 have prime factors above the trial-division limit.
  for (unsigned k : {59u, 64u, 67u, 96u, 100u}) {
    const BigInt m = big_pow(2, k) - 1;
    const Factorization f = factorize(m);
    EXPECT_EQ(product_of(f), m) << k;
    EXPECT_EQ(f.product(), m);
  }
  EXPECT_EQ(render(factorize(big_pow(2, 67) - 1)), "193707721*761838257287");
}

TEST(Factorize, RandomValuesRoundTrip) {
  auto g = testing::rng(101);
  for (int t = 0; t < 200; ++t) {
    const BigInt m = to_big(g() >> (g() % 40)) + 1;
    const Factorization f = factorize(m);
    ASSERT_EQ(product_of(f), m) << m;
    for (std::size_t i = 1; i < f.factors.size(); ++i) ASSERT_LT(f.factors[i - 1].prime, f.factors[i].prime);
  }
}

TEST(Factorize, DivisorsAndLcm) {
  const auto d = divisors(factorize(12));
  ASSERT_EQ(d.size(), 6u);
  EXPECT_EQ(d.front(), 1);
  EXPECT_EQ(d.back(), 12);
  EXPECT_EQ(divisors_u64(73), (std::vector<std::uint64_t>{1, 73}));
  EXPECT_EQ(lcm(factorize(12), factorize(18)).value, 36);
  EXPECT_EQ(render(lcm(factorize(12), factorize(18))), "2^2*3^2");
}

TEST(IsPrime, SmallAndLarge) {
  int count = 0;
  for (int i = 0; i < 1000; ++i) count += is_prime(i);
  EXPECT_EQ(count, 168);
  EXPECT_TRUE(is_prime(BigInt("18446744073709551557")));  // largest prime below 2^64
  EXPECT_FALSE(is_prime(BigInt("3215031751")));           // strong pseudoprime to bases 2, 3, 5, 7
  EXPECT_TRUE(is_prime(big_pow(2, 89) - 1));
  EXPECT_FALSE(is_prime(big_pow(2, 83) - 1));
}

TEST(OrderDividing, Examples) {
  EXPECT_EQ(order_dividing(P("x+1"), factorize(12)), 1);
  EXPECT_EQ(order_dividing(P("x^9+x+1"), factorize(511)), 73);
  EXPECT_EQ(order_dividing(P("x^2+x+1"), factorize(3)), 3);
  EXPECT_THROW(order_dividing(P("x^2+x+1"), factorize(4)), std::invalid_argument);
  EXPECT_THROW(order_dividing(P("x^2+x"), factorize(3)), std::domain_error);
}

TEST(PolyPeriod, Examples) {
  EXPECT_EQ(poly_period(P("x^9+x+1")).period, 73);
  for (unsigned q : {2u, 4u, 8u, 16u}) {
    const Field f = prime_field(2);
    const Poly g = Poly::monomial(f, 1, q + 1) + Poly::x(f) + Poly::one(f);
    const PeriodReport r = poly_period(g);
    EXPECT_EQ(r.period, q * q + q + 1) << q;
    EXPECT_TRUE(certify_period(g, r.period));
  }
}

TEST(PolyPeriod, RepeatedFactorUsesMultiplicityRule) {
  const Poly f = P("x^2+x+1") * P("x^2+x+1");
  const PeriodReport r = poly_period(f);
  EXPECT_EQ(r.period, 6);
  EXPECT_EQ(r.max_multiplicity, 2u);
  EXPECT_EQ(r.multiplicity_factor, 2);
  EXPECT_EQ(period_by_stepping(f), 6u);
  const Poly x = Poly::x(f.field());
  EXPECT_TRUE(powmod(x, std::uint64_t{6}, f).is_one());
  EXPECT_FALSE(powmod(x, std::uint64_t{3}, f).is_one());
  EXPECT_FALSE(powmod(x, std::uint64_t{2}, f).is_one());
}

TEST(PolyPeriod, RejectsDegenerateInput) {
  EXPECT_THROW(poly_period(P("x^3+x")), std::domain_error);
  EXPECT_THROW(poly_period(P("1")), std::domain_error);
}

TEST(SquarefreeDecomposition, RecoversFactorsAndMultiplicities) {
  const Poly a = P("x+1");
  const Poly b = P("x^2+x+1");
  const Poly c = P("x^3+x+1");
  const Poly f = a * b * b * c * c * c * c * c;  // multiplicity 5 needs a p-th root step
  const auto parts = squarefree_decomposition(f);
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts[0].factor, a);
  EXPECT_EQ(parts[0].multiplicity, 1u);
  EXPECT_EQ(parts[1].factor, b);
  EXPECT_EQ(parts[1].multiplicity, 2u);
  EXPECT_EQ(parts[2].factor, c);
  EXPECT_EQ(parts[2].multiplicity, 5u);

  const Poly g = P("x+1", 3) * P("x+1", 3) * P("x+1", 3) * P("x^2+1", 3);
  const auto p3 = squarefree_decomposition(g);
  ASSERT_EQ(p3.size(), 2u);
  EXPECT_EQ(p3[1].multiplicity, 3u);
}

TEST(PolyPeriod, IrreduciblePeriodDividesFieldOrder) {
  // Every irreducible of degree d <= 6 over F_2, by exhaustive search.
  const Field f = prime_field(2);
  int count = 0;
  for (unsigned d = 1; d <= 6; ++d) {
    for (std::uint32_t low = 0; low < (1u << d); ++low) {
      std::vector<Coef> c(d + 1);
      for (unsigned i = 0; i < d; ++i) c[i] = (low >> i) & 1;
      c[d] = 1;
      const Poly g(f, c);
      if (g[0] == 0 || !is_irreducible(g)) continue;
      ++count;
      const BigInt t = poly_period(g).period;
      EXPECT_EQ((big_pow(2, d) - 1) % t, 0) << to_string(g);
      EXPECT_EQ(t, period_by_stepping(g)) << to_string(g);
    }
  }
  // 1 + 1 + 2 + 3 + 6 + 9 irreducibles with nonzero constant term.
  EXPECT_EQ(count, 22);
}

TEST(PolyPeriod, MatchesSteppingAndReciprocalOnRandomInputs) {
  auto g = testing::rng(111);
  for (std::uint32_t p : {2u, 3u}) {
    const Field f = prime_field(p);
    for (int t = 0; t < 150; ++t) {
      Poly a = testing::random_poly(g, f, p == 2 ? 14 : 8, true);
      if (a.degree() < 1 || a[0] == 0) continue;
      const PeriodReport r = poly_period(a);
      ASSERT_EQ(r.period, period_by_stepping(a)) << to_string(a) << " " << testing::seed_note();
      ASSERT_TRUE(certify_period(a, r.period));
      ASSERT_EQ(poly_period(reciprocal(a)).period, r.period) << to_string(a) << " " << testing::seed_note();
    }
  }
}

TEST(CertifyPeriod, RejectsMultiplesAndNonPeriods) {
  const Poly f = P("x^9+x+1");
  EXPECT_TRUE(certify_period(f, 73));
  EXPECT_FALSE(certify_period(f, 146));
  EXPECT_FALSE(certify_period(f, 72));
  EXPECT_FALSE(certify_period(f, 0));
}

}  // namespace
}  // namespace ep
