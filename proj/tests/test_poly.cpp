#include <gtest/gtest.h>

#include "ep/detail/fpx.hpp"
#include "ep/element.hpp"
#include "ep/poly.hpp"
#include "test_support.hpp"

namespace ep {
namespace {

const Field& f2() {
  static const Field f = prime_field(2);
  return f;
}

Poly P(const char* text, std::uint32_t p = 2) { return parse_poly(text, prime_field(p)); }

TEST(PolyMul, SmallProducts) {
  EXPECT_EQ(to_string(P("x+1") * P("x+1")), "x^2+1");
  EXPECT_EQ(to_string(P("x^2+x+1") * P("x+1")), "x^3+1");
}

TEST(PolyMul, DegreeEightProductMatchesSchoolbook) {
  const Poly a = P("x^4+x^3+1");
  const Poly b = P("x^4+x^3+x^2+x+1");
  const Poly oracle(f2(), testing::schoolbook_mul(*f2(), a.coefficients(), b.coefficients()));
  EXPECT_EQ(oracle, a * b);
  // The cross terms x^7, x^6, x^5 and x^3 cancel in pairs.
  EXPECT_EQ(to_string(a * b), "x^8+x^4+x^2+x+1");
}

TEST(PolyMul, MixedFieldsRejected) {
  EXPECT_THROW(P("x+1", 2) * P("x+1", 3), std::invalid_argument);
}

TEST(PolyDivrem, Examples) {
  const auto [q, r] = divrem(Poly::x_pow_minus_one(f2(), 3), P("x^2+x+1"));
  EXPECT_EQ(to_string(q), "x+1");
  EXPECT_TRUE(r.is_zero());

  const Poly a = Poly::x_pow_minus_one(f2(), 5);
  const Poly b = P("x^2+x+1");
  const auto [q5, r5] = divrem(a, b);
  EXPECT_EQ(q5 * b + r5, a);
  EXPECT_EQ(to_string(r5), "x");  // x^3 = 1, so x^5 + 1 = x^2 + 1 = x

  const auto [q1, r1] = divrem(b, b);
  EXPECT_TRUE(q1.is_one());
  EXPECT_TRUE(r1.is_zero());
  EXPECT_THROW(divrem(a, Poly::zero(f2())), std::domain_error);
}

TEST(PolyGcd, Examples) {
  const Poly f = P("x^9+x+1");
  EXPECT_EQ(gcd(f, f), f);
  EXPECT_EQ(to_string(gcd(P("2*x^2+1", 3), P("2*x^2+1", 3))), "x^2+2");

  // No common factor for n = 5: none of the three irreducible factors of
  // x^5 - 1 survives the shift by 1.
  const Poly a5 = Poly::x_pow_minus_one(f2(), 5);
  EXPECT_TRUE(gcd(a5, shift_substitute(a5, 1)).is_one());
  EXPECT_EQ(to_string(a5), "x^5+1");

  const Poly a73 = Poly::x_pow_minus_one(f2(), 73);
  EXPECT_EQ(gcd(a73, shift_substitute(a73, 1)).degree(), 18);
  EXPECT_THROW(gcd(Poly::zero(f2()), Poly::zero(f2())), std::domain_error);
}

TEST(PolyPowmod, Examples) {
  const Poly x = Poly::x(f2());
  EXPECT_TRUE(powmod(x, std::uint64_t{73}, P("x^9+x+1")).is_one());
  EXPECT_FALSE(powmod(x, std::uint64_t{1}, P("x^9+x+1")).is_one());
  EXPECT_EQ(powmod(x, std::uint64_t{1}, P("x+1")), x % P("x+1"));
  EXPECT_EQ(powmod(x, std::uint64_t{1}, P("x^3+x+1")), x);
  // q = 4: x^(q^2+q+1) = 1 modulo x^(q+1)+x+1.
  EXPECT_TRUE(powmod(x, std::uint64_t{21}, P("x^5+x+1")).is_one());
  EXPECT_TRUE(powmod(x, BigInt(21), P("x^5+x+1")).is_one());
  EXPECT_THROW(powmod(x, std::uint64_t{3}, Poly::one(f2())), std::domain_error);
}

TEST(PolyShift, Examples) {
  EXPECT_EQ(to_string(shift_substitute(P("x^2+x"), 1)), "x^2+x");
  for (std::size_t n : {1u, 5u, 9u, 73u}) {
    const Poly a = Poly::x_pow_minus_one(f2(), n);
    Poly direct = Poly::one(f2());
    for (std::size_t i = 0; i < n; ++i) direct *= P("x+1");
    EXPECT_EQ(shift_substitute(a, 1), direct - Poly::one(f2())) << n;
  }
}

TEST(PolyShift, NineTermExampleByEvaluation) {
  const Poly a = P("x^9+x+1");
  const Poly shifted = shift_substitute(a, 1);
  // (x+1)^9 = (x^8+1)(x+1) in characteristic 2, so the sum collapses.
  EXPECT_EQ(to_string(shifted), "x^9+x^8+1");
  auto g = testing::rng(21);
  const Field big = make_field(2, 13);
  const FieldElement one = FieldElement::one(big);
  for (int i = 0; i < 20; ++i) {
    const FieldElement beta = testing::random_element(g, big);
    EXPECT_EQ(evaluate(shifted, beta), evaluate(a, beta + one)) << testing::seed_note();
  }
}

TEST(PolyReciprocal, Examples) {
  for (std::size_t q : {2u, 4u, 8u, 16u}) {
    const Poly f = Poly::monomial(f2(), 1, q + 1) + Poly::x(f2()) + Poly::one(f2());
    const Poly r = Poly::monomial(f2(), 1, q + 1) + Poly::monomial(f2(), 1, q) + Poly::one(f2());
    EXPECT_EQ(reciprocal(f), r) << q;
  }
  EXPECT_EQ(reciprocal(P("x^2+x+1")), P("x^2+x+1"));
  EXPECT_EQ(to_string(reciprocal(P("x^2+2", 3))), "x^2+2");
  EXPECT_EQ(to_string(reciprocal(P("x^2+x+2", 3))), "x^2+2*x+2");
  EXPECT_THROW(reciprocal(P("x^2+x")), std::domain_error);
}

TEST(PolySquarefree, Examples) {
  EXPECT_FALSE(squarefree(P("x^2+1")));
  const Poly f = P("x^9+x+1");
  EXPECT_TRUE(squarefree(f));
  EXPECT_TRUE(gcd(f, f.derivative()).is_one());
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (std::size_t n = 1; n <= 60; ++n) {
      EXPECT_EQ(squarefree(Poly::x_pow_minus_one(prime_field(p), n)), n % p != 0) << "p=" << p << " n=" << n;
    }
  }
}

TEST(PolyDdf, Examples) {
  const auto d1 = ddf_degrees(P("x^2+x+1"));
  ASSERT_EQ(d1.size(), 1u);
  EXPECT_EQ(d1[0].degree, 2u);
  EXPECT_EQ(d1[0].total_degree, 2u);

  const auto d2 = ddf_degrees(P("x^3+1"));
  ASSERT_EQ(d2.size(), 2u);
  EXPECT_EQ(d2[0].degree, 1u);
  EXPECT_EQ(d2[0].total_degree, 1u);
  EXPECT_EQ(d2[1].degree, 2u);
  EXPECT_EQ(d2[1].total_degree, 2u);

  // q = 4: every factor of x^5+x+1 splits over F_64.
  const Poly f = P("x^5+x+1");
  const auto d3 = ddf_degrees(f);
  std::size_t total = 0;
  Poly product = Poly::one(f2());
  for (const DegreePart& part : d3) {
    EXPECT_EQ(6 % part.degree, 0u);
    EXPECT_EQ(part.total_degree % part.degree, 0u);
    EXPECT_EQ(static_cast<std::size_t>(part.product.degree()), part.total_degree);
    total += part.total_degree;
    product *= part.product;
  }
  EXPECT_EQ(total, 5u);
  EXPECT_EQ(product, f);
  ASSERT_EQ(d3.size(), 2u);
  EXPECT_EQ(to_string(d3[0].product), "x^2+x+1");
  EXPECT_EQ(to_string(d3[1].product), "x^3+x^2+1");
}

TEST(PolyIrreducible, Examples) {
  EXPECT_TRUE(is_irreducible(P("x^9+x+1")));
  EXPECT_FALSE(is_irreducible(P("x^5+x+1")));
  EXPECT_TRUE(is_irreducible(P("x^2+1", 3)));
  EXPECT_FALSE(is_irreducible(P("x^2+1", 5)));
}

class PolyProperties : public ::testing::TestWithParam<std::pair<std::uint32_t, unsigned>> {};

TEST_P(PolyProperties, DivremRoundTrip) {
  const Field f = make_field(GetParam().first, GetParam().second);
  auto g = testing::rng(31 + f->p() * 7 + f->k());
  for (int t = 0; t < 200; ++t) {
    const Poly a = testing::random_poly(g, f, 60);
    const Poly b = testing::random_poly(g, f, 25, true);
    const auto [q, r] = divrem(a, b);
    ASSERT_EQ(q * b + r, a) << testing::seed_note();
    ASSERT_LT(r.degree(), b.degree()) << testing::seed_note();
  }
}

TEST_P(PolyProperties, GcdDividesAndScales) {
  const Field f = make_field(GetParam().first, GetParam().second);
  auto g = testing::rng(41 + f->p() * 7 + f->k());
  for (int t = 0; t < 100; ++t) {
    const Poly a = testing::random_poly(g, f, 30, true);
    const Poly b = testing::random_poly(g, f, 30, true);
    const Poly c = testing::random_poly(g, f, 8, true);
    const Poly d = gcd(a, b);
    ASSERT_EQ(d.leading(), 1u);
    ASSERT_TRUE((a % d).is_zero()) << testing::seed_note();
    ASSERT_TRUE((b % d).is_zero()) << testing::seed_note();
    ASSERT_EQ(gcd(a * c, b * c), c.monic() * d) << testing::seed_note();
  }
}

TEST_P(PolyProperties, PowmodMatchesRepeatedFrobenius) {
  const Field f = make_field(GetParam().first, GetParam().second);
  auto g = testing::rng(51 + f->p() * 7 + f->k());
  const std::uint64_t q = f->scalar_count();
  for (int t = 0; t < 20; ++t) {
    Poly m = testing::random_poly(g, f, 20, true);
    if (m.degree() < 1) m = m + Poly::monomial(f, 1, 7);
    Poly h = Poly::x(f) % m;
    BigInt e = 1;
    for (unsigned d = 1; d <= 5; ++d) {
      // q-th power by q - 1 explicit multiplications.
      Poly next = h;
      for (std::uint64_t i = 1; i < q; ++i) next = (next * h) % m;
      h = next;
      e *= static_cast<unsigned long>(q);
      ASSERT_EQ(powmod(Poly::x(f), e, m), h) << testing::seed_note();
    }
  }
}

TEST_P(PolyProperties, ShiftThenUnshiftIsIdentity) {
  const Field f = make_field(GetParam().first, GetParam().second);
  auto g = testing::rng(61 + f->p() * 7 + f->k());
  for (int t = 0; t < 100; ++t) {
    const Poly a = testing::random_poly(g, f, 40);
    const Coef lambda = std::uniform_int_distribution<Coef>(0, f->scalar_count() - 1)(g);
    ASSERT_EQ(shift_substitute(shift_substitute(a, lambda), f->neg(lambda)), a) << testing::seed_note();
  }
}

TEST_P(PolyProperties, TextRoundTrip) {
  const Field f = make_field(GetParam().first, GetParam().second);
  auto g = testing::rng(71 + f->p() * 7 + f->k());
  for (int t = 0; t < 100; ++t) {
    const Poly a = testing::random_poly(g, f, 40);
    ASSERT_EQ(parse_poly(to_string(a), f), a) << to_string(a);
    if (f->is_prime_field()) {
      ASSERT_EQ(parse_machine(to_machine(a)), a) << to_machine(a);
    }
    if (f->is_gf2()) {
      ASSERT_EQ(parse_machine(to_hex_form(a)), a) << to_hex_form(a);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, PolyProperties,
                         ::testing::Values(std::pair<std::uint32_t, unsigned>{2, 1}, std::pair<std::uint32_t, unsigned>{3, 1},
                                           std::pair<std::uint32_t, unsigned>{5, 1}, std::pair<std::uint32_t, unsigned>{2, 2},
                                           std::pair<std::uint32_t, unsigned>{3, 2}));

TEST(PolyPacked, AgreesWithGenericKernelsOnRandomTriples) {
  auto g = testing::rng(81);
  const FieldParams& fp = *f2();
  for (int t = 0; t < 1000; ++t) {
    const Poly a = testing::random_poly(g, f2(), 300);
    const Poly b = testing::random_poly(g, f2(), 200);
    const Poly m = testing::random_poly(g, f2(), 150, true);
    const auto ca = a.coefficients();
    const auto cb = b.coefficients();
    const auto cm = m.coefficients();
    ASSERT_EQ((a + b).coefficients(), fpx::add(fp, ca, cb)) << testing::seed_note();
    ASSERT_EQ((a * b).coefficients(), fpx::mul(fp, ca, cb)) << testing::seed_note();
    ASSERT_EQ((a * b).coefficients(), testing::schoolbook_mul(fp, ca, cb)) << testing::seed_note();
    fpx::Coefs q, r;
    fpx::divrem(fp, ca, cm, q, r);
    const auto [pq, pr] = divrem(a, m);
    ASSERT_EQ(pq.coefficients(), q) << testing::seed_note();
    ASSERT_EQ(pr.coefficients(), r) << testing::seed_note();
    if (!a.is_zero() || !b.is_zero()) {
      ASSERT_EQ(gcd(a, b).coefficients(), fpx::gcd(fp, ca, cb)) << testing::seed_note();
    }
  }
}

TEST(PolyText, Formats) {
  EXPECT_EQ(to_string(P("x^9+x+1")), "x^9+x+1");
  EXPECT_EQ(to_string(P("2*x^3+x+2", 3)), "2*x^3+x+2");
  EXPECT_EQ(to_string(Poly::zero(f2())), "0");
  EXPECT_EQ(to_machine(P("2*x^3+x+2", 3)), "p=3;k=1;coeffs=2,1,0,2");
  EXPECT_EQ(to_machine(Poly::zero(f2())), "p=2;k=1;coeffs=0");
  EXPECT_EQ(to_hex_form(P("x^9+x+1")), "p=2;hex=0302");
  EXPECT_EQ(to_hex_form(Poly::zero(f2())), "p=2;hex=00");
  EXPECT_EQ(parse_machine("p=2;hex=0302"), P("x^9+x+1"));
  EXPECT_EQ(P("x + x^2 + 1"), P("x^2+x+1"));
  EXPECT_EQ(P("x-1", 3), P("x+2", 3));
  EXPECT_THROW(P("x^^2"), std::invalid_argument);
  EXPECT_TRUE(P("3*x", 3).is_zero());
  EXPECT_THROW(P("y+1"), std::invalid_argument);
  EXPECT_THROW(P("2*+x"), std::invalid_argument);
  EXPECT_THROW(parse_poly("5*x", make_field(2, 2)), std::invalid_argument);
  EXPECT_THROW(parse_machine("p=2;hex=0"), std::invalid_argument);
  EXPECT_THROW(parse_machine("p=2;k=1"), std::invalid_argument);
}

}  // namespace
}  // namespace ep
