#include <gtest/gtest.h>

#include <set>

#include "ep/element.hpp"
#include "ep/factor.hpp"
#include "test_support.hpp"

namespace ep {
namespace {

// Irreducibility by trial division with every monic polynomial of degree <= k/2.
bool irreducible_by_trial_division(const Poly& f) {
  const long k = f.degree();
  const Field& fp = f.field();
  const std::uint32_t p = fp->p();
  for (long d = 1; 2 * d <= k; ++d) {
    std::vector<Coef> c(static_cast<std::size_t>(d) + 1, 0);
    c[static_cast<std::size_t>(d)] = 1;
    while (true) {
      if ((f % Poly(fp, c)).is_zero()) return false;
      long i = 0;
      while (i < d && c[static_cast<std::size_t>(i)] == p - 1) c[static_cast<std::size_t>(i++)] = 0;
      if (i == d) break;
      ++c[static_cast<std::size_t>(i)];
    }
  }
  return true;
}

// Lexicographic walk over monic degree-k candidates with c_0 compared first.
Poly first_irreducible_by_oracle(std::uint32_t p, unsigned k) {
  const Field fp = prime_field(p);
  std::vector<Coef> c(k + 1, 0);
  c[k] = 1;
  while (true) {
    Poly cand(fp, c);
    if (cand.degree() == static_cast<long>(k) && irreducible_by_trial_division(cand)) return cand;
    long i = static_cast<long>(k) - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == p - 1) c[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) throw std::logic_error("exhausted");
    ++c[static_cast<std::size_t>(i)];
  }
}

std::uint64_t order_by_iteration(const FieldElement& x) {
  FieldElement y = x;
  std::uint64_t k = 1;
  while (!y.is_one()) {
    y = y * x;
    ++k;
  }
  return k;
}

TEST(FindIrreducible, DegreeOneIsX) {
  EXPECT_EQ(to_string(find_irreducible(2, 1)), "x");
  EXPECT_EQ(to_string(find_irreducible(7, 1)), "x");
}

TEST(FindIrreducible, UniqueBinaryQuadratic) { EXPECT_EQ(to_string(find_irreducible(2, 2)), "x^2+x+1"); }

TEST(FindIrreducible, CanonicalChoicesMatchExhaustiveSearch) {
  EXPECT_EQ(to_string(find_irreducible(2, 9)), "x^9+x^8+1");
  EXPECT_EQ(to_string(find_irreducible(2, 4)), "x^4+x^3+1");
  EXPECT_EQ(to_string(find_irreducible(3, 2)), "x^2+1");
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 3}, {2, 5}, {2, 8}, {2, 9}, {3, 3}, {3, 4}, {5, 2}, {5, 3}, {7, 3}}) {
    EXPECT_EQ(to_string(find_irreducible(p, k)), to_string(first_irreducible_by_oracle(p, k))) << "p=" << p << " k=" << k;
  }
}

TEST(FindIrreducible, ModulusPassesDistinctDegreeTest) {
  for (unsigned k = 2; k <= 40; ++k) {
    const Poly f = find_irreducible(2, k);
    EXPECT_EQ(f.degree(), static_cast<long>(k));
    EXPECT_TRUE(is_irreducible(f)) << k;
  }
}

TEST(FieldParams, RejectsBadParameters) {
  EXPECT_THROW(make_field(4, 1), std::invalid_argument);
  EXPECT_THROW(make_field(1, 1), std::invalid_argument);
  EXPECT_THROW(make_field(65537, 1), std::invalid_argument);
  EXPECT_THROW(make_field(2, 0), std::invalid_argument);
  EXPECT_NO_THROW(make_field(65521, 1));
}

TEST(FieldParams, TablesAgreeWithPolynomialArithmetic) {
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 4}, {3, 3}, {5, 2}, {2, 6}}) {
    const Field f = make_field(p, k);
    ASSERT_TRUE(f->has_scalars());
    const Coef q = f->scalar_count();
    for (Coef a = 0; a < q; ++a) {
      const FieldElement ea = FieldElement::from_index(f, a);
      for (Coef b = 0; b < q; ++b) {
        const FieldElement eb = FieldElement::from_index(f, b);
        ASSERT_EQ(f->mul(a, b), (ea * eb).scalar());
        ASSERT_EQ(f->add(a, b), (ea + eb).scalar());
        ASSERT_EQ(f->sub(a, b), (ea - eb).scalar());
      }
      if (a) {
        ASSERT_EQ(f->mul(a, f->inv(a)), 1u);
      }
      ASSERT_EQ(f->pth_root(f->pow(a, p)), a);
    }
  }
}

TEST(Trace, ZeroAndOne) {
  for (unsigned k = 1; k <= 12; ++k) {
    const Field f = make_field(2, k);
    EXPECT_EQ(trace(FieldElement::zero(f)).scalar(), 0u);
    EXPECT_EQ(trace(FieldElement::one(f)).scalar(), k % 2) << k;
  }
  const Field f3 = make_field(3, 4);
  EXPECT_EQ(trace(FieldElement::one(f3)).scalar(), 1u);  // 4 mod 3
}

TEST(Trace, HalfOfF16HasTraceOne) {
  const Field f = make_field(2, 4);
  int ones = 0;
  for (int i = 0; i < 16; ++i) ones += trace(FieldElement::from_index(f, i)).scalar() == 1;
  EXPECT_EQ(ones, 8);
}

TEST(Trace, LinearAndSurjectiveForSmallFields) {
  std::vector<std::pair<std::uint32_t, unsigned>> cases;
  for (unsigned k = 1; k <= 8; ++k) cases.emplace_back(2, k);
  for (unsigned k = 1; k <= 5; ++k) cases.emplace_back(3, k);
  for (unsigned k = 1; k <= 3; ++k) cases.emplace_back(5, k);
  cases.emplace_back(7, 2);
  for (auto [p, k] : cases) {
    const Field f = make_field(p, k);
    const std::uint64_t q = to_u64(f->order());
    std::vector<Coef> tr(q);
    std::set<Coef> hit;
    for (std::uint64_t i = 0; i < q; ++i) {
      tr[i] = trace(FieldElement::from_index(f, i)).scalar();
      hit.insert(tr[i]);
    }
    EXPECT_EQ(hit.size(), p) << "p=" << p << " k=" << k;
    // Linearity over all pairs (additivity) and scalar multiples.
    for (std::uint64_t a = 0; a < q; ++a) {
      for (std::uint64_t b = 0; b < q; ++b) {
        const Coef s = (FieldElement::from_index(f, a) + FieldElement::from_index(f, b)).scalar();
        ASSERT_EQ(tr[s], (tr[a] + tr[b]) % p);
      }
      for (Coef c = 0; c < p; ++c) {
        const Coef s = (FieldElement::from_index(f, a) * FieldElement::from_coeffs(f, {c})).scalar();
        ASSERT_EQ(tr[s], (tr[a] * c) % p);
      }
    }
  }
}

TEST(FindGenerator, SmallFields) {
  const Field f4 = make_field(2, 2);
  EXPECT_EQ(find_generator(f4, factorize(3)), FieldElement::generator_class(f4));
  const Field f3 = prime_field(3);
  EXPECT_EQ(find_generator(f3, factorize(2)).scalar(), 2u);
}

TEST(FindGenerator, F16IsSmallestOfOrderFifteen) {
  const Field f = make_field(2, 4);
  const FieldElement g = find_generator(f, factorize(15));
  EXPECT_EQ(element_order(g, factorize(15)), 15);
  EXPECT_EQ(order_by_iteration(g), 15u);
  for (BigInt i = 1; i < g.index(); ++i) EXPECT_NE(order_by_iteration(FieldElement::from_index(f, i)), 15u);
}

TEST(FindGenerator, OrderIsMaximalUpToDegreeSixteen) {
  for (unsigned k = 1; k <= 16; ++k) {
    const Field f = make_field(2, k);
    const Factorization fac = factorize(BigInt(f->order() - 1));
    const FieldElement g = find_generator(f, fac);
    EXPECT_EQ(element_order(g, fac), BigInt(f->order() - 1)) << k;
  }
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, unsigned>>{{3, 5}, {5, 4}, {7, 3}, {3, 10}}) {
    const Field f = make_field(p, k);
    const Factorization fac = factorize(BigInt(f->order() - 1));
    EXPECT_EQ(element_order(find_generator(f, fac), fac), BigInt(f->order() - 1));
  }
}

TEST(ElementOrder, Examples) {
  const Field f = make_field(2, 9);
  const Factorization fac = factorize(511);
  EXPECT_EQ(element_order(FieldElement::one(f), fac), 1);
  const FieldElement g = find_generator(f, fac);
  EXPECT_EQ(element_order(g, fac), 511);
  EXPECT_EQ(element_order(g.pow(std::uint64_t{7}), fac), 73);
  EXPECT_THROW(element_order(FieldElement::zero(f), fac), std::domain_error);
  EXPECT_THROW(element_order(g, factorize(73)), std::invalid_argument);
}

TEST(FieldElement, AxiomsOnRandomSamples) {
  auto g = testing::rng(11);
  const std::vector<std::pair<std::uint32_t, unsigned>> cases{{2, 1}, {3, 1}, {65521, 1}, {2, 4}, {3, 5},
                                                              {2, 20}, {5, 3}, {7, 2}, {2, 67}, {3, 30}};
  for (auto [p, k] : cases) {
    const Field f = make_field(p, k);
    for (int t = 0; t < 30; ++t) {
      const FieldElement a = testing::random_element(g, f);
      const FieldElement b = testing::random_element(g, f);
      const FieldElement c = testing::random_element(g, f);
      ASSERT_EQ((a * b) * c, a * (b * c)) << testing::seed_note();
      ASSERT_EQ(a * (b + c), a * b + a * c) << testing::seed_note();
      ASSERT_EQ(a + b, b + a);
      ASSERT_EQ((a - b) + b, a);
      if (!a.is_zero()) {
        ASSERT_TRUE((a * a.inverse()).is_one()) << testing::seed_note();
      }
      // Frobenius is additive.
      ASSERT_EQ((a + b).frobenius(), a.frobenius() + b.frobenius()) << testing::seed_note();
      ASSERT_EQ((a + b).pow(std::uint64_t{p}), a.pow(std::uint64_t{p}) + b.pow(std::uint64_t{p}));
      ASSERT_EQ(a.frobenius(k), a);
    }
  }
}

TEST(FieldElement, IndexRoundTrip) {
  const Field f = make_field(3, 4);
  for (int i = 0; i < 81; ++i) EXPECT_EQ(FieldElement::from_index(f, i).index(), i);
  EXPECT_THROW(FieldElement::from_index(f, 81), std::invalid_argument);
}

}  // namespace
}  // namespace ep
