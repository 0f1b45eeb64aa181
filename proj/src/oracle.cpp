#include "ep/oracle.hpp"

#include <stdexcept>
#include <unordered_set>

namespace ep {

namespace {

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

void require_oracle_input(std::uint64_t n, std::uint32_t p) {
  if (n < 1) throw std::invalid_argument("oracle needs n >= 1");
  if (n % p == 0) throw std::invalid_argument("oracle needs n coprime to p");
  if (n > kOracleEnumerationBound) throw std::invalid_argument("n exceeds the oracle enumeration bound");
}

}  // namespace

FieldElement element_of_order(std::uint64_t n, std::uint32_t p) {
  require_oracle_input(n, p);
  const std::uint64_t m = multiplicative_order_mod(p, n);
  const Field f = make_field(p, static_cast<unsigned>(m));
  if (n == 1) return FieldElement::one(f);
  const BigInt cofactor = (f->order() - 1) / to_big(n);
  const auto primes = prime_divisors(n);
  for (BigInt idx = 2; idx < f->order(); ++idx) {
    const FieldElement beta = FieldElement::from_index(f, idx).pow(cofactor);
    bool exact = true;
    for (std::uint64_t l : primes) {
      if (beta.pow(n / l).is_one()) {
        exact = false;
        break;
      }
    }
    if (exact) return beta;
  }
  throw InternalError("no element of order " + std::to_string(n) + " found");
}

BruteEset brute_eset(std::uint64_t n, std::uint32_t p) {
  const FieldElement beta = element_of_order(n, p);
  const Field& f = beta.field();
  BruteEset out{n, p, f->k(), f, {}};

  std::vector<FieldElement> group;
  group.reserve(n);
  std::unordered_set<FieldElement, FieldElementHash> members;
  FieldElement cur = FieldElement::one(f);
  for (std::uint64_t j = 0; j < n; ++j) {
    group.push_back(cur);
    members.insert(cur);
    cur = cur * beta;
  }
  if (!cur.is_one() || members.size() != n) throw InternalError("U_n enumeration is inconsistent");

  std::vector<FieldElement> shifts;
  for (std::uint32_t lambda = 1; lambda < p; ++lambda) shifts.push_back(FieldElement::from_coeffs(f, {lambda}));
  for (const FieldElement& alpha : group) {
    bool all = true;
    for (const FieldElement& lambda : shifts) {
      if (!members.contains(alpha + lambda)) {
        all = false;
        break;
      }
    }
    if (all) out.elements.push_back(alpha);
  }
  return out;
}

std::uint64_t brute_line_count(std::uint64_t n, std::uint32_t p) {
  const BruteEset e = brute_eset(n, p);
  if (e.elements.size() % p != 0) throw InternalError("E_p(n) is not a union of lines");
  return e.elements.size() / p;
}

}  // namespace ep
