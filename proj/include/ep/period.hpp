#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ep/bigint.hpp"
#include "ep/factor.hpp"
#include "ep/poly.hpp"

namespace ep {

struct SquarefreeFactor {
  Poly factor;  // squarefree, pairwise coprime with the other entries
  std::size_t multiplicity;
};

/// f = lc(f) * prod factor^multiplicity, entries ascending by multiplicity.
std::vector<SquarefreeFactor> squarefree_decomposition(const Poly& f);

/// Smallest divisor t of multiple.value with x^t = 1 mod f.
BigInt order_dividing(const Poly& f, const Factorization& multiple);

struct PeriodReport {
  Poly f;
  BigInt period;
  BigInt exponent_multiple;       // lcm of Q^d - 1 over the distinct-degree profile
  std::vector<std::pair<unsigned, std::size_t>> ddf_profile;  // (degree, total degree) of the radical
  std::size_t max_multiplicity;
  BigInt multiplicity_factor;     // p^t with p^t >= max_multiplicity
};

/// Least t >= 1 with f | x^t - 1.
PeriodReport poly_period(const Poly& f);

/// x^t = 1 mod f and x^(t/l) != 1 for every prime l | t.
bool certify_period(const Poly& f, const BigInt& t);

}  // namespace ep
