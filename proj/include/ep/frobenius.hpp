#pragma once

#include <cstdint>
#include <vector>

#include "ep/bigint.hpp"
#include "ep/field.hpp"

namespace ep {

/// Character data of the Frobenius group F_q x| U_n, q = 2^k, n | q - 1,
/// evaluated at the class of g = 1.
struct CharacterReport {
  unsigned k;
  std::uint64_t q;
  std::uint64_t n;
  std::vector<Coef> coset_reps;   // t_i = gamma^i, i < (q-1)/n, as scalars of F_q
  std::vector<std::int64_t> chi;  // chi_i(1) = sum over u in U_n of (-1)^Tr(t_i u)
  std::uint64_t e;                // #{alpha in U_n : alpha + 1 in U_n}
  BigInt sum_chi2;
  BigInt sum_chi3;
  bool orthogonality;        // n + sum chi^2 = q
  bool structure_formula;    // q e = n^2 + sum chi^3
  bool cube_bound;           // (sum chi^3)^2 <= (q - n)^3
  bool hypothesis;           // n^4 > (q - n)^3
  bool implication;          // hypothesis => e > 0

  bool all_hold() const { return orthogonality && structure_formula && cube_bound && implication; }
};

/// Largest k supported (scalar tables for F_{2^k}).
inline constexpr unsigned kMaxFrobeniusK = 16;

std::uint64_t structure_constant(unsigned k, std::uint64_t n);
std::vector<std::int64_t> character_values(unsigned k, std::uint64_t n);
CharacterReport verify_identities(unsigned k, std::uint64_t n);

/// Divisors of 2^k - 1, ascending.
std::vector<std::uint64_t> frobenius_divisors(unsigned k);

}  // namespace ep
