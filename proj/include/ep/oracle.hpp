#pragma once

// Brute-force ground truth for small instances. Deliberately independent of
// the remainder and gcd machinery in nset: it works with explicit elements of
// F_{p^m}.

#include <cstdint>
#include <vector>

#include "ep/element.hpp"

namespace ep {

/// Largest |U_n| the oracle will enumerate.
inline constexpr std::uint64_t kOracleEnumerationBound = std::uint64_t{1} << 24;

struct BruteEset {
  std::uint64_t n;
  std::uint32_t p;
  std::uint64_t m;  // multiplicative order of p mod n
  Field field;      // F_{p^m}
  std::vector<FieldElement> elements;  // E_p(n), in enumeration order of U_n
};

/// An element of multiplicative order exactly n in F_{p^m}, m = ord_n(p).
FieldElement element_of_order(std::uint64_t n, std::uint32_t p);

/// All alpha with alpha + lambda in U_n for every lambda in F_p.
BruteEset brute_eset(std::uint64_t n, std::uint32_t p);

/// |E_p(n)| / p.
std::uint64_t brute_line_count(std::uint64_t n, std::uint32_t p);

}  // namespace ep
