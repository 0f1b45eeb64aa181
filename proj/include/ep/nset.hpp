#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ep/bigint.hpp"
#include "ep/poly.hpp"

namespace ep {

/// x^n modulo x^p - x - c in (F_p[c])[x]: coefficient i is the polynomial
/// r_i(c) multiplying x^i, for 0 <= i < p.
class ArtinSchreierRemainder {
 public:
  /// The remainder of x^0 = 1.
  explicit ArtinSchreierRemainder(std::uint32_t p);
  ArtinSchreierRemainder(std::uint32_t p, std::vector<Poly> coeffs);

  std::uint32_t p() const noexcept { return static_cast<std::uint32_t>(r_.size()); }
  const Field& field() const noexcept { return r_.front().field(); }
  /// r_i(c), coefficient of x^i.
  const Poly& coeff(std::size_t i) const { return r_.at(i); }
  const std::vector<Poly>& coeffs() const noexcept { return r_; }

  /// Exponent n -> n + 1: shift, then fold the overflow t(c) via x^p = x + c.
  void multiply_by_x();
  /// Exponent n -> p n, using (sum r_i x^i)^p = sum r_i(c^p) (x + c)^i.
  void raise_to_p();

  bool operator==(const ArtinSchreierRemainder& other) const { return r_ == other.r_; }

 private:
  std::vector<Poly> r_;
};

/// x^n mod (x^p - x - c). Digits of n are consumed most significant first in
/// base p; n = 0 gives 1.
ArtinSchreierRemainder reduce_xn(const BigInt& n, std::uint32_t p);

/// Monic gcd of the coefficients of x^n - 1 (the caller's remainder is x^n;
/// the constant 1 is subtracted here).
Poly coefficient_gcd_of_xn_minus_one(const ArtinSchreierRemainder& xn, bool early_exit = false);
/// Monic gcd of the coefficients as given. Throws InternalError if all vanish.
Poly coefficient_gcd(const std::vector<Poly>& coeffs, bool early_exit = false);

/// p'-part of n.
std::uint64_t coprime_part(std::uint64_t n, std::uint32_t p);
BigInt coprime_part(const BigInt& n, std::uint32_t p);

/// e_p(n) = p * deg g(c); requires gcd(n, p) = 1.
std::uint64_t e_value(const BigInt& n, std::uint32_t p);
bool member(const BigInt& n, std::uint32_t p);

/// Monic gcd over lambda in F_p of (x + lambda)^n - 1.
Poly direct_gcd(const BigInt& n, std::uint32_t p);

struct EsetPolynomial {
  BigInt n;
  std::uint32_t p;
  Poly g_of_c;
  Poly pullback;  // g(x^p - x)
};
EsetPolynomial eset_polynomial(const BigInt& n, std::uint32_t p);

enum class MemberClass { nonmember, trivial_member, primitive_member, multiple_of_member };
std::string to_string(MemberClass c);
MemberClass parse_member_class(const std::string& s);

struct MembershipRecord {
  std::uint64_t n = 0;
  std::uint32_t p = 2;
  std::uint64_t e = 0;
  bool member = false;
  /// Unset when the record was produced without classification.
  std::optional<MemberClass> classification;
  std::optional<std::uint64_t> witness;
  /// n was divisible by p and e was taken from the p'-part.
  bool delegated = false;

  bool operator==(const MembershipRecord& other) const = default;
};

/// Smallest p^r - 1 (r >= 2) that divides n and is smaller than n.
std::optional<std::uint64_t> trivial_witness(std::uint64_t n, std::uint32_t p);

using MembershipOracle = std::function<bool(std::uint64_t)>;

/// Fills classification and witness for a record whose e and member are set.
void classify_record(MembershipRecord& record, const MembershipOracle& is_member);

MembershipRecord classify(std::uint64_t n, std::uint32_t p, const MembershipOracle& is_member);
MembershipRecord classify(std::uint64_t n, std::uint32_t p);

}  // namespace ep
