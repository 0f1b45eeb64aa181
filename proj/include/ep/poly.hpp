#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ep/bigint.hpp"
#include "ep/field.hpp"

namespace ep {

/// Dense univariate polynomial over a scalar field (F_p, or F_{p^k} with
/// p^k <= 2^16). Over F_2 the coefficients are packed into machine words.
class Poly {
 public:
  using Word = std::uint64_t;

  explicit Poly(Field field);
  /// Coefficients in ascending order; each must be a valid scalar of the field.
  Poly(Field field, std::vector<Coef> coeffs);

  static Poly zero(Field field) { return Poly(std::move(field)); }
  static Poly one(Field field) { return constant(std::move(field), 1); }
  static Poly constant(Field field, Coef c);
  static Poly x(Field field) { return monomial(std::move(field), 1, 1); }
  static Poly monomial(Field field, Coef c, std::size_t degree);
  /// x^n - 1 (or x^n + p - 1 written out).
  static Poly x_pow_minus_one(Field field, std::size_t n);
  /// Packed construction over F_2.
  static Poly from_words(std::vector<Word> words);

  const Field& field() const noexcept { return field_; }
  bool packed() const noexcept { return field_->is_gf2(); }

  long degree() const noexcept;
  bool is_zero() const noexcept { return degree() < 0; }
  bool is_constant() const noexcept { return degree() <= 0; }
  bool is_one() const noexcept { return degree() == 0 && (*this)[0] == 1; }

  Coef operator[](std::size_t i) const noexcept;
  Coef leading() const noexcept;
  std::vector<Coef> coefficients() const;
  /// Packed words; only valid over F_2.
  const std::vector<Word>& words() const;

  bool operator==(const Poly& other) const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;

  Poly scaled(Coef c) const;
  /// Multiplication by x^s.
  Poly shifted(std::size_t s) const;
  Poly monic() const;
  Poly derivative() const;
  /// Adds c to the constant term.
  Poly plus_constant(Coef c) const;
  Coef eval(Coef point) const;

 private:
  void normalize();

  Field field_;
  std::vector<Coef> c_;   // generic storage, ascending, no trailing zeros
  std::vector<Word> w_;   // packed storage over F_2
};

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);

/// Monic gcd; throws when both inputs are zero.
Poly gcd(const Poly& a, const Poly& b);

Poly powmod(const Poly& base, const BigInt& exponent, const Poly& modulus);
Poly powmod(const Poly& base, std::uint64_t exponent, const Poly& modulus);

/// a(b(x)).
Poly compose(const Poly& a, const Poly& b);
/// a(x + lambda).
Poly shift_substitute(const Poly& a, Coef lambda);
/// x^deg(a) a(1/x), made monic; requires a(0) != 0.
Poly reciprocal(const Poly& a);
bool squarefree(const Poly& a);

struct DegreePart {
  unsigned degree;           // degree of each irreducible factor in the part
  std::size_t total_degree;  // degree of the product of those factors
  Poly product;
};
/// Distinct-degree split of a squarefree polynomial with a(0) != 0.
std::vector<DegreePart> ddf_degrees(const Poly& a);
bool is_irreducible(const Poly& a);

/// Human form, e.g. "x^9+x+1" or "2*x^3+x+2".
std::string to_string(const Poly& a);
/// Machine form "p=<p>;k=<k>;coeffs=<c0,...,cd>".
std::string to_machine(const Poly& a);
/// Packed machine form "p=2;hex=<bytes>", bytes little-endian, two hex digits each.
std::string to_hex_form(const Poly& a);

Poly parse_poly(std::string_view text, const Field& field);
Poly parse_machine(std::string_view text);

}  // namespace ep
