#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ep/bigint.hpp"
#include "ep/factor.hpp"
#include "ep/field.hpp"
#include "ep/poly.hpp"

namespace ep {

/// Element of F_{p^k}, stored as a polynomial over F_p of degree < k reduced
/// modulo the field's canonical modulus. Works for any k, including fields
/// too large for scalar tables.
class FieldElement {
 public:
  explicit FieldElement(Field field);

  static FieldElement zero(Field field) { return FieldElement(std::move(field)); }
  static FieldElement one(Field field);
  /// Coefficients over F_p, ascending; reduced modulo the field modulus.
  static FieldElement from_coeffs(Field field, std::vector<Coef> coeffs);
  static FieldElement from_poly(Field field, const Poly& value);
  /// Element whose coefficient vector, read as a base-p numeral (constant
  /// term least significant), equals index.
  static FieldElement from_index(Field field, const BigInt& index);
  /// The class of x (for k = 1 this is the constant 0).
  static FieldElement generator_class(Field field);

  const Field& field() const noexcept { return field_; }
  const Poly& poly() const noexcept { return value_; }
  /// Exactly k coefficients over F_p.
  std::vector<Coef> coefficients() const;
  BigInt index() const;
  /// index() as a Coef; requires field()->has_scalars().
  Coef scalar() const;

  bool is_zero() const noexcept { return value_.is_zero(); }
  bool is_one() const noexcept { return value_.is_one(); }
  bool operator==(const FieldElement& other) const;

  FieldElement operator+(const FieldElement& other) const;
  FieldElement operator-(const FieldElement& other) const;
  FieldElement operator*(const FieldElement& other) const;
  FieldElement operator/(const FieldElement& other) const;
  FieldElement operator-() const;

  FieldElement inverse() const;
  FieldElement pow(const BigInt& e) const;
  FieldElement pow(std::uint64_t e) const;
  /// x -> x^(p^times).
  FieldElement frobenius(unsigned times = 1) const;

  std::size_t hash() const noexcept;

 private:
  FieldElement(Field field, Poly value);

  Field field_;
  Poly value_;
};

struct FieldElementHash {
  std::size_t operator()(const FieldElement& x) const noexcept { return x.hash(); }
};

/// Smallest monic irreducible polynomial of degree k over F_p, comparing
/// coefficient vectors lexicographically from the constant term upward.
Poly find_irreducible(std::uint32_t p, unsigned k);

/// Absolute trace to F_p, returned as an element of the prime field.
FieldElement trace(const FieldElement& x);

/// Element of order p^k - 1, smallest in index order. q_minus_one must be
/// the complete factorization of p^k - 1.
FieldElement find_generator(const Field& field, const Factorization& q_minus_one);

/// Exact multiplicative order of x given x^multiple = 1.
BigInt element_order(const FieldElement& x, const Factorization& multiple);

/// a(x) for a polynomial a over the prime field.
FieldElement evaluate(const Poly& a, const FieldElement& x);

}  // namespace ep
