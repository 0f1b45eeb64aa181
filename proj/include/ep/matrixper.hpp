#pragma once

#include <cstdint>
#include <optional>

#include "ep/bigint.hpp"
#include "ep/field.hpp"
#include "ep/poly.hpp"

namespace ep {

/// [[a, b], [c, d]] over F_q; entries are scalars of the field.
struct Mat2 {
  Field field;
  Coef a, b, c, d;

  static Mat2 identity(Field f) { return {std::move(f), 1, 0, 0, 1}; }
  Coef det() const;
  bool invertible() const { return det() != 0; }
  bool is_scalar() const { return b == 0 && c == 0 && a == d; }
  bool is_identity() const { return is_scalar() && a == 1; }
  Mat2 operator*(const Mat2& o) const;
  bool operator==(const Mat2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
};

std::uint64_t gl2_order(const Mat2& m);
std::uint64_t pgl2_order(const Mat2& m);
/// Some power of M has second row (1, 0).
bool orbit_condition(const Mat2& m);
/// c x^(q+1) + d x^q - a x - b over F_q.
Poly build_poly(const Mat2& m);

struct MatrixReport {
  std::uint64_t q;
  std::uint64_t u;
  std::uint64_t v;
  bool orbit;
  Poly f;
  bool frobenius_holds;                 // x^(q^u) = x mod f
  std::optional<bool> period_holds;     // x^((q^v - 1)/(q - 1)) = 1 mod f, when orbit
};

/// Requires b != 0 unless allow_degenerate is set; in the degenerate case
/// only the x^(q^u) = x check is made.
MatrixReport check_periods(const Mat2& m, bool allow_degenerate = false);

}  // namespace ep
