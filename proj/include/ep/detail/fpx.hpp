#pragma once

// Coefficient-vector kernels over any scalar field. Vectors are ascending and
// normalized (no trailing zeros). These back Poly for p != 2 and serve as the
// independent reference path for the packed F_2 kernels.

#include <span>
#include <vector>

#include "ep/field.hpp"

namespace ep::fpx {

using Coefs = std::vector<Coef>;

void normalize(Coefs& a);
Coefs add(const FieldParams& f, std::span<const Coef> a, std::span<const Coef> b);
Coefs sub(const FieldParams& f, std::span<const Coef> a, std::span<const Coef> b);
Coefs mul(const FieldParams& f, std::span<const Coef> a, std::span<const Coef> b);
void divrem(const FieldParams& f, std::span<const Coef> a, std::span<const Coef> b, Coefs& q, Coefs& r);
void rem_inplace(const FieldParams& f, Coefs& a, std::span<const Coef> b);
/// Monic gcd (empty when both are zero).
Coefs gcd(const FieldParams& f, Coefs a, Coefs b);
Coefs monic(const FieldParams& f, Coefs a);

}  // namespace ep::fpx
