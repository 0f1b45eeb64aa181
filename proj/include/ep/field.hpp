#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "ep/bigint.hpp"

namespace ep {

class Poly;
class FieldParams;

/// Coefficient-field scalar: the coefficient vector of an element of F_{p^k}
/// read as a base-p numeral, constant term least significant.
using Coef = std::uint32_t;
using Field = std::shared_ptr<const FieldParams>;

inline constexpr std::uint32_t kPrimeBound = 1u << 16;
/// Extensions up to this size get log/antilog tables and can carry Poly coefficients.
inline constexpr std::uint64_t kScalarFieldBound = 1u << 16;

bool is_prime_u64(std::uint64_t n);

/// Arithmetic context for F_p or F_{p^k}. Immutable once published; obtain
/// instances through prime_field() / make_field(), which cache by (p, k).
class FieldParams : public std::enable_shared_from_this<FieldParams> {
 public:
  FieldParams(std::uint32_t p, unsigned k);

  std::uint32_t p() const noexcept { return p_; }
  unsigned k() const noexcept { return k_; }
  bool is_prime_field() const noexcept { return k_ == 1; }
  bool is_gf2() const noexcept { return p_ == 2 && k_ == 1; }
  BigInt order() const;

  /// Whether elements can be used as Coef scalars (and hence as Poly coefficients).
  bool has_scalars() const noexcept { return k_ == 1 || !exp_.empty(); }
  /// Field size q when has_scalars().
  std::uint32_t scalar_count() const noexcept { return q_; }

  /// Canonical defining polynomial over F_p. For k = 1 this is x.
  const Poly& modulus() const;
  Field prime_field() const;

  Coef add(Coef a, Coef b) const noexcept {
    if (k_ == 1) {
      const Coef s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    if (p_ == 2) return a ^ b;
    return add_digits(a, b, false);
  }
  Coef sub(Coef a, Coef b) const noexcept {
    if (k_ == 1) return a >= b ? a - b : a + p_ - b;
    if (p_ == 2) return a ^ b;
    return add_digits(a, b, true);
  }
  Coef neg(Coef a) const noexcept { return sub(0, a); }
  /// v mod p for any 32-bit v (Lemire's multiply-shift reduction).
  Coef reduce(std::uint32_t v) const noexcept {
    const std::uint64_t low = reciprocal_ * v;
    return static_cast<Coef>((static_cast<unsigned __int128>(low) * p_) >> 64);
  }
  Coef mul(Coef a, Coef b) const noexcept {
    if (k_ == 1) return reduce(a * b);
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Coef inv(Coef a) const;
  Coef pow(Coef a, std::uint64_t e) const noexcept;
  /// Image of an integer in the prime subfield.
  Coef from_int(std::int64_t v) const noexcept;

  /// p-th root (inverse Frobenius) of a scalar.
  Coef pth_root(Coef a) const noexcept;

  bool same_as(const FieldParams& other) const noexcept { return p_ == other.p_ && k_ == other.k_; }

 private:
  friend Field make_field(std::uint32_t p, unsigned k);
  Coef add_digits(Coef a, Coef b, bool subtract) const noexcept;
  void build_tables();

  std::uint32_t p_;
  unsigned k_;
  std::uint32_t q_ = 0;
  std::uint64_t reciprocal_;
  Field prime_;
  std::shared_ptr<const Poly> modulus_;
  std::vector<Coef> exp_;            // exp_[i] = g^i, length 2(q-1)
  std::vector<std::uint32_t> log_;   // log_[a] for a != 0
};

Field prime_field(std::uint32_t p);
Field make_field(std::uint32_t p, unsigned k);

inline bool same_field(const Field& a, const Field& b) { return a == b || a->same_as(*b); }
void require_same_field(const Field& a, const Field& b);

}  // namespace ep
