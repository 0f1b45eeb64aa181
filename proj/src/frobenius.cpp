#include "ep/frobenius.hpp"

#include <bit>
#include <stdexcept>

#include "ep/element.hpp"
#include "ep/factor.hpp"

namespace ep {

namespace {

// Powers of the canonical generator of F_{2^k} and the trace as a bit mask.
struct Tables {
  std::uint64_t q;
  std::vector<Coef> power;            // power[t] = gamma^t, t < q - 1
  std::vector<std::uint32_t> log;     // inverse of power on nonzero scalars
  Coef trace_mask;                    // Tr(a) = parity(a & trace_mask)
  Coef gamma;
};

Tables build_tables(unsigned k) {
  if (k < 1 || k > kMaxFrobeniusK) throw std::invalid_argument("frobenius supports 1 <= k <= 16");
  const Field f = make_field(2, k);
  Tables t;
  t.q = std::uint64_t{1} << k;
  const FieldElement g = find_generator(f, factorize(BigInt(to_big(t.q) - 1)));
  t.gamma = g.scalar();
  t.power.resize(t.q - 1);
  t.log.assign(t.q, 0);
  Coef cur = 1;
  for (std::uint64_t i = 0; i + 1 < t.q; ++i) {
    t.power[i] = cur;
    t.log[cur] = static_cast<std::uint32_t>(i);
    cur = f->mul(cur, t.gamma);
  }
  if (cur != 1) throw InternalError("generator order mismatch");
  t.trace_mask = 0;
  for (unsigned i = 0; i < k; ++i) {
    const FieldElement basis = FieldElement::from_index(f, BigInt(1) << i);
    if (trace(basis).scalar() == 1) t.trace_mask |= Coef{1} << i;
  }
  return t;
}

void require_divisor(unsigned k, std::uint64_t n) {
  if (k < 1 || k > kMaxFrobeniusK) throw std::invalid_argument("frobenius supports 1 <= k <= 16");
  const std::uint64_t q1 = (std::uint64_t{1} << k) - 1;
  if (n < 1 || q1 % n != 0) {
    throw std::invalid_argument(std::to_string(n) + " does not divide 2^" + std::to_string(k) + " - 1");
  }
}

std::uint64_t structure_constant(const Tables& t, std::uint64_t n) {
  const std::uint64_t m = (t.q - 1) / n;
  std::uint64_t e = 0;
  for (std::uint64_t j = 0; j < n; ++j) {
    const Coef shifted = t.power[j * m] ^ 1;
    if (shifted != 0 && t.log[shifted] % m == 0) ++e;
  }
  return e;
}

std::vector<std::int64_t> character_values(const Tables& t, std::uint64_t n) {
  const std::uint64_t m = (t.q - 1) / n;
  std::vector<std::int64_t> chi(m, 0);
  for (std::uint64_t i = 0; i < m; ++i) {
    std::int64_t sum = 0;
    for (std::uint64_t j = 0; j < n; ++j) {
      sum += (std::popcount(t.power[i + j * m] & t.trace_mask) & 1) ? -1 : 1;
    }
    chi[i] = sum;
  }
  return chi;
}

}  // namespace

std::uint64_t structure_constant(unsigned k, std::uint64_t n) {
  require_divisor(k, n);
  return structure_constant(build_tables(k), n);
}

std::vector<std::int64_t> character_values(unsigned k, std::uint64_t n) {
  require_divisor(k, n);
  return character_values(build_tables(k), n);
}

CharacterReport verify_identities(unsigned k, std::uint64_t n) {
  require_divisor(k, n);
  const Tables t = build_tables(k);
  CharacterReport r{};
  r.k = k;
  r.q = t.q;
  r.n = n;
  const std::uint64_t m = (t.q - 1) / n;
  for (std::uint64_t i = 0; i < m; ++i) r.coset_reps.push_back(t.power[i]);
  r.chi = character_values(t, n);
  r.e = structure_constant(t, n);
  r.sum_chi2 = 0;
  r.sum_chi3 = 0;
  for (std::int64_t c : r.chi) {
    const BigInt b(static_cast<long>(c));
    r.sum_chi2 += b * b;
    r.sum_chi3 += b * b * b;
  }
  const BigInt q = to_big(t.q);
  const BigInt nn = to_big(n);
  const BigInt gap = q - nn;
  r.orthogonality = nn + r.sum_chi2 == q;
  r.structure_formula = q * to_big(r.e) == nn * nn + r.sum_chi3;
  r.cube_bound = r.sum_chi3 * r.sum_chi3 <= gap * gap * gap;
  r.hypothesis = nn * nn * nn * nn > gap * gap * gap;
  r.implication = !r.hypothesis || r.e > 0;
  return r;
}

std::vector<std::uint64_t> frobenius_divisors(unsigned k) {
  if (k < 1 || k > 63) throw std::invalid_argument("frobenius_divisors needs 1 <= k <= 63");
  return divisors_u64((std::uint64_t{1} << k) - 1);
}

}  // namespace ep
