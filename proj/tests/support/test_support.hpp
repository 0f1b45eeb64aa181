#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>

#include "ep/element.hpp"
#include "ep/field.hpp"
#include "ep/poly.hpp"

namespace ep::testing {

/// Seed for randomized tests: EP_SEED when set, otherwise a fixed default so
/// that runs are reproducible.
inline std::uint64_t seed() {
  if (const char* s = std::getenv("EP_SEED")) return std::strtoull(s, nullptr, 0);
  return 0x5eed2026;
}

/// Per-test generator; the salt separates streams of different tests.
inline std::mt19937_64 rng(std::uint64_t salt) { return std::mt19937_64(seed() ^ (salt * 0x9e3779b97f4a7c15ULL)); }

inline std::string seed_note() { return "EP_SEED=" + std::to_string(seed()); }

inline Poly random_poly(std::mt19937_64& g, const Field& f, long max_degree, bool nonzero = false) {
  std::uniform_int_distribution<long> deg(nonzero ? 0 : -1, max_degree);
  std::uniform_int_distribution<Coef> coef(0, f->scalar_count() - 1);
  const long d = deg(g);
  if (d < 0) return Poly::zero(f);
  std::vector<Coef> c(static_cast<std::size_t>(d) + 1);
  for (auto& x : c) x = coef(g);
  if (c.back() == 0) c.back() = 1;
  return Poly(f, std::move(c));
}

inline FieldElement random_element(std::mt19937_64& g, const Field& f) {
  std::uniform_int_distribution<Coef> coef(0, f->p() - 1);
  std::vector<Coef> c(f->k());
  for (auto& x : c) x = coef(g);
  return FieldElement::from_coeffs(f, std::move(c));
}

/// Schoolbook product, written independently of the library kernels.
inline std::vector<Coef> schoolbook_mul(const FieldParams& f, const std::vector<Coef>& a, const std::vector<Coef>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Coef> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

}  // namespace ep::testing
