#include "ep/detail/gf2x.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

#if defined(__x86_64__)
#include <immintrin.h>
#endif

namespace ep::gf2x {

namespace {

struct Product {
  Word lo;
  Word hi;
};

Product clmul_soft(Word a, Word b) {
  // 4-bit window over b; the top three bits of a are patched afterwards.
  Word table[16];
  const Word a_low = a & 0x1fffffffffffffffULL;
  table[0] = 0;
  table[1] = a_low;
  for (int i = 2; i < 16; i += 2) {
    table[i] = table[i / 2] << 1;
    table[i + 1] = table[i] ^ a_low;
  }
  Word lo = 0;
  Word hi = 0;
  for (int shift = 60; shift >= 0; shift -= 4) {
    const Word t = table[(b >> shift) & 0xf];
    lo ^= t << shift;
    if (shift != 0) hi ^= t >> (64 - shift);
  }
  for (int top = 61; top < 64; ++top) {
    if ((a >> top) & 1) {
      lo ^= b << top;
      hi ^= b >> (64 - top);
    }
  }
  return {lo, hi};
}

#if defined(__x86_64__)
__attribute__((target("pclmul,sse2"))) Product clmul_hw(Word a, Word b) {
  const __m128i va = _mm_set_epi64x(0, static_cast<long long>(a));
  const __m128i vb = _mm_set_epi64x(0, static_cast<long long>(b));
  const __m128i r = _mm_clmulepi64_si128(va, vb, 0);
  return {static_cast<Word>(_mm_cvtsi128_si64(r)),
          static_cast<Word>(_mm_cvtsi128_si64(_mm_unpackhi_epi64(r, r)))};
}

__attribute__((target("pclmul,sse2"))) void mul_hw(std::span<const Word> a, std::span<const Word> b,
                                                   Word* out) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const __m128i va = _mm_set_epi64x(0, static_cast<long long>(a[i]));
    for (std::size_t j = 0; j < b.size(); ++j) {
      const __m128i vb = _mm_set_epi64x(0, static_cast<long long>(b[j]));
      const __m128i r = _mm_clmulepi64_si128(va, vb, 0);
      out[i + j] ^= static_cast<Word>(_mm_cvtsi128_si64(r));
      out[i + j + 1] ^= static_cast<Word>(_mm_cvtsi128_si64(_mm_unpackhi_epi64(r, r)));
    }
  }
}

const bool kHavePclmul = __builtin_cpu_supports("pclmul");
#else
const bool kHavePclmul = false;
#endif

Word spread32(Word x) {
  x &= 0xffffffffULL;
  x = (x | (x << 16)) & 0x0000ffff0000ffffULL;
  x = (x | (x << 8)) & 0x00ff00ff00ff00ffULL;
  x = (x | (x << 4)) & 0x0f0f0f0f0f0f0f0fULL;
  x = (x | (x << 2)) & 0x3333333333333333ULL;
  x = (x | (x << 1)) & 0x5555555555555555ULL;
  return x;
}

}  // namespace

void normalize(Words& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long degree(std::span<const Word> a) {
  std::size_t n = a.size();
  while (n > 0 && a[n - 1] == 0) --n;
  if (n == 0) return -1;
  return static_cast<long>(64 * (n - 1) + 63 - std::countl_zero(a[n - 1]));
}

bool bit(std::span<const Word> a, std::size_t i) {
  const std::size_t w = i / 64;
  return w < a.size() && ((a[w] >> (i % 64)) & 1);
}

void set_bit(Words& a, std::size_t i) {
  const std::size_t w = i / 64;
  if (a.size() <= w) a.resize(w + 1, 0);
  a[w] |= Word{1} << (i % 64);
}

void flip_bit(Words& a, std::size_t i) {
  const std::size_t w = i / 64;
  if (a.size() <= w) a.resize(w + 1, 0);
  a[w] ^= Word{1} << (i % 64);
  normalize(a);
}

void add_into(Words& a, std::span<const Word> b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] ^= b[i];
  normalize(a);
}

namespace {

// a ^= b << shift without normalizing; a must be large enough.
inline void xor_shifted_raw(Word* a, const Word* b, std::size_t nb, std::size_t shift) {
  const std::size_t ws = shift / 64;
  const unsigned bs = shift % 64;
  if (bs == 0) {
    for (std::size_t i = 0; i < nb; ++i) a[i + ws] ^= b[i];
    return;
  }
  Word carry = 0;
  for (std::size_t i = 0; i < nb; ++i) {
    a[i + ws] ^= (b[i] << bs) | carry;
    carry = b[i] >> (64 - bs);
  }
  a[nb + ws] ^= carry;
}

}  // namespace

void add_shifted(Words& a, std::span<const Word> b, std::size_t shift) {
  if (b.empty()) return;
  const std::size_t need = b.size() + shift / 64 + 1;
  if (a.size() < need) a.resize(need, 0);
  xor_shifted_raw(a.data(), b.data(), b.size(), shift);
  normalize(a);
}

Words shift_left(std::span<const Word> a, std::size_t shift) {
  Words r;
  add_shifted(r, a, shift);
  return r;
}

Words mul(std::span<const Word> a, std::span<const Word> b) {
  if (a.empty() || b.empty()) return {};
  Words out(a.size() + b.size(), 0);
#if defined(__x86_64__)
  if (kHavePclmul) {
    mul_hw(a, b, out.data());
    normalize(out);
    return out;
  }
#endif
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      const Product p = clmul_soft(a[i], b[j]);
      out[i + j] ^= p.lo;
      out[i + j + 1] ^= p.hi;
    }
  }
  normalize(out);
  return out;
}

Words sqr(std::span<const Word> a) {
  Words out(2 * a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[2 * i] = spread32(a[i]);
    out[2 * i + 1] = spread32(a[i] >> 32);
  }
  normalize(out);
  return out;
}

void divrem(std::span<const Word> a, std::span<const Word> b, Words& q, Words& r) {
  const long db = degree(b);
  if (db < 0) throw std::domain_error("gf2x::divrem: division by zero polynomial");
  r.assign(a.begin(), a.end());
  normalize(r);
  q.clear();
  long dr = degree(r);
  if (dr < db) return;
  q.assign(static_cast<std::size_t>(dr - db) / 64 + 1, 0);
  const std::size_t nb = static_cast<std::size_t>(db) / 64 + 1;
  r.resize(r.size() + 1, 0);
  while (dr >= db) {
    const std::size_t s = static_cast<std::size_t>(dr - db);
    q[s / 64] |= Word{1} << (s % 64);
    xor_shifted_raw(r.data(), b.data(), nb, s);
    dr = degree(std::span<const Word>(r.data(), static_cast<std::size_t>(dr) / 64 + 1));
  }
  normalize(r);
  normalize(q);
}

void rem_inplace(Words& a, std::span<const Word> b) {
  const long db = degree(b);
  if (db < 0) throw std::domain_error("gf2x::rem: division by zero polynomial");
  long da = degree(a);
  if (da < db) {
    normalize(a);
    return;
  }
  const std::size_t nb = static_cast<std::size_t>(db) / 64 + 1;
  a.resize(a.size() + 1, 0);
  while (da >= db) {
    xor_shifted_raw(a.data(), b.data(), nb, static_cast<std::size_t>(da - db));
    da = degree(std::span<const Word>(a.data(), static_cast<std::size_t>(da) / 64 + 1));
  }
  normalize(a);
}

Words gcd(Words a, Words b) {
  normalize(a);
  normalize(b);
  long da = degree(a);
  long db = degree(b);
  // Subtractive Euclid: repeatedly cancel the leading term of the larger operand.
  a.resize(a.size() + 1, 0);
  b.resize(b.size() + 1, 0);
  while (db >= 0 && da >= 0) {
    if (da < db) {
      std::swap(a, b);
      std::swap(da, db);
    }
    const std::size_t nb = static_cast<std::size_t>(db) / 64 + 1;
    xor_shifted_raw(a.data(), b.data(), nb, static_cast<std::size_t>(da - db));
    da = degree(std::span<const Word>(a.data(), static_cast<std::size_t>(da) / 64 + 1));
  }
  Words& g = da >= 0 ? a : b;
  normalize(g);
  return std::move(g);
}

}  // namespace ep::gf2x
