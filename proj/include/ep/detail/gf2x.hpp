#pragma once

// Packed GF(2)[x] kernels. A polynomial is a little-endian vector of 64-bit
// words, bit i of the whole vector being the coefficient of x^i. Results are
// normalized: no trailing zero words.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ep::gf2x {

using Word = std::uint64_t;
using Words = std::vector<Word>;

void normalize(Words& a);
long degree(std::span<const Word> a);  // -1 for zero
bool bit(std::span<const Word> a, std::size_t i);
void set_bit(Words& a, std::size_t i);
void flip_bit(Words& a, std::size_t i);

void add_into(Words& a, std::span<const Word> b);
// a ^= b * x^shift
void add_shifted(Words& a, std::span<const Word> b, std::size_t shift);
Words shift_left(std::span<const Word> a, std::size_t shift);

Words mul(std::span<const Word> a, std::span<const Word> b);
Words sqr(std::span<const Word> a);
// Quotient and remainder; b nonzero.
void divrem(std::span<const Word> a, std::span<const Word> b, Words& q, Words& r);
void rem_inplace(Words& a, std::span<const Word> b);
Words gcd(Words a, Words b);

}  // namespace ep::gf2x
