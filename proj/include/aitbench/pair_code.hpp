#pragma once

#include "aitbench/bitstring.hpp"

#include <cstdint>
#include <utility>

namespace aitbench {

// Self-delimiting length header 1^{||n||} 0 bin(n), where bin(n) has exactly
// ||n|| = bit_length(n) bits (empty for n == 0).
BitString length_header(std::uint64_t n);
// Reads a header starting at `pos`; advances `pos` past it.
std::uint64_t read_length_header(const BitString& code, std::size_t& pos);

// <x,y> = 1^{||x||} 0 bin(|x|) x y.
BitString pair_encode(const BitString& x, const BitString& y);
std::pair<BitString, BitString> pair_decode(const BitString& code);

// Bits spent on the header alone: 2||x|| + 1.
std::size_t pair_overhead(const BitString& x);

}  // namespace aitbench
