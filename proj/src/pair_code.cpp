#include "aitbench/pair_code.hpp"

#include "aitbench/error.hpp"

namespace aitbench {

BitString length_header(std::uint64_t n) {
  const std::size_t width = bit_length(n);
  BitString out;
  for (std::size_t i = 0; i < width; ++i) out.push_back(true);
  out.push_back(false);
  out.append(BitString::from_value(n, width));
  return out;
}

std::uint64_t read_length_header(const BitString& code, std::size_t& pos) {
  std::size_t width = 0;
  while (pos < code.size() && code[pos]) {
    ++width;
    ++pos;
  }
  if (pos >= code.size()) throw Error(ErrorCode::MalformedCode, "header overruns code");
  ++pos;  // the 0 terminator
  if (width > 63) throw Error(ErrorCode::MalformedCode, "length field too wide");
  if (pos + width > code.size()) throw Error(ErrorCode::MalformedCode, "length field truncated");
  if (width > 0 && !code[pos]) {
    throw Error(ErrorCode::MalformedCode, "length field has a leading zero");
  }
  std::uint64_t n = 0;
  for (std::size_t i = 0; i < width; ++i) n = (n << 1) | (code[pos + i] ? 1U : 0U);
  pos += width;
  return n;
}

BitString pair_encode(const BitString& x, const BitString& y) {
  BitString out = length_header(x.size());
  out.append(x);
  out.append(y);
  return out;
}

std::pair<BitString, BitString> pair_decode(const BitString& code) {
  std::size_t pos = 0;
  const std::uint64_t xlen = read_length_header(code, pos);
  if (pos + xlen > code.size()) throw Error(ErrorCode::MalformedCode, "payload too short");
  return {code.substr(pos, xlen), code.substr(pos + xlen)};
}

std::size_t pair_overhead(const BitString& x) { return 2 * bit_length(x.size()) + 1; }

}  // namespace aitbench
