#include "aitbench/bitstring.hpp"

#include "aitbench/error.hpp"

namespace aitbench {

BitString::BitString(std::string_view bits) : bits_(bits) {
  for (char c : bits_) {
    if (c != '0' && c != '1') {
      throw Error(ErrorCode::ParseError, "not a bit string: '" + std::string(bits) + "'");
    }
  }
}

BitString BitString::from_value(std::uint64_t value, std::size_t width) {
  BitString out;
  out.bits_.resize(width, '0');
  for (std::size_t i = 0; i < width; ++i) {
    if ((value >> (width - 1 - i)) & 1U) out.bits_[i] = '1';
  }
  return out;
}

BitString BitString::parse(std::string_view text) {
  if (text == "-") return BitString();
  return BitString(text);
}

BitString BitString::substr(std::size_t pos, std::size_t len) const {
  BitString out;
  out.bits_ = bits_.substr(pos, len);
  return out;
}

bool BitString::is_prefix_of(const BitString& other) const noexcept {
  return bits_.size() <= other.bits_.size() &&
         other.bits_.compare(0, bits_.size(), bits_) == 0;
}

std::strong_ordering BitString::operator<=>(const BitString& other) const noexcept {
  if (auto c = bits_.size() <=> other.bits_.size(); c != 0) return c;
  int r = bits_.compare(other.bits_);
  if (r < 0) return std::strong_ordering::less;
  if (r > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

BitString operator+(BitString a, const BitString& b) {
  a.append(b);
  return a;
}

std::vector<BitString> words_of_length(std::size_t n) {
  std::vector<BitString> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    out.push_back(BitString::from_value(v, n));
  }
  return out;
}

std::vector<BitString> words_up_to(std::size_t n) {
  std::vector<BitString> out;
  out.reserve((std::size_t{1} << (n + 1)) - 1);
  for (std::size_t len = 0; len <= n; ++len) {
    for (auto& w : words_of_length(len)) out.push_back(std::move(w));
  }
  return out;
}

std::uint64_t length_lex_rank(const BitString& w) {
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < w.size(); ++i) value = (value << 1) | (w[i] ? 1U : 0U);
  return ((std::uint64_t{1} << w.size()) - 1) + value;
}

std::size_t bit_length(std::uint64_t n) noexcept {
  std::size_t len = 0;
  while (n != 0) {
    ++len;
    n >>= 1;
  }
  return len;
}

std::size_t ceil_log2(std::uint64_t n) noexcept {
  if (n <= 1) return 0;
  return bit_length(n - 1);
}

}  // namespace aitbench
