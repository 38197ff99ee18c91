#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace aitbench {

// Finite binary word stored as ASCII '0'/'1'. The empty word is valid.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::string_view bits);

  static BitString from_value(std::uint64_t value, std::size_t width);
  // Serialized form: '-' stands for the empty word.
  static BitString parse(std::string_view text);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  bool operator[](std::size_t i) const noexcept { return bits_[i] == '1'; }
  bool back() const noexcept { return bits_.back() == '1'; }

  void push_back(bool bit) { bits_.push_back(bit ? '1' : '0'); }
  void pop_back() { bits_.pop_back(); }
  void flip_back() { bits_.back() = bits_.back() == '1' ? '0' : '1'; }
  void append(const BitString& other) { bits_ += other.bits_; }
  void reserve(std::size_t n) { bits_.reserve(n); }

  BitString substr(std::size_t pos, std::size_t len = std::string::npos) const;
  bool is_prefix_of(const BitString& other) const noexcept;

  const std::string& str() const noexcept { return bits_; }
  std::string serialize() const { return bits_.empty() ? "-" : bits_; }

  bool operator==(const BitString&) const = default;
  // Length-lex: shorter first, ties lexicographic.
  std::strong_ordering operator<=>(const BitString& other) const noexcept;

 private:
  std::string bits_;
};

BitString operator+(BitString a, const BitString& b);

// All words of length exactly n in lexicographic order.
std::vector<BitString> words_of_length(std::size_t n);
// All words of length <= n in length-lex order.
std::vector<BitString> words_up_to(std::size_t n);

// Length-lex rank: position of the word in words_up_to(infinity).
std::uint64_t length_lex_rank(const BitString& w);

// Number of bits of n in binary; bit_length(0) == 0.
std::size_t bit_length(std::uint64_t n) noexcept;
std::size_t ceil_log2(std::uint64_t n) noexcept;

}  // namespace aitbench

template <>
struct std::hash<aitbench::BitString> {
  std::size_t operator()(const aitbench::BitString& b) const noexcept {
    return std::hash<std::string>{}(b.str());
  }
};
