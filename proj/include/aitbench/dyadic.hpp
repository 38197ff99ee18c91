#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace aitbench {

using BigInt = boost::multiprecision::cpp_int;

// Exact nonnegative rational num / 2^exp, kept canonical (num odd, or num == 0
// with exp == 0). Masses 2^-|p| and all sums of them live here.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(BigInt numerator, std::uint32_t exponent);

  static Dyadic mass(std::uint32_t length) { return Dyadic(1, length); }
  static Dyadic integer(std::uint64_t n) { return Dyadic(BigInt(n), 0); }
  // Accepts the "num/2^exp" form produced by to_string().
  static Dyadic parse(std::string_view text);

  const BigInt& numerator() const noexcept { return num_; }
  std::uint32_t exponent() const noexcept { return exp_; }
  bool is_zero() const noexcept { return num_ == 0; }

  Dyadic& operator+=(const Dyadic& other);
  Dyadic& operator-=(const Dyadic& other);  // requires *this >= other
  Dyadic& operator*=(std::uint64_t factor);

  friend Dyadic operator+(Dyadic a, const Dyadic& b) { return a += b; }
  friend Dyadic operator-(Dyadic a, const Dyadic& b) { return a -= b; }
  friend Dyadic operator*(Dyadic a, std::uint64_t f) { return a *= f; }

  bool operator==(const Dyadic& other) const noexcept {
    return exp_ == other.exp_ && num_ == other.num_;
  }
  std::strong_ordering operator<=>(const Dyadic& other) const;

  // floor(value * 2^bits); for value < 1 this is the first `bits` binary digits.
  BigInt scaled_floor(std::uint32_t bits) const;
  // Bit i (1-based) of the fractional expansion.
  bool fraction_bit(std::uint32_t i) const;
  // Smallest multiple of 2^-bits strictly above the value.
  Dyadic next_boundary(std::uint32_t bits) const;
  // Number of leading fractional bits shared with `other`, capped at `cap`.
  std::uint32_t common_prefix(const Dyadic& other, std::uint32_t cap) const;

  std::string to_string() const;
  double to_double() const;

 private:
  void normalize();

  BigInt num_ = 0;
  std::uint32_t exp_ = 0;
};

}  // namespace aitbench
