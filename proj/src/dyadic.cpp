#include "aitbench/dyadic.hpp"

#include "aitbench/error.hpp"

#include <charconv>
#include <cmath>

namespace aitbench {

Dyadic::Dyadic(BigInt numerator, std::uint32_t exponent)
    : num_(std::move(numerator)), exp_(exponent) {
  if (num_ < 0) throw Error(ErrorCode::InvalidArgument, "negative dyadic");
  normalize();
}

void Dyadic::normalize() {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  while (exp_ > 0 && !boost::multiprecision::bit_test(num_, 0)) {
    num_ >>= 1;
    --exp_;
  }
}

Dyadic Dyadic::parse(std::string_view text) {
  auto slash = text.find("/2^");
  if (slash == std::string_view::npos) {
    throw Error(ErrorCode::ParseError, "dyadic needs num/2^exp: " + std::string(text));
  }
  std::string num_text(text.substr(0, slash));
  auto exp_text = text.substr(slash + 3);
  std::uint32_t e = 0;
  auto [ptr, ec] = std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), e);
  if (ec != std::errc() || ptr != exp_text.data() + exp_text.size() || num_text.empty() ||
      num_text.find_first_not_of("0123456789") != std::string::npos) {
    throw Error(ErrorCode::ParseError, "bad dyadic: " + std::string(text));
  }
  Dyadic d(BigInt(num_text), e);
  if (d.to_string() != text) {
    throw Error(ErrorCode::ParseError, "dyadic not canonical: " + std::string(text));
  }
  return d;
}

Dyadic& Dyadic::operator+=(const Dyadic& other) {
  if (other.exp_ > exp_) {
    num_ <<= (other.exp_ - exp_);
    exp_ = other.exp_;
    num_ += other.num_;
  } else {
    num_ += other.num_ << (exp_ - other.exp_);
  }
  normalize();
  return *this;
}

Dyadic& Dyadic::operator-=(const Dyadic& other) {
  if (*this < other) throw Error(ErrorCode::InvalidArgument, "negative dyadic difference");
  if (other.exp_ > exp_) {
    num_ <<= (other.exp_ - exp_);
    exp_ = other.exp_;
    num_ -= other.num_;
  } else {
    num_ -= other.num_ << (exp_ - other.exp_);
  }
  normalize();
  return *this;
}

Dyadic& Dyadic::operator*=(std::uint64_t factor) {
  num_ *= factor;
  normalize();
  return *this;
}

std::strong_ordering Dyadic::operator<=>(const Dyadic& other) const {
  BigInt a = num_;
  BigInt b = other.num_;
  if (exp_ < other.exp_) a <<= (other.exp_ - exp_);
  if (other.exp_ < exp_) b <<= (exp_ - other.exp_);
  if (a < b) return std::strong_ordering::less;
  if (a > b) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

BigInt Dyadic::scaled_floor(std::uint32_t bits) const {
  if (bits >= exp_) return num_ << (bits - exp_);
  return num_ >> (exp_ - bits);
}

bool Dyadic::fraction_bit(std::uint32_t i) const {
  return boost::multiprecision::bit_test(scaled_floor(i), 0);
}

Dyadic Dyadic::next_boundary(std::uint32_t bits) const {
  return Dyadic(scaled_floor(bits) + 1, bits);
}

std::uint32_t Dyadic::common_prefix(const Dyadic& other, std::uint32_t cap) const {
  std::uint32_t s = 0;
  while (s < cap && scaled_floor(s + 1) == other.scaled_floor(s + 1)) ++s;
  return s;
}

std::string Dyadic::to_string() const {
  return num_.str() + "/2^" + std::to_string(exp_);
}

double Dyadic::to_double() const {
  return num_.convert_to<double>() / std::ldexp(1.0, static_cast<int>(exp_));
}

}  // namespace aitbench
