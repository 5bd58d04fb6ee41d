#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dehn {

/// Non-negative arbitrary-precision integer. Base 2^32 limbs, little endian.
/// Covers exactly what the counting formulas need: add, subtract (no
/// underflow), multiply, divide, decimal i/o and a double-precision natural
/// log for diagnostics.
class BigInt {
 public:
  BigInt() = default;
  BigInt(std::uint64_t v);  // NOLINT: implicit by design, mirrors int usage

  static BigInt from_decimal(const std::string& s);

  bool is_zero() const { return limbs_.empty(); }
  std::size_t bit_length() const;

  BigInt& operator+=(const BigInt& o);
  BigInt& operator-=(const BigInt& o);  // requires *this >= o
  BigInt& operator*=(const BigInt& o);

  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(const BigInt& a, const BigInt& b);

  /// Quotient and remainder; `den` must be nonzero.
  static void divmod(const BigInt& num, const BigInt& den, BigInt& q, BigInt& r);
  BigInt operator/(const BigInt& o) const;
  BigInt operator%(const BigInt& o) const;

  int compare(const BigInt& o) const;
  bool operator==(const BigInt& o) const { return limbs_ == o.limbs_; }
  bool operator!=(const BigInt& o) const { return !(*this == o); }
  bool operator<(const BigInt& o) const { return compare(o) < 0; }
  bool operator<=(const BigInt& o) const { return compare(o) <= 0; }
  bool operator>(const BigInt& o) const { return compare(o) > 0; }
  bool operator>=(const BigInt& o) const { return compare(o) >= 0; }

  std::string to_string() const;
  /// ln(value); requires value > 0.
  double log_natural() const;
  bool fits_u64() const { return limbs_.size() <= 2; }
  std::uint64_t to_u64() const;  // requires fits_u64()

 private:
  void trim();
  std::vector<std::uint32_t> limbs_;
};

inline BigInt sq(const BigInt& a) { return a * a; }

}  // namespace dehn
