#include "dehn/bigint.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace dehn {

BigInt::BigInt(std::uint64_t v) {
  if (v != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(v & 0xffffffffu));
    if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
  }
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

std::size_t BigInt::bit_length() const {
  if (limbs_.empty()) return 0;
  std::uint32_t top = limbs_.back();
  std::size_t bits = (limbs_.size() - 1) * 32;
  while (top) {
    ++bits;
    top >>= 1;
  }
  return bits;
}

BigInt& BigInt::operator+=(const BigInt& o) {
  std::uint64_t carry = 0;
  std::size_t n = std::max(limbs_.size(), o.limbs_.size());
  limbs_.resize(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t s = carry + limbs_[i] + (i < o.limbs_.size() ? o.limbs_[i] : 0);
    limbs_[i] = static_cast<std::uint32_t>(s);
    carry = s >> 32;
  }
  if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) {
  assert(*this >= o && "BigInt subtraction underflow");
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::int64_t d = static_cast<std::int64_t>(limbs_[i]) - borrow -
                     (i < o.limbs_.size() ? o.limbs_[i] : 0);
    borrow = 0;
    if (d < 0) {
      d += (std::int64_t{1} << 32);
      borrow = 1;
    }
    limbs_[i] = static_cast<std::uint32_t>(d);
  }
  assert(borrow == 0);
  trim();
  return *this;
}

BigInt operator*(const BigInt& a, const BigInt& b) {
  BigInt out;
  if (a.is_zero() || b.is_zero()) return out;
  out.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
  for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
      std::uint64_t cur = out.limbs_[i + j] + carry +
                          std::uint64_t{a.limbs_[i]} * b.limbs_[j];
      out.limbs_[i + j] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    std::size_t k = i + b.limbs_.size();
    while (carry) {
      std::uint64_t cur = out.limbs_[k] + carry;
      out.limbs_[k] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
      ++k;
    }
  }
  out.trim();
  return out;
}

BigInt& BigInt::operator*=(const BigInt& o) {
  *this = *this * o;
  return *this;
}

int BigInt::compare(const BigInt& o) const {
  if (limbs_.size() != o.limbs_.size())
    return limbs_.size() < o.limbs_.size() ? -1 : 1;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i] ? -1 : 1;
  }
  return 0;
}

void BigInt::divmod(const BigInt& num, const BigInt& den, BigInt& q, BigInt& r) {
  if (den.is_zero()) throw std::domain_error("BigInt division by zero");
  q = BigInt();
  r = BigInt();
  if (num < den) {
    r = num;
    return;
  }
  std::size_t bits = num.bit_length();
  q.limbs_.assign((bits + 31) / 32, 0);
  for (std::size_t i = bits; i-- > 0;) {
    // r = r*2 + bit_i(num)
    std::uint32_t carry = 0;
    for (auto& limb : r.limbs_) {
      std::uint32_t next = limb >> 31;
      limb = (limb << 1) | carry;
      carry = next;
    }
    if (carry) r.limbs_.push_back(carry);
    if ((num.limbs_[i / 32] >> (i % 32)) & 1u) {
      if (r.limbs_.empty())
        r.limbs_.push_back(1);
      else
        r.limbs_[0] |= 1u;
    }
    if (r >= den) {
      r -= den;
      q.limbs_[i / 32] |= (1u << (i % 32));
    }
  }
  q.trim();
  r.trim();
}

BigInt BigInt::operator/(const BigInt& o) const {
  BigInt q, r;
  divmod(*this, o, q, r);
  return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
  BigInt q, r;
  divmod(*this, o, q, r);
  return r;
}

std::string BigInt::to_string() const {
  if (is_zero()) return "0";
  std::vector<std::uint32_t> work = limbs_;
  std::string out;
  while (!work.empty()) {
    // divide by 1e9 in place
    std::uint64_t rem = 0;
    for (std::size_t i = work.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | work[i];
      work[i] = static_cast<std::uint32_t>(cur / 1000000000u);
      rem = cur % 1000000000u;
    }
    while (!work.empty() && work.back() == 0) work.pop_back();
    std::string chunk = std::to_string(rem);
    if (!work.empty()) chunk.insert(0, 9 - chunk.size(), '0');
    out.insert(0, chunk);
  }
  return out;
}

BigInt BigInt::from_decimal(const std::string& s) {
  BigInt out;
  for (char c : s) {
    if (c < '0' || c > '9') throw std::invalid_argument("bad decimal digit");
    out *= BigInt(10);
    out += BigInt(static_cast<std::uint64_t>(c - '0'));
  }
  return out;
}

double BigInt::log_natural() const {
  if (is_zero()) throw std::domain_error("log of zero");
  // Take the top 64 bits as a mantissa and account for the shift.
  std::size_t bits = bit_length();
  if (bits <= 63) return std::log(static_cast<double>(to_u64()));
  std::uint64_t mant = 0;
  std::size_t need = 63;
  std::size_t pos = bits;
  while (need > 0) {
    --pos;
    mant = (mant << 1) | ((limbs_[pos / 32] >> (pos % 32)) & 1u);
    --need;
  }
  return std::log(static_cast<double>(mant)) +
         static_cast<double>(bits - 63) * std::log(2.0);
}

std::uint64_t BigInt::to_u64() const {
  std::uint64_t v = 0;
  if (limbs_.size() > 2) throw std::overflow_error("BigInt does not fit u64");
  if (limbs_.size() > 1) v = std::uint64_t{limbs_[1]} << 32;
  if (!limbs_.empty()) v |= limbs_[0];
  return v;
}

}  // namespace dehn
