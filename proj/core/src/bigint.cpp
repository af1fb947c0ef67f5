#include "famind/bigint.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "famind/errors.hpp"

namespace famind {

namespace {
constexpr uint64_t kBase = uint64_t(1) << 32;
}

BigUint::BigUint(uint64_t v) {
  if (v != 0) limbs_.push_back(uint32_t(v & 0xffffffffu));
  if (v >> 32) limbs_.push_back(uint32_t(v >> 32));
}

void BigUint::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

uint64_t BigUint::to_u64() const {
  if (!fits_u64()) throw OutOfRange("value exceeds 64 bits: " + to_decimal());
  uint64_t v = 0;
  if (limbs_.size() > 1) v = uint64_t(limbs_[1]) << 32;
  if (!limbs_.empty()) v |= limbs_[0];
  return v;
}

size_t BigUint::bit_length() const {
  if (limbs_.empty()) return 0;
  uint32_t top = limbs_.back();
  size_t bits = (limbs_.size() - 1) * 32;
  while (top) {
    ++bits;
    top >>= 1;
  }
  return bits;
}

bool BigUint::bit(size_t i) const {
  size_t limb = i / 32;
  if (limb >= limbs_.size()) return false;
  return (limbs_[limb] >> (i % 32)) & 1u;
}

std::strong_ordering operator<=>(const BigUint& a, const BigUint& b) {
  if (a.limbs_.size() != b.limbs_.size())
    return a.limbs_.size() <=> b.limbs_.size();
  for (size_t i = a.limbs_.size(); i-- > 0;) {
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
  }
  return std::strong_ordering::equal;
}

BigUint& BigUint::operator+=(const BigUint& rhs) {
  if (limbs_.size() < rhs.limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
  uint64_t carry = 0;
  for (size_t i = 0; i < limbs_.size(); ++i) {
    uint64_t sum = carry + limbs_[i];
    if (i < rhs.limbs_.size()) sum += rhs.limbs_[i];
    limbs_[i] = uint32_t(sum & 0xffffffffu);
    carry = sum >> 32;
    if (carry == 0 && i >= rhs.limbs_.size()) break;
  }
  if (carry) limbs_.push_back(uint32_t(carry));
  return *this;
}

BigUint& BigUint::operator-=(const BigUint& rhs) {
  if (*this < rhs)
    throw OutOfRange("BigUint subtraction underflow: " + to_decimal() + " - " + rhs.to_decimal());
  int64_t borrow = 0;
  for (size_t i = 0; i < limbs_.size(); ++i) {
    int64_t diff = int64_t(limbs_[i]) - borrow;
    if (i < rhs.limbs_.size()) diff -= int64_t(rhs.limbs_[i]);
    if (diff < 0) {
      diff += int64_t(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    limbs_[i] = uint32_t(diff);
    if (borrow == 0 && i >= rhs.limbs_.size()) break;
  }
  trim();
  return *this;
}

BigUint operator*(const BigUint& a, const BigUint& b) {
  if (a.is_zero() || b.is_zero()) return BigUint();
  BigUint out;
  out.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
  for (size_t i = 0; i < a.limbs_.size(); ++i) {
    uint64_t carry = 0;
    uint64_t ai = a.limbs_[i];
    for (size_t j = 0; j < b.limbs_.size(); ++j) {
      uint64_t cur = out.limbs_[i + j] + ai * b.limbs_[j] + carry;
      out.limbs_[i + j] = uint32_t(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    out.limbs_[i + b.limbs_.size()] += uint32_t(carry);
  }
  out.trim();
  return out;
}

BigUint BigUint::shift_limbs(const BigUint& v, size_t n) {
  if (v.is_zero()) return v;
  BigUint out;
  out.limbs_.assign(n, 0);
  out.limbs_.insert(out.limbs_.end(), v.limbs_.begin(), v.limbs_.end());
  return out;
}

BigUint BigUint::operator<<(size_t bits) const {
  if (is_zero()) return BigUint();
  BigUint out = shift_limbs(*this, bits / 32);
  size_t rem = bits % 32;
  if (rem == 0) return out;
  uint32_t carry = 0;
  for (auto& limb : out.limbs_) {
    uint32_t next = limb >> (32 - rem);
    limb = (limb << rem) | carry;
    carry = next;
  }
  if (carry) out.limbs_.push_back(carry);
  return out;
}

BigUint BigUint::operator>>(size_t bits) const {
  size_t drop = bits / 32;
  if (drop >= limbs_.size()) return BigUint();
  BigUint out;
  out.limbs_.assign(limbs_.begin() + drop, limbs_.end());
  size_t rem = bits % 32;
  if (rem != 0) {
    for (size_t i = 0; i < out.limbs_.size(); ++i) {
      out.limbs_[i] >>= rem;
      if (i + 1 < out.limbs_.size())
        out.limbs_[i] |= out.limbs_[i + 1] << (32 - rem);
    }
  }
  out.trim();
  return out;
}

BigUint::DivMod BigUint::divmod(const BigUint& divisor) const {
  if (divisor.is_zero()) throw InvalidArgument("division by zero");
  if (*this < divisor) return {BigUint(), *this};

  // Short division when the divisor fits one limb.
  if (divisor.limbs_.size() == 1) {
    uint64_t d = divisor.limbs_[0];
    BigUint quot;
    quot.limbs_.assign(limbs_.size(), 0);
    uint64_t rem = 0;
    for (size_t i = limbs_.size(); i-- > 0;) {
      uint64_t cur = (rem << 32) | limbs_[i];
      quot.limbs_[i] = uint32_t(cur / d);
      rem = cur % d;
    }
    quot.trim();
    return {quot, BigUint(rem)};
  }

  // Bitwise long division. Quadratic, fine at the sizes this library sees.
  BigUint quot, rem;
  size_t nbits = bit_length();
  quot.limbs_.assign(limbs_.size(), 0);
  for (size_t i = nbits; i-- > 0;) {
    rem = rem << 1;
    if (bit(i)) {
      if (rem.limbs_.empty())
        rem.limbs_.push_back(1);
      else
        rem.limbs_[0] |= 1;
    }
    if (rem >= divisor) {
      rem -= divisor;
      quot.limbs_[i / 32] |= uint32_t(1) << (i % 32);
    }
  }
  quot.trim();
  return {quot, rem};
}

uint64_t BigUint::mod_u64(uint64_t m) const {
  if (m == 0) throw InvalidArgument("modulus zero");
  uint64_t rem = 0;
  for (size_t i = limbs_.size(); i-- > 0;) {
    // rem < m <= 2^64, so fold the next limb in two 32-bit halves via u128.
    unsigned __int128 cur = (unsigned __int128)rem << 32 | limbs_[i];
    rem = uint64_t(cur % m);
  }
  return rem;
}

bool BigUint::divides(const BigUint& other) const {
  if (is_zero()) return other.is_zero();
  return other.divmod(*this).rem.is_zero();
}

BigUint BigUint::pow(uint64_t exponent) const {
  BigUint result(1);
  BigUint base = *this;
  while (exponent) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

BigUint BigUint::isqrt() const {
  if (limbs_.size() <= 2) {
    uint64_t v = to_u64();
    auto sq = [](uint64_t x) { return (unsigned __int128)x * x; };
    uint64_t r = uint64_t(std::sqrt(double(v)));
    while (r > 0 && sq(r) > v) --r;
    while (sq(r + 1) <= v) ++r;
    return BigUint(r);
  }

  // Binary digit recurrence, two bits per step, on raw limb vectors; only
  // shift/compare/subtract, so it stays fast at the hundred-kilobit sizes
  // the Jordan bound evaluation produces.
  using Limbs = std::vector<uint32_t>;
  auto trim = [](Limbs& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  auto shl = [](Limbs& v, int k) {
    uint32_t carry = 0;
    for (auto& limb : v) {
      uint64_t cur = (uint64_t(limb) << k) | carry;
      limb = uint32_t(cur);
      carry = uint32_t(cur >> 32);
    }
    if (carry) v.push_back(carry);
  };
  auto cmp = [](const Limbs& a, const Limbs& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  };
  auto sub = [&trim](Limbs& a, const Limbs& b) {
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
      int64_t d = int64_t(a[i]) - borrow - int64_t(i < b.size() ? b[i] : 0);
      if (d < 0) {
        d += int64_t(1) << 32;
        borrow = 1;
      } else {
        borrow = 0;
      }
      a[i] = uint32_t(d);
    }
    trim(a);
  };
  auto set_low_bit = [](Limbs& v) {
    if (v.empty())
      v.push_back(1);
    else
      v[0] |= 1;
  };

  size_t bits = bit_length();
  size_t top = bits + (bits & 1);
  Limbs root, rem;
  for (size_t i = top; i >= 2; i -= 2) {
    shl(rem, 2);
    uint32_t pair = (bit(i - 1) ? 2u : 0u) | (bit(i - 2) ? 1u : 0u);
    if (pair) {
      if (rem.empty())
        rem.push_back(pair);
      else
        rem[0] |= pair;
    }
    Limbs cand = root;
    shl(cand, 2);
    set_low_bit(cand);  // 4*root + 1
    shl(root, 1);
    if (cmp(rem, cand) >= 0) {
      sub(rem, cand);
      set_low_bit(root);
    }
  }
  BigUint out;
  out.limbs_ = std::move(root);
  out.trim();
  return out;
}

BigUint BigUint::from_decimal(std::string_view s) {
  if (s.empty()) throw ParseError("empty decimal string");
  BigUint out;
  BigUint ten(10);
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("invalid character in decimal string: '" + std::string(1, c) + "'");
    out = out * ten + BigUint(uint64_t(c - '0'));
  }
  return out;
}

std::string BigUint::to_decimal() const {
  if (is_zero()) return "0";
  std::vector<uint32_t> chunks;  // base 10^9, little-endian
  BigUint v = *this;
  BigUint billion(1000000000u);
  while (!v.is_zero()) {
    auto [q, r] = v.divmod(billion);
    chunks.push_back(uint32_t(r.is_zero() ? 0 : r.to_u64()));
    v = std::move(q);
  }
  std::string out = std::to_string(chunks.back());
  char buf[16];
  for (size_t i = chunks.size() - 1; i-- > 0;) {
    std::snprintf(buf, sizeof buf, "%09u", chunks[i]);
    out += buf;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const BigUint& v) { return os << v.to_decimal(); }

BigUint big_pow(uint64_t base, uint64_t exponent) { return BigUint(base).pow(exponent); }

BigUint big_factorial(uint64_t n) {
  BigUint out(1);
  for (uint64_t i = 2; i <= n; ++i) out = out * BigUint(i);
  return out;
}

}  // namespace famind
