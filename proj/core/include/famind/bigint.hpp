#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace famind {

// Unsigned arbitrary-precision integer. Little-endian base-2^32 limbs with
// no trailing zero limb; the empty limb vector is zero. Group orders and the
// Jordan bounds overflow 64 bits immediately, and everything downstream
// requires exact arithmetic, so no floating point appears anywhere here.
class BigUint {
public:
  BigUint() = default;
  BigUint(uint64_t v);

  static BigUint from_decimal(std::string_view s);
  std::string to_decimal() const;

  bool is_zero() const { return limbs_.empty(); }
  bool is_one() const { return limbs_.size() == 1 && limbs_[0] == 1; }
  bool fits_u64() const { return limbs_.size() <= 2; }
  uint64_t to_u64() const;  // OutOfRange if the value needs more than 64 bits
  size_t bit_length() const;

  friend bool operator==(const BigUint& a, const BigUint& b) { return a.limbs_ == b.limbs_; }
  friend std::strong_ordering operator<=>(const BigUint& a, const BigUint& b);

  BigUint& operator+=(const BigUint& rhs);
  BigUint& operator-=(const BigUint& rhs);  // OutOfRange on underflow
  friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }
  friend BigUint operator-(BigUint a, const BigUint& b) { return a -= b; }
  friend BigUint operator*(const BigUint& a, const BigUint& b);

  BigUint operator<<(size_t bits) const;
  BigUint operator>>(size_t bits) const;

  struct DivMod;
  DivMod divmod(const BigUint& divisor) const;  // InvalidArgument on zero divisor
  uint64_t mod_u64(uint64_t m) const;
  bool divides(const BigUint& other) const;  // *this | other

  BigUint pow(uint64_t exponent) const;
  BigUint isqrt() const;  // floor of the square root

  bool bit(size_t i) const;

  friend std::ostream& operator<<(std::ostream& os, const BigUint& v);

private:
  std::vector<uint32_t> limbs_;

  void trim();
  static BigUint shift_limbs(const BigUint& v, size_t n);
};

struct BigUint::DivMod {
  BigUint quot;
  BigUint rem;
};

inline BigUint operator/(const BigUint& a, const BigUint& b) { return a.divmod(b).quot; }
inline BigUint operator%(const BigUint& a, const BigUint& b) { return a.divmod(b).rem; }

BigUint big_pow(uint64_t base, uint64_t exponent);
BigUint big_factorial(uint64_t n);

}  // namespace famind
