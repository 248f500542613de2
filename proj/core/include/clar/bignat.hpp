#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace clar {

// Raised when an evaluation would materialize a number past the configured
// bit-length guard (see BigNat::pow2).
struct BlowupError : std::runtime_error {
  explicit BlowupError(const std::string& what) : std::runtime_error(what) {}
};

// Arbitrary-size natural number. Values are identified with binary numerals:
// the canonical rendering has no leading zeros except "0" itself.
class BigNat {
public:
  BigNat() = default;
  BigNat(uint64_t v);

  static BigNat from_binary(const std::string& bits);  // "10101"
  static BigNat from_decimal(const std::string& digits);
  // 2^exp, guarded: throws BlowupError if exp+1 exceeds max_bits.
  static BigNat pow2(uint64_t exp, uint64_t max_bits = kDefaultBitGuard);

  static constexpr uint64_t kDefaultBitGuard = 1u << 21;

  bool is_zero() const { return limbs_.empty(); }
  // Number of bits in the binary numeral; 0 for the number 0.
  uint64_t bit_length() const;
  // y-th least significant bit (0 when y >= bit_length).
  bool bit(uint64_t y) const;

  BigNat succ() const;
  BigNat add(const BigNat& o) const;
  BigNat monus(const BigNat& o) const;  // max(0, *this - o)
  BigNat mul(const BigNat& o) const;
  BigNat half() const;                  // drop least significant bit
  BigNat shl(uint64_t n) const;
  // Low n bits, i.e. *this mod 2^n.
  BigNat low_bits(uint64_t n) const;

  int cmp(const BigNat& o) const;  // -1, 0, 1
  bool operator==(const BigNat& o) const { return limbs_ == o.limbs_; }
  bool operator!=(const BigNat& o) const { return limbs_ != o.limbs_; }
  bool operator<(const BigNat& o) const { return cmp(o) < 0; }
  bool operator<=(const BigNat& o) const { return cmp(o) <= 0; }

  // Fits in uint64_t? Then its value.
  bool fits_u64() const;
  uint64_t to_u64() const;  // requires fits_u64()

  std::string to_binary() const;  // canonical, "0" for zero
  std::string to_decimal() const;

private:
  // Little-endian 32-bit limbs, no trailing zero limbs.
  std::vector<uint32_t> limbs_;
  void trim();
};

}  // namespace clar
