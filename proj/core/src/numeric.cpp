#include "clar/numeric.hpp"

namespace clar::num {

bool bit_of(const BigNat& x, const BigNat& y) {
  if (!y.fits_u64()) return false;  // y >= |x| for any representable x
  return x.bit(y.to_u64());
}

BigNat bit_replace(const BigNat& x, const BigNat& s, bool value) {
  if (!x.fits_u64()) return s;
  uint64_t pos = x.to_u64();
  bool cur = s.bit(pos);
  if (cur == value) return s;
  if (value) return s.add(BigNat::pow2(pos));
  return s.monus(BigNat::pow2(pos));
}

BigNat bitsum(const BigNat& x, const BigNat& y, const BigNat& u, const BigNat& v) {
  BigNat bound = x < y ? x : y;
  if (!bound.fits_u64()) bound = BigNat(u.bit_length());  // (u)_i = 0 past |u|
  uint64_t top = bound.fits_u64() ? bound.to_u64() : u.bit_length();
  if (top > u.bit_length()) top = u.bit_length();
  uint64_t acc = 0;
  for (uint64_t i = 0; i <= top; ++i) {
    if (u.bit(i) && bit_of(v, y.monus(BigNat(i)))) ++acc;
  }
  return BigNat(acc);
}

bool carry1(const BigNat& y, const BigNat& u, const BigNat& v) {
  if (!y.fits_u64()) return false;
  uint64_t n = y.to_u64() + 1;
  BigNat s = u.low_bits(n).add(v.low_bits(n));
  return s.bit(n);
}

bool borrow1(const BigNat& y, const BigNat& u, const BigNat& v) {
  if (v < u || v == u) {
    if (!y.fits_u64()) return false;
    uint64_t n = y.to_u64() + 1;
    return u.low_bits(n) < v.low_bits(n);
  }
  return false;
}

BigNat mult_carry(const BigNat& y, const BigNat& u, const BigNat& v) {
  if (!y.fits_u64()) return BigNat();
  uint64_t yy = y.to_u64();
  BigNat acc;
  for (uint64_t j = 0; j <= yy; ++j) {
    acc = acc.add(bitsum(BigNat(j), BigNat(j), u, v).shl(j));
  }
  // Shift right by y+1 bits.
  BigNat r = acc;
  for (uint64_t k = 0; k <= yy; ++k) r = r.half();
  return r;
}

}  // namespace clar::num
