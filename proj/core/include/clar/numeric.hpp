#pragma once

#include "clar/bignat.hpp"

namespace clar::num {

// |x| = bit length of the binary numeral for x (0 for 0).
inline BigNat length(const BigNat& x) { return BigNat(x.bit_length()); }

// (x)_y, the y-th least significant bit; 0 when y >= |x|.
bool bit_of(const BigNat& x, const BigNat& y);

// Bit(y, x) holds iff (x)_y = 1.
inline bool bit_pred(const BigNat& y, const BigNat& x) { return bit_of(x, y); }

// u (-) v = max(0, u - v), limited subtraction.
inline BigNat monus(const BigNat& u, const BigNat& v) { return u.monus(v); }

// Floor of u/2: drop the least significant bit.
inline BigNat half(const BigNat& u) { return u.half(); }

// Replace the x-th least significant bit of s by the given value.
BigNat bit_replace(const BigNat& x, const BigNat& s, bool value);

// Bitsum(x, y, u, v) = sum over i = 0..min(x,y) of (u)_i * (v)_{y-i}.
BigNat bitsum(const BigNat& x, const BigNat& y, const BigNat& u, const BigNat& v);

// Carry1(y, u, v): the carry produced at step y of the school addition of
// u and v is 1. Closed form: carry out of position y equals
// floor((low(u, y+1) + low(v, y+1)) / 2^{y+1}).
bool carry1(const BigNat& y, const BigNat& u, const BigNat& v);

// Borrow1(y, u, v): u >= v and step y of the school subtraction u - v
// borrows from step y+1, i.e. low(u, y+1) < low(v, y+1).
bool borrow1(const BigNat& y, const BigNat& u, const BigNat& v);

// Carry(y, u, v): the (possibly large) carry after step y of the school
// multiplication of u by v: floor(sum_{j<=y} Bitsum(j,j,u,v) 2^j / 2^{y+1}).
BigNat mult_carry(const BigNat& y, const BigNat& u, const BigNat& v);

}  // namespace clar::num
