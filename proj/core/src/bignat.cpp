#include "clar/bignat.hpp"

#include <algorithm>

namespace clar {

void BigNat::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigNat::BigNat(uint64_t v) {
  if (v) {
    limbs_.push_back(static_cast<uint32_t>(v));
    if (v >> 32) limbs_.push_back(static_cast<uint32_t>(v >> 32));
  }
}

BigNat BigNat::from_binary(const std::string& bits) {
  BigNat r;
  if (bits.empty()) throw std::invalid_argument("empty binary numeral");
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("bad binary digit");
  }
  // Most significant bit first.
  size_t n = bits.size();
  r.limbs_.assign((n + 31) / 32, 0);
  for (size_t i = 0; i < n; ++i) {
    if (bits[n - 1 - i] == '1') r.limbs_[i / 32] |= (1u << (i % 32));
  }
  r.trim();
  return r;
}

BigNat BigNat::from_decimal(const std::string& digits) {
  BigNat r;
  for (char c : digits) {
    if (c < '0' || c > '9') throw std::invalid_argument("bad decimal digit");
    r = r.mul(BigNat(10)).add(BigNat(static_cast<uint64_t>(c - '0')));
  }
  return r;
}

BigNat BigNat::pow2(uint64_t exp, uint64_t max_bits) {
  if (exp + 1 > max_bits)
    throw BlowupError("2^" + std::to_string(exp) + " exceeds the " +
                      std::to_string(max_bits) + "-bit guard");
  BigNat r;
  r.limbs_.assign(exp / 32 + 1, 0);
  r.limbs_.back() = 1u << (exp % 32);
  return r;
}

uint64_t BigNat::bit_length() const {
  if (limbs_.empty()) return 0;
  uint32_t top = limbs_.back();
  uint64_t n = (limbs_.size() - 1) * 32ull;
  uint64_t b = 0;
  while (top) {
    ++b;
    top >>= 1;
  }
  return n + b;
}

bool BigNat::bit(uint64_t y) const {
  size_t limb = static_cast<size_t>(y / 32);
  if (limb >= limbs_.size()) return false;
  return (limbs_[limb] >> (y % 32)) & 1u;
}

BigNat BigNat::succ() const { return add(BigNat(1)); }

BigNat BigNat::add(const BigNat& o) const {
  BigNat r;
  const auto& a = limbs_;
  const auto& b = o.limbs_;
  size_t n = std::max(a.size(), b.size());
  r.limbs_.reserve(n + 1);
  uint64_t carry = 0;
  for (size_t i = 0; i < n; ++i) {
    uint64_t s = carry;
    if (i < a.size()) s += a[i];
    if (i < b.size()) s += b[i];
    r.limbs_.push_back(static_cast<uint32_t>(s));
    carry = s >> 32;
  }
  if (carry) r.limbs_.push_back(static_cast<uint32_t>(carry));
  return r;
}

BigNat BigNat::monus(const BigNat& o) const {
  if (cmp(o) <= 0) return BigNat();
  BigNat r;
  r.limbs_.reserve(limbs_.size());
  int64_t borrow = 0;
  for (size_t i = 0; i < limbs_.size(); ++i) {
    int64_t d = static_cast<int64_t>(limbs_[i]) - borrow -
                (i < o.limbs_.size() ? static_cast<int64_t>(o.limbs_[i]) : 0);
    if (d < 0) {
      d += (1ll << 32);
      borrow = 1;
    } else {
      borrow = 0;
    }
    r.limbs_.push_back(static_cast<uint32_t>(d));
  }
  r.trim();
  return r;
}

BigNat BigNat::mul(const BigNat& o) const {
  if (is_zero() || o.is_zero()) return BigNat();
  // Power-of-two operands reduce to shifts; closure audits evaluate products
  // of numbers with hundreds of thousands of bits.
  auto single_bit = [](const BigNat& x) { return x.bit_length() == 0 ? false : x.low_bits(x.bit_length() - 1).is_zero(); };
  if (single_bit(*this)) return o.shl(bit_length() - 1);
  if (single_bit(o)) return shl(o.bit_length() - 1);
  BigNat r;
  r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
  for (size_t i = 0; i < limbs_.size(); ++i) {
    uint64_t carry = 0;
    for (size_t j = 0; j < o.limbs_.size(); ++j) {
      uint64_t cur = r.limbs_[i + j] +
                     static_cast<uint64_t>(limbs_[i]) * o.limbs_[j] + carry;
      r.limbs_[i + j] = static_cast<uint32_t>(cur);
      carry = cur >> 32;
    }
    size_t k = i + o.limbs_.size();
    while (carry) {
      uint64_t cur = r.limbs_[k] + carry;
      r.limbs_[k] = static_cast<uint32_t>(cur);
      carry = cur >> 32;
      ++k;
    }
  }
  r.trim();
  return r;
}

BigNat BigNat::half() const {
  BigNat r;
  r.limbs_.resize(limbs_.size());
  for (size_t i = 0; i < limbs_.size(); ++i) {
    r.limbs_[i] = limbs_[i] >> 1;
    if (i + 1 < limbs_.size() && (limbs_[i + 1] & 1u)) r.limbs_[i] |= 0x80000000u;
  }
  r.trim();
  return r;
}

BigNat BigNat::shl(uint64_t n) const {
  if (is_zero()) return BigNat();
  BigNat r;
  size_t limb_shift = static_cast<size_t>(n / 32);
  unsigned bit_shift = static_cast<unsigned>(n % 32);
  r.limbs_.assign(limbs_.size() + limb_shift + 1, 0);
  for (size_t i = 0; i < limbs_.size(); ++i) {
    uint64_t v = static_cast<uint64_t>(limbs_[i]) << bit_shift;
    r.limbs_[i + limb_shift] |= static_cast<uint32_t>(v);
    r.limbs_[i + limb_shift + 1] |= static_cast<uint32_t>(v >> 32);
  }
  r.trim();
  return r;
}

BigNat BigNat::low_bits(uint64_t n) const {
  BigNat r;
  size_t full = static_cast<size_t>(n / 32);
  unsigned rest = static_cast<unsigned>(n % 32);
  for (size_t i = 0; i < limbs_.size() && i < full; ++i) r.limbs_.push_back(limbs_[i]);
  if (rest && full < limbs_.size())
    r.limbs_.push_back(limbs_[full] & ((1u << rest) - 1u));
  r.trim();
  return r;
}

int BigNat::cmp(const BigNat& o) const {
  if (limbs_.size() != o.limbs_.size())
    return limbs_.size() < o.limbs_.size() ? -1 : 1;
  for (size_t i = limbs_.size(); i-- > 0;) {
    if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i] ? -1 : 1;
  }
  return 0;
}

bool BigNat::fits_u64() const { return limbs_.size() <= 2; }

uint64_t BigNat::to_u64() const {
  uint64_t v = 0;
  if (limbs_.size() > 0) v = limbs_[0];
  if (limbs_.size() > 1) v |= static_cast<uint64_t>(limbs_[1]) << 32;
  return v;
}

std::string BigNat::to_binary() const {
  if (is_zero()) return "0";
  uint64_t n = bit_length();
  std::string s;
  s.reserve(static_cast<size_t>(n));
  for (uint64_t i = n; i-- > 0;) s.push_back(bit(i) ? '1' : '0');
  return s;
}

std::string BigNat::to_decimal() const {
  if (is_zero()) return "0";
  // Repeated division by 10^9.
  std::vector<uint32_t> work(limbs_);
  std::string out;
  while (!work.empty()) {
    uint64_t rem = 0;
    for (size_t i = work.size(); i-- > 0;) {
      uint64_t cur = (rem << 32) | work[i];
      work[i] = static_cast<uint32_t>(cur / 1000000000u);
      rem = cur % 1000000000u;
    }
    while (!work.empty() && work.back() == 0) work.pop_back();
    std::string chunk = std::to_string(rem);
    if (!work.empty()) chunk.insert(0, 9 - chunk.size(), '0');
    out.insert(0, chunk);
  }
  return out;
}

}  // namespace clar
