#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "consensus/errors.hpp"

namespace consensus {

/// Arbitrary-precision unsigned integer, sized for Mahonian tables and
/// factorial ratios. Supports addition, multiplication by machine words,
/// comparison, and lossy conversion to double / natural log.
class BigNat {
 public:
  BigNat() = default;

  BigNat(std::uint64_t v) {  // NOLINT: implicit by design, mirrors integer use
    while (v != 0) {
      limbs_.push_back(static_cast<std::uint32_t>(v & 0xffffffffu));
      v >>= 32;
    }
  }

  bool is_zero() const { return limbs_.empty(); }

  BigNat& operator+=(const BigNat& o) {
    if (limbs_.size() < o.limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      std::uint64_t s = carry + limbs_[i];
      if (i < o.limbs_.size()) s += o.limbs_[i];
      limbs_[i] = static_cast<std::uint32_t>(s & 0xffffffffu);
      carry = s >> 32;
    }
    if (carry != 0) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
  }

  friend BigNat operator+(BigNat a, const BigNat& b) {
    a += b;
    return a;
  }

  BigNat& operator*=(std::uint64_t f) {
    if (f == 0 || is_zero()) {
      limbs_.clear();
      return *this;
    }
    unsigned __int128 carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      unsigned __int128 cur = carry + static_cast<unsigned __int128>(limbs_[i]) * f;
      limbs_[i] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    while (carry != 0) {
      limbs_.push_back(static_cast<std::uint32_t>(carry & 0xffffffffu));
      carry >>= 32;
    }
    return *this;
  }

  friend BigNat operator*(BigNat a, std::uint64_t f) {
    a *= f;
    return a;
  }

  friend bool operator==(const BigNat& a, const BigNat& b) { return a.limbs_ == b.limbs_; }

  friend std::strong_ordering operator<=>(const BigNat& a, const BigNat& b) {
    if (a.limbs_.size() != b.limbs_.size())
      return a.limbs_.size() <=> b.limbs_.size();
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
      if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
    }
    return std::strong_ordering::equal;
  }

  std::size_t bit_length() const {
    if (limbs_.empty()) return 0;
    std::uint32_t top = limbs_.back();
    std::size_t bits = (limbs_.size() - 1) * 32;
    while (top != 0) {
      ++bits;
      top >>= 1;
    }
    return bits;
  }

  /// Value as uint64_t when it fits, nullopt otherwise.
  std::optional<std::uint64_t> to_u64() const {
    if (limbs_.size() > 2) return std::nullopt;
    std::uint64_t v = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) v = (v << 32) | limbs_[i];
    return v;
  }

  /// Nearest double; +inf when the value exceeds the double range.
  double to_double() const {
    if (limbs_.empty()) return 0.0;
    std::size_t bits = bit_length();
    if (bits <= 64) return static_cast<double>(*to_u64());
    return std::ldexp(static_cast<double>(top_bits_64()), static_cast<int>(bits) - 64);
  }

  /// Natural logarithm; usable even for numbers far beyond double range.
  /// ln(0) is -inf.
  double ln() const {
    if (limbs_.empty()) return -std::numeric_limits<double>::infinity();
    std::size_t bits = bit_length();
    if (bits <= 64) return std::log(static_cast<double>(*to_u64()));
    constexpr double kLn2 = 0.69314718055994530941723212145818;
    return std::log(static_cast<double>(top_bits_64())) +
           (static_cast<double>(bits) - 64.0) * kLn2;
  }

  /// num/den as double, usable even when both exceed the double range.
  static double ratio(const BigNat& num, const BigNat& den) {
    if (den.is_zero()) throw ArgumentError("BigNat::ratio: division by zero");
    if (num.is_zero()) return 0.0;
    double dn = num.to_double();
    double dd = den.to_double();
    if (std::isfinite(dn) && std::isfinite(dd)) return dn / dd;
    return std::exp(num.ln() - den.ln());
  }

  std::string to_string() const {
    if (limbs_.empty()) return "0";
    std::vector<std::uint32_t> work = limbs_;
    std::string out;
    while (!work.empty()) {
      std::uint64_t rem = 0;
      for (std::size_t i = work.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | work[i];
        work[i] = static_cast<std::uint32_t>(cur / 1000000000u);
        rem = cur % 1000000000u;
      }
      while (!work.empty() && work.back() == 0) work.pop_back();
      std::string chunk = std::to_string(rem);
      if (work.empty()) {
        out.insert(0, chunk);
      } else {
        out.insert(0, std::string(9 - chunk.size(), '0') + chunk);
      }
    }
    return out;
  }

 private:
  std::uint64_t top_bits_64() const {
    std::size_t bits = bit_length();
    std::uint64_t mant = 0;
    for (int b = 0; b < 64; ++b) {
      std::size_t bit_index = bits - 1 - static_cast<std::size_t>(b);
      std::size_t limb = bit_index / 32;
      std::uint32_t mask = 1u << (bit_index % 32);
      mant = (mant << 1) | ((limbs_[limb] & mask) != 0 ? 1u : 0u);
    }
    return mant;
  }

  std::vector<std::uint32_t> limbs_;  // little-endian base 2^32, no leading zeros
};

/// v! as a BigNat.
inline BigNat factorial_big(std::uint64_t v) {
  BigNat r{1};
  for (std::uint64_t i = 2; i <= v; ++i) r *= i;
  return r;
}

}  // namespace consensus
