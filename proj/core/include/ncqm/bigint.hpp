#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ncqm {

// Signed arbitrary-precision integer, base 2^32 little-endian magnitude.
// Just enough for exact Stirling-number and falling-factorial combinatorics;
// converted to double only at evaluation points.
class BigInt {
public:
  BigInt() = default;
  BigInt(std::int64_t v);

  bool is_zero() const { return mag_.empty(); }
  int sign() const { return is_zero() ? 0 : (neg_ ? -1 : 1); }

  BigInt operator-() const;
  BigInt& operator+=(const BigInt& o);
  BigInt& operator-=(const BigInt& o);
  BigInt& operator*=(const BigInt& o);

  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }

  friend bool operator==(const BigInt& a, const BigInt& b) {
    return a.neg_ == b.neg_ && a.mag_ == b.mag_;
  }

  std::string to_string() const;
  double to_double() const;

private:
  static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  // requires |a| >= |b|
  static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  void trim();

  bool neg_ = false;
  std::vector<std::uint32_t> mag_;  // empty means zero
};

}  // namespace ncqm
