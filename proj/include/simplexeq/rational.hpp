#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

namespace simplexeq {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction, always stored in lowest terms with a positive
/// denominator. This is the only scalar type used on computation paths;
/// there is deliberately no conversion from or to floating point.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long long n) : v_(n) {}  // NOLINT: implicit by design (0, 1 literals)
  Rational(long long num, long long den);
  Rational(BigInt num, BigInt den);

  /// Accepts "3", "-2/7" and decimal text such as "0.25"; decimals are
  /// expanded exactly over a power-of-ten denominator ("0.2" -> 1/5).
  /// Throws Error(Errc::parse_error) on anything else.
  static Rational parse(std::string_view text);

  BigInt num() const { return numerator(v_); }
  BigInt den() const { return denominator(v_); }

  bool is_zero() const { return v_.is_zero(); }
  int sign() const { return v_.sign(); }

  /// Canonical lossless form: "num" when integral, otherwise "num/den".
  std::string str() const;

  /// Display-only decimal rendering. Exact when the expansion terminates
  /// within max_digits fractional digits, otherwise truncated and prefixed
  /// with '~'.
  std::string decimal(std::size_t max_digits = 12) const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  boost::multiprecision::cpp_rational v_;
};

}  // namespace simplexeq
