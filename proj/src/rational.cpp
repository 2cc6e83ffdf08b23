#include "simplexeq/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "simplexeq/errors.hpp"

namespace simplexeq {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad_literal(std::string_view text) {
  throw Error(Errc::parse_error,
              "not a rational literal: '" + std::string(text) + "'");
}

}  // namespace

Rational::Rational(long long num, long long den)
    : Rational(BigInt(num), BigInt(den)) {}

Rational::Rational(BigInt num, BigInt den) {
  if (den.is_zero()) {
    throw Error(Errc::parse_error, "rational with zero denominator");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  v_ = boost::multiprecision::cpp_rational(std::move(num), std::move(den));
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) bad_literal(text);

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
    if (s.empty()) bad_literal(text);
  }

  BigInt num;
  BigInt den = 1;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view ns = s.substr(0, slash);
    std::string_view ds = s.substr(slash + 1);
    if (!all_digits(ns) || !all_digits(ds)) bad_literal(text);
    num = BigInt(std::string(ns));
    den = BigInt(std::string(ds));
    if (den.is_zero()) {
      throw Error(Errc::parse_error,
                  "zero denominator in '" + std::string(text) + "'");
    }
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot);
    std::string_view fp = s.substr(dot + 1);
    if (ip.empty() && fp.empty()) bad_literal(text);
    if (!ip.empty() && !all_digits(ip)) bad_literal(text);
    if (!fp.empty() && !all_digits(fp)) bad_literal(text);
    num = ip.empty() ? BigInt(0) : BigInt(std::string(ip));
    for (char c : fp) {
      num = num * 10 + (c - '0');
      den *= 10;
    }
  } else {
    if (!all_digits(s)) bad_literal(text);
    num = BigInt(std::string(s));
  }
  if (negative) num = -num;
  return Rational(std::move(num), std::move(den));
}

std::string Rational::str() const {
  BigInt d = den();
  if (d == 1) return num().str();
  return num().str() + "/" + d.str();
}

std::string Rational::decimal(std::size_t max_digits) const {
  BigInt n = num();
  BigInt d = den();
  std::string out;
  if (n < 0) {
    out.push_back('-');
    n = -n;
  }
  BigInt whole = n / d;
  BigInt rem = n % d;
  out += whole.str();
  if (rem.is_zero()) return out;
  out.push_back('.');
  std::size_t produced = 0;
  while (!rem.is_zero() && produced < max_digits) {
    rem *= 10;
    BigInt digit = rem / d;
    rem %= d;
    out += digit.str();
    ++produced;
  }
  if (!rem.is_zero()) out.insert(out.begin(), '~');
  return out;
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace simplexeq
