#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>
#include <string_view>

namespace kahlercalc {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar, the universal number type of the library.
///
/// Values are always canonical: denominator > 0, gcd(|num|, den) = 1,
/// zero is 0/1. The textual form is "p/q", or just "p" when q = 1, with
/// a leading "-" allowed on p only; this format is used verbatim in all
/// file and CLI I/O. There is no floating point anywhere: approximate
/// display strings are produced by exact integer long division.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long long value) : value_(value) {}  // NOLINT(runtime/explicit)
  BigRational(const BigInt& value) : value_(value) {}  // NOLINT
  BigRational(const BigInt& num, const BigInt& den);

  /// Parses "p/q" or "p". Throws ParseError on malformed input and
  /// DomainError on a zero denominator.
  static BigRational parse(std::string_view text);

  BigInt num() const { return boost::multiprecision::numerator(value_); }
  BigInt den() const { return boost::multiprecision::denominator(value_); }

  bool is_zero() const { return value_.is_zero(); }
  bool is_integer() const { return den() == 1; }
  int sign() const { return value_.sign(); }

  BigRational operator-() const;
  BigRational& operator+=(const BigRational& o);
  BigRational& operator-=(const BigRational& o);
  BigRational& operator*=(const BigRational& o);
  BigRational& operator/=(const BigRational& o);  // DomainError on zero

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

  friend bool operator==(const BigRational& a, const BigRational& b) = default;
  friend auto operator<=>(const BigRational& a, const BigRational& b) {
    return a.value_.compare(b.value_) <=> 0;
  }

  /// Exact integer power; a negative exponent inverts (DomainError on 0).
  BigRational pow(long long e) const;

  std::string str() const;

  /// Decimal approximation with the given number of significant digits,
  /// round half up, computed by exact integer arithmetic.
  std::string decimal(int significant_digits = 6) const;

 private:
  boost::multiprecision::cpp_rational value_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& q);

BigInt int_pow(const BigInt& base, unsigned e);
BigInt binomial(unsigned n, unsigned k);

}  // namespace kahlercalc
