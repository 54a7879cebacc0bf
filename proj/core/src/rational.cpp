#include "kahlercalc/rational.hpp"

#include <cctype>
#include <ostream>

#include "kahlercalc/errors.hpp"

namespace kahlercalc {

BigRational::BigRational(const BigInt& num, const BigInt& den) {
  if (den.is_zero()) throw DomainError("division by zero");
  // boost's rational adaptor rejects a negative denominator, so fold the
  // sign into the numerator first; it then reduces by the gcd itself.
  if (den < 0) {
    value_ = boost::multiprecision::cpp_rational(-num, -den);
  } else {
    value_ = boost::multiprecision::cpp_rational(num, den);
  }
}

namespace {

bool parse_integer(std::string_view text, BigInt& out) {
  if (text.empty()) return false;
  std::size_t pos = 0;
  if (text[0] == '-') pos = 1;
  if (pos == text.size()) return false;
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  out = BigInt(std::string(text));
  return true;
}

}  // namespace

BigRational BigRational::parse(std::string_view text) {
  const auto slash = text.find('/');
  BigInt num, den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, num)) {
      throw ParseError("malformed rational '" + std::string(text) + "'");
    }
  } else {
    if (!parse_integer(text.substr(0, slash), num) ||
        !parse_integer(text.substr(slash + 1), den) || den < 0 ||
        text.substr(slash + 1).front() == '-') {
      throw ParseError("malformed rational '" + std::string(text) + "'");
    }
  }
  return BigRational(num, den);
}

BigRational BigRational::operator-() const {
  BigRational r;
  r.value_ = -value_;
  return r;
}

BigRational& BigRational::operator+=(const BigRational& o) {
  value_ += o.value_;
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& o) {
  value_ -= o.value_;
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& o) {
  value_ *= o.value_;
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  value_ /= o.value_;
  return *this;
}

BigRational BigRational::pow(long long e) const {
  if (e < 0) {
    if (is_zero()) throw DomainError("division by zero");
    BigRational base(den(), num());
    return base.pow(-e);
  }
  BigRational result(1);
  BigRational base = *this;
  unsigned long long k = static_cast<unsigned long long>(e);
  while (k != 0) {
    if (k & 1u) result *= base;
    base *= base;
    k >>= 1u;
  }
  return result;
}

std::string BigRational::str() const {
  if (is_integer()) return num().str();
  return num().str() + "/" + den().str();
}

namespace {

BigInt pow10(unsigned k) { return int_pow(BigInt(10), k); }

// Number of decimal digits of a positive integer.
int digits10(const BigInt& x) { return static_cast<int>(x.str().size()); }

}  // namespace

std::string BigRational::decimal(int significant_digits) const {
  if (significant_digits < 1) significant_digits = 1;
  if (is_zero()) return "0";
  const bool negative = sign() < 0;
  const BigInt a = boost::multiprecision::abs(num());
  const BigInt b = den();

  // Exponent e with 10^e <= a/b < 10^(e+1).
  int e = digits10(a) - digits10(b);
  auto less_than_pow = [&](int k) {
    // a/b < 10^k ?
    return k >= 0 ? a < b * pow10(static_cast<unsigned>(k))
                  : a * pow10(static_cast<unsigned>(-k)) < b;
  };
  while (less_than_pow(e)) --e;
  while (!less_than_pow(e + 1)) ++e;

  // Mantissa with `significant_digits` digits, round half up.
  const int shift = significant_digits - 1 - e;
  BigInt scaled_num = a, scaled_den = b;
  if (shift >= 0) {
    scaled_num *= pow10(static_cast<unsigned>(shift));
  } else {
    scaled_den *= pow10(static_cast<unsigned>(-shift));
  }
  BigInt mantissa = scaled_num / scaled_den;
  const BigInt rem = scaled_num - mantissa * scaled_den;
  if (2 * rem >= scaled_den) ++mantissa;
  if (digits10(mantissa) > significant_digits) {  // rounded up to next power
    mantissa /= 10;
    ++e;
  }

  std::string digits = mantissa.str();
  std::string out;
  if (e >= 0 && e <= 14) {
    if (e + 1 >= static_cast<int>(digits.size())) {
      out = digits + std::string(e + 1 - digits.size(), '0');
    } else {
      out = digits.substr(0, e + 1) + "." + digits.substr(e + 1);
    }
  } else if (e < 0 && e >= -4) {
    out = "0." + std::string(-e - 1, '0') + digits;
  } else {
    out = digits.substr(0, 1);
    if (digits.size() > 1) out += "." + digits.substr(1);
    out += "e" + std::string(e >= 0 ? "+" : "") + std::to_string(e);
  }
  // Trim a trailing fractional part of zeros.
  if (out.find('.') != std::string::npos && out.find('e') == std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return negative ? "-" + out : out;
}

std::ostream& operator<<(std::ostream& os, const BigRational& q) {
  return os << q.str();
}

BigInt int_pow(const BigInt& base, unsigned e) {
  BigInt result(1), b = base;
  while (e != 0) {
    if (e & 1u) result *= b;
    b *= b;
    e >>= 1u;
  }
  return result;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result(1);
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

}  // namespace kahlercalc
