#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "kahlercalc/rational.hpp"

namespace kahlercalc {

/// Univariate polynomial in the formal dimension symbol n, with exact
/// rational coefficients. Degrees stay tiny here (the literature's
/// coefficients are at most quartic in n), so everything is dense and
/// the gcd is the plain Euclidean algorithm over Q.
class PolyN {
 public:
  PolyN() = default;  // zero
  PolyN(const BigRational& constant);  // NOLINT(runtime/explicit)
  PolyN(long long constant) : PolyN(BigRational(constant)) {}  // NOLINT
  /// Coefficients in increasing degree: {8, -4, -2, 1} is n^3 - 2n^2 - 4n + 8.
  PolyN(std::initializer_list<BigRational> coeffs_low_to_high);

  /// The variable n itself.
  static PolyN n();

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  BigRational coeff(int k) const;
  const BigRational& leading() const;

  PolyN operator-() const;
  friend PolyN operator+(const PolyN& a, const PolyN& b);
  friend PolyN operator-(const PolyN& a, const PolyN& b);
  friend PolyN operator*(const PolyN& a, const PolyN& b);
  PolyN& operator+=(const PolyN& o) { return *this = *this + o; }
  PolyN& operator-=(const PolyN& o) { return *this = *this - o; }
  PolyN& operator*=(const PolyN& o) { return *this = *this * o; }

  friend bool operator==(const PolyN& a, const PolyN& b) = default;

  PolyN pow(unsigned e) const;

  /// Exact division with remainder over Q; DomainError when b is zero.
  static void divmod(const PolyN& a, const PolyN& b, PolyN& quot, PolyN& rem);
  /// Monic Euclidean gcd; gcd(0, 0) = 0.
  static PolyN gcd(PolyN a, PolyN b);

  BigRational eval(const BigRational& x) const;

  std::string str() const;

 private:
  void trim();
  std::vector<BigRational> coeffs_;  // coeffs_[k] multiplies n^k
};

inline PolyN operator*(const BigRational& c, const PolyN& p) { return PolyN(c) * p; }
inline PolyN operator*(long long c, const PolyN& p) { return PolyN(c) * p; }
inline PolyN operator+(const PolyN& p, long long c) { return p + PolyN(c); }
inline PolyN operator-(const PolyN& p, long long c) { return p - PolyN(c); }

}  // namespace kahlercalc
