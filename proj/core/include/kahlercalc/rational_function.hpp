#pragma once

#include <string>

#include "kahlercalc/polynomial.hpp"
#include "kahlercalc/rational.hpp"

namespace kahlercalc {

/// Rational function of the dimension symbol n, always in canonical form:
/// numerator and denominator are coprime polynomials with integer
/// coefficients, jointly primitive, and the denominator has a positive
/// leading coefficient. Canonical form makes equality structural.
class RationalFunctionN {
 public:
  RationalFunctionN() : num_(), den_(1) {}  // zero
  RationalFunctionN(const BigRational& c);  // NOLINT(runtime/explicit)
  RationalFunctionN(long long c) : RationalFunctionN(BigRational(c)) {}  // NOLINT
  RationalFunctionN(const PolyN& p);  // NOLINT(runtime/explicit)
  /// Simplifies num/den; DomainError when den is the zero polynomial.
  RationalFunctionN(const PolyN& num, const PolyN& den);

  const PolyN& num() const { return num_; }
  const PolyN& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunctionN operator-() const;
  friend RationalFunctionN operator+(const RationalFunctionN& a, const RationalFunctionN& b);
  friend RationalFunctionN operator-(const RationalFunctionN& a, const RationalFunctionN& b);
  friend RationalFunctionN operator*(const RationalFunctionN& a, const RationalFunctionN& b);
  friend RationalFunctionN operator/(const RationalFunctionN& a, const RationalFunctionN& b);
  RationalFunctionN& operator+=(const RationalFunctionN& o) { return *this = *this + o; }
  RationalFunctionN& operator-=(const RationalFunctionN& o) { return *this = *this - o; }
  RationalFunctionN& operator*=(const RationalFunctionN& o) { return *this = *this * o; }
  RationalFunctionN& operator/=(const RationalFunctionN& o) { return *this = *this / o; }

  friend bool operator==(const RationalFunctionN& a, const RationalFunctionN& b) = default;

  /// Exact value at n = n0; DomainError "pole" when the (reduced)
  /// denominator vanishes there.
  BigRational eval_at(const BigRational& n0) const;

  std::string str() const;

 private:
  void simplify();
  PolyN num_, den_;
};

}  // namespace kahlercalc
