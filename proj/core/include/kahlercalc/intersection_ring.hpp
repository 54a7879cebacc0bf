#pragma once

#include <string>
#include <utility>

#include "kahlercalc/rational.hpp"

namespace kahlercalc {

/// A cohomology class of the n-fold X = P(O + O(n-1)) over P^{n-1}, kept in
/// normal form. The ring is generated by L (the relative hyperplane class)
/// and H (the pulled-back hyperplane class) subject to
///
///   L^2 = (n-1) L H,   L H^{n-1} = 1,   H^n = 0,
///
/// so in each degree 1 <= d <= n the basis {L H^{d-1}, H^d} suffices and a
/// class is a pair of rational coefficients; degree 0 is a scalar. The
/// rewrite H^n -> 0 is applied by products that land in top degree; directly
/// constructed classes keep their coefficients as written.
class GradedClass {
 public:
  static GradedClass scalar(int dim, const BigRational& value);
  static GradedClass make(int dim, int degree, const BigRational& lh,
                          const BigRational& h);
  static GradedClass zero(int dim, int degree);
  static GradedClass one(int dim) { return scalar(dim, BigRational(1)); }
  static GradedClass generator_L(int dim);
  static GradedClass generator_H(int dim);

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  /// Scalar value; meaningful only in degree 0.
  const BigRational& scalar_part() const { return scalar_; }
  /// Coefficient of L H^{degree-1}; meaningful only in degree >= 1.
  const BigRational& lh_coeff() const { return lh_; }
  /// Coefficient of H^degree; meaningful only in degree >= 1.
  const BigRational& h_coeff() const { return h_; }

  bool is_zero() const;
  friend bool operator==(const GradedClass& a, const GradedClass& b) = default;

  /// Sum of classes in the same dimension and degree (a zero class is
  /// absorbed regardless of its degree).
  friend GradedClass operator+(const GradedClass& a, const GradedClass& b);
  friend GradedClass operator-(const GradedClass& a, const GradedClass& b);
  GradedClass operator-() const;
  GradedClass scaled(const BigRational& c) const;

  /// Normal-form product. Bilinear; at total degree n the relation H^n = 0
  /// zeroes the pure-H part. DomainError on dimension mismatch or when the
  /// total degree exceeds n.
  friend GradedClass operator*(const GradedClass& a, const GradedClass& b);

  /// Repeated product; power(0) is the degree-0 unit.
  GradedClass power(int k) const;

  /// Pairing against the fundamental class: the coefficient of L H^{n-1}.
  /// DomainError "not a top class" unless degree = dim.
  BigRational top_evaluate() const;

  std::string str() const;

 private:
  GradedClass(int dim, int degree) : dim_(dim), degree_(degree) {}
  int dim_ = 2;
  int degree_ = 0;
  BigRational scalar_;
  BigRational lh_;
  BigRational h_;
};

/// Normal form of the monomial L^i H^j: H^j when i = 0 (zero in top degree),
/// and (n-1)^{i-1} L H^{i+j-1} when i >= 1. DomainError when i + j > n.
GradedClass monomial_normal_form(int i, int j, int dim);

/// The first two Chern classes of X: c1 = 2L + H and
/// c2 = 2n LH - n(n-1)/2 H^2. DomainError when dim < 2.
std::pair<GradedClass, GradedClass> chern_classes(int dim);

}  // namespace kahlercalc
