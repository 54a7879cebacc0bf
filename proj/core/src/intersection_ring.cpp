#include "kahlercalc/intersection_ring.hpp"

#include <string>

#include "kahlercalc/errors.hpp"

namespace kahlercalc {

namespace {

void check_dim(int dim) {
  if (dim < 2) throw DomainError("dimension must be at least 2");
  // Keeps every int-typed coefficient expression far from overflow.
  if (dim > 1000000) throw DomainError("dimension out of supported range");
}

void check_degree(int degree, int dim) {
  if (degree < 0 || degree > dim) {
    throw DomainError("degree " + std::to_string(degree) +
                      " outside [0, " + std::to_string(dim) + "]");
  }
}

}  // namespace

GradedClass GradedClass::scalar(int dim, const BigRational& value) {
  check_dim(dim);
  GradedClass c(dim, 0);
  c.scalar_ = value;
  return c;
}

GradedClass GradedClass::make(int dim, int degree, const BigRational& lh,
                              const BigRational& h) {
  check_dim(dim);
  check_degree(degree, dim);
  if (degree == 0) throw DomainError("degree-0 classes are scalars");
  GradedClass c(dim, degree);
  c.lh_ = lh;
  c.h_ = h;
  return c;
}

GradedClass GradedClass::zero(int dim, int degree) {
  check_dim(dim);
  check_degree(degree, dim);
  return GradedClass(dim, degree);
}

GradedClass GradedClass::generator_L(int dim) {
  return make(dim, 1, BigRational(1), BigRational(0));
}

GradedClass GradedClass::generator_H(int dim) {
  return make(dim, 1, BigRational(0), BigRational(1));
}

bool GradedClass::is_zero() const {
  return degree_ == 0 ? scalar_.is_zero() : lh_.is_zero() && h_.is_zero();
}

GradedClass operator+(const GradedClass& a, const GradedClass& b) {
  if (a.dim_ != b.dim_) throw DomainError("dimension mismatch");
  if (a.degree_ != b.degree_) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    throw DomainError("inhomogeneous sum: degree " + std::to_string(a.degree_) +
                      " + degree " + std::to_string(b.degree_));
  }
  GradedClass r(a.dim_, a.degree_);
  r.scalar_ = a.scalar_ + b.scalar_;
  r.lh_ = a.lh_ + b.lh_;
  r.h_ = a.h_ + b.h_;
  return r;
}

GradedClass GradedClass::operator-() const {
  GradedClass r(dim_, degree_);
  r.scalar_ = -scalar_;
  r.lh_ = -lh_;
  r.h_ = -h_;
  return r;
}

GradedClass operator-(const GradedClass& a, const GradedClass& b) { return a + (-b); }

GradedClass GradedClass::scaled(const BigRational& c) const {
  GradedClass r(dim_, degree_);
  r.scalar_ = scalar_ * c;
  r.lh_ = lh_ * c;
  r.h_ = h_ * c;
  return r;
}

GradedClass operator*(const GradedClass& a, const GradedClass& b) {
  if (a.dim_ != b.dim_) throw DomainError("dimension mismatch");
  const int n = a.dim_;
  const int degree = a.degree_ + b.degree_;
  if (degree > n) throw DomainError("degree exceeds dimension");
  if (a.degree_ == 0) return b.scaled(a.scalar_);
  if (b.degree_ == 0) return a.scaled(b.scalar_);
  // (a1 LH^{d1-1} + b1 H^{d1})(a2 LH^{d2-1} + b2 H^{d2}) with
  // L^2 H^{d-2} = (n-1) LH^{d-1}.
  GradedClass r(n, degree);
  r.lh_ = a.lh_ * b.lh_ * BigRational(n - 1) + a.lh_ * b.h_ + a.h_ * b.lh_;
  r.h_ = a.h_ * b.h_;
  if (degree == n) r.h_ = BigRational(0);  // H^n = 0
  return r;
}

GradedClass GradedClass::power(int k) const {
  if (k < 0) throw DomainError("negative power of a graded class");
  if (degree_ == 0) return GradedClass::scalar(dim_, scalar_.pow(k));
  if (static_cast<long long>(k) * degree_ > dim_) {
    throw DomainError("degree exceeds dimension");
  }
  GradedClass result = GradedClass::one(dim_);
  for (int i = 0; i < k; ++i) result = result * *this;
  return result;
}

BigRational GradedClass::top_evaluate() const {
  if (degree_ != dim_) throw DomainError("not a top class");
  return lh_;  // L H^{n-1} = 1 and H^n = 0
}

std::string GradedClass::str() const {
  if (degree_ == 0) return scalar_.str();
  const int d = degree_;
  auto lh_name = [&] {
    return d == 1 ? std::string("L") : "L*H^" + std::to_string(d - 1);
  };
  auto h_name = [&] {
    return d == 1 ? std::string("H") : "H^" + std::to_string(d);
  };
  if (is_zero()) return "0";
  std::string out;
  if (!lh_.is_zero()) {
    out += (lh_ == BigRational(1)) ? lh_name() : lh_.str() + "*" + lh_name();
  }
  if (!h_.is_zero()) {
    if (!out.empty()) out += h_.sign() < 0 ? " - " : " + ";
    else if (h_.sign() < 0) out += "-";
    const BigRational mag = h_.sign() < 0 ? -h_ : h_;
    out += (mag == BigRational(1)) ? h_name() : mag.str() + "*" + h_name();
  }
  return out;
}

GradedClass monomial_normal_form(int i, int j, int dim) {
  check_dim(dim);
  if (i < 0 || j < 0) throw DomainError("negative exponent");
  if (i + j > dim) throw DomainError("degree exceeds dimension");
  if (i == 0 && j == 0) return GradedClass::one(dim);
  if (i == 0) {
    if (j == dim) return GradedClass::zero(dim, dim);  // H^n = 0
    return GradedClass::make(dim, j, BigRational(0), BigRational(1));
  }
  const BigRational coeff = int_pow(BigInt(dim - 1), static_cast<unsigned>(i - 1));
  return GradedClass::make(dim, i + j, coeff, BigRational(0));
}

std::pair<GradedClass, GradedClass> chern_classes(int dim) {
  check_dim(dim);
  const GradedClass c1 =
      GradedClass::make(dim, 1, BigRational(2), BigRational(1));
  const GradedClass c2 = GradedClass::make(
      dim, 2, BigRational(2 * dim),
      BigRational(BigInt(-dim) * (dim - 1), BigInt(2)));
  return {c1, c2};
}

}  // namespace kahlercalc
