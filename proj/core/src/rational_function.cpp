#include "kahlercalc/rational_function.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "kahlercalc/errors.hpp"

namespace kahlercalc {

RationalFunctionN::RationalFunctionN(const BigRational& c) : num_(c), den_(1) {
  simplify();
}

RationalFunctionN::RationalFunctionN(const PolyN& p) : num_(p), den_(1) {
  simplify();
}

RationalFunctionN::RationalFunctionN(const PolyN& num, const PolyN& den)
    : num_(num), den_(den) {
  if (den_.is_zero()) throw DomainError("division by zero polynomial");
  simplify();
}

void RationalFunctionN::simplify() {
  if (num_.is_zero()) {
    den_ = PolyN(1);
    return;
  }
  const PolyN g = PolyN::gcd(num_, den_);
  if (g.degree() > 0) {
    PolyN q, r;
    PolyN::divmod(num_, g, q, r);
    num_ = q;
    PolyN::divmod(den_, g, q, r);
    den_ = q;
  }
  // Clear coefficient denominators, then divide out the joint integer
  // content and give the denominator a positive leading coefficient.
  BigInt lcm_den(1);
  for (const PolyN* p : {&num_, &den_}) {
    for (int k = 0; k <= p->degree(); ++k) {
      const BigInt d = p->coeff(k).den();
      lcm_den = boost::multiprecision::lcm(lcm_den, d);
    }
  }
  BigInt content(0);
  auto scaled = [&](const PolyN& p) {
    PolyN out;
    for (int k = p.degree(); k >= 0; --k) {
      const BigRational c = p.coeff(k) * BigRational(lcm_den);
      content = boost::multiprecision::gcd(content, boost::multiprecision::abs(c.num()));
      out += PolyN{{c}} * PolyN::n().pow(static_cast<unsigned>(k));
    }
    return out;
  };
  num_ = scaled(num_);
  den_ = scaled(den_);
  if (content > 1) {
    const BigRational inv_content(BigInt(1), content);
    num_ = inv_content * num_;
    den_ = inv_content * den_;
  }
  if (den_.leading().sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RationalFunctionN RationalFunctionN::operator-() const {
  RationalFunctionN r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunctionN operator+(const RationalFunctionN& a, const RationalFunctionN& b) {
  return RationalFunctionN(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunctionN operator-(const RationalFunctionN& a, const RationalFunctionN& b) {
  return a + (-b);
}

RationalFunctionN operator*(const RationalFunctionN& a, const RationalFunctionN& b) {
  return RationalFunctionN(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunctionN operator/(const RationalFunctionN& a, const RationalFunctionN& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  return RationalFunctionN(a.num_ * b.den_, a.den_ * b.num_);
}

BigRational RationalFunctionN::eval_at(const BigRational& n0) const {
  const BigRational d = den_.eval(n0);
  if (d.is_zero()) throw DomainError("pole at n = " + n0.str());
  return num_.eval(n0) / d;
}

std::string RationalFunctionN::str() const {
  if (den_ == PolyN(1)) return num_.str();
  const bool wrap_num = num_.degree() > 0;
  std::string out = wrap_num ? "(" + num_.str() + ")" : num_.str();
  out += den_.degree() > 0 ? "/(" + den_.str() + ")" : "/" + den_.str();
  return out;
}

}  // namespace kahlercalc
