#include "kahlercalc/polynomial.hpp"

#include <algorithm>

#include "kahlercalc/errors.hpp"

namespace kahlercalc {

PolyN::PolyN(const BigRational& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

PolyN::PolyN(std::initializer_list<BigRational> coeffs_low_to_high)
    : coeffs_(coeffs_low_to_high) {
  trim();
}

PolyN PolyN::n() { return PolyN{{BigRational(0), BigRational(1)}}; }

void PolyN::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

BigRational PolyN::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return BigRational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

const BigRational& PolyN::leading() const {
  if (is_zero()) throw DomainError("leading coefficient of zero polynomial");
  return coeffs_.back();
}

PolyN PolyN::operator-() const {
  PolyN r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

PolyN operator+(const PolyN& a, const PolyN& b) {
  PolyN r;
  r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
    r.coeffs_[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  }
  r.trim();
  return r;
}

PolyN operator-(const PolyN& a, const PolyN& b) { return a + (-b); }

PolyN operator*(const PolyN& a, const PolyN& b) {
  if (a.is_zero() || b.is_zero()) return PolyN();
  PolyN r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, BigRational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  r.trim();
  return r;
}

PolyN PolyN::pow(unsigned e) const {
  PolyN result(1);
  PolyN base = *this;
  while (e != 0) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1u;
  }
  return result;
}

void PolyN::divmod(const PolyN& a, const PolyN& b, PolyN& quot, PolyN& rem) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  quot = PolyN();
  rem = a;
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const int shift = rem.degree() - b.degree();
    const BigRational factor = rem.leading() / b.leading();
    PolyN term;
    term.coeffs_.assign(static_cast<std::size_t>(shift) + 1, BigRational(0));
    term.coeffs_.back() = factor;
    quot += term;
    rem -= term * b;
  }
}

PolyN PolyN::gcd(PolyN a, PolyN b) {
  while (!b.is_zero()) {
    PolyN q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  // Normalize monic.
  const BigRational lead = a.leading();
  for (auto& c : a.coeffs_) c /= lead;
  return a;
}

BigRational PolyN::eval(const BigRational& x) const {
  BigRational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

std::string PolyN::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const BigRational c = coeff(k);
    if (c.is_zero()) continue;
    const bool first = out.empty();
    const BigRational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    const bool unit = (mag == BigRational(1));
    if (k == 0) {
      out += mag.str();
    } else {
      if (!unit) out += mag.str() + "*";
      out += (k == 1) ? "n" : "n^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace kahlercalc
