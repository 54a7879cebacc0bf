#include "kahlercalc/batyrev.hpp"

#include "kahlercalc/errors.hpp"
#include "kahlercalc/inequalities.hpp"

namespace kahlercalc {

KahlerClassData BatyrevInvariants::to_kahler_data() const {
  return KahlerClassData{n, vol, deg1, chern11, chern2};
}

BatyrevInvariants invariants_closed_form(int n, const BigRational& alpha,
                                         const BigRational& beta) {
  if (n < 2) throw DomainError("dimension must be at least 2");
  if (n > 1000000) throw DomainError("dimension out of supported range");
  if (alpha.sign() <= 0) throw DomainError("alpha must be positive");
  if (beta.sign() <= 0) throw DomainError("beta must be positive");

  BatyrevInvariants inv;
  inv.n = n;
  inv.alpha = alpha;
  inv.beta = beta;
  inv.t = BigRational(n - 1) * alpha + beta;

  const BigRational tn2 = inv.t.pow(n - 2), bn2 = beta.pow(n - 2);
  const BigRational tn1 = tn2 * inv.t, bn1 = bn2 * beta;
  const BigRational tn = tn1 * inv.t, bn = bn1 * beta;
  const BigRational inv_nm1(BigInt(1), BigInt(n - 1));
  const BigInt m = 2 * n - 1;

  inv.vol = (tn - bn) * inv_nm1;
  inv.deg1 = (BigRational(m) * tn1 - bn1) * inv_nm1;
  inv.chern11 = (BigRational(m * m) * tn2 - bn2) * inv_nm1;
  inv.chern2 = BigRational(BigInt(n), BigInt(2)) * (BigRational(3) * tn2 + bn2);
  return inv;
}

BigRational f_definition(const BatyrevInvariants& inv) {
  const int n = inv.n;
  return BigRational(2 * (n + 1)) * inv.vol *
             (BigRational(n) * inv.chern11 - BigRational(n + 2) * inv.chern2) -
         BigRational(BigInt(n) * n) * inv.deg1 * inv.deg1;
}

BigRational f_expanded(int n, const BigRational& alpha, const BigRational& beta) {
  if (n < 2) throw DomainError("dimension must be at least 2");
  if (n > 1000000) throw DomainError("dimension out of supported range");
  const BigRational t = BigRational(n - 1) * alpha + beta;
  const BigInt nn(n);

  const BigRational tn2 = t.pow(n - 2), bn2 = beta.pow(n - 2);
  const BigRational tn1 = tn2 * t, bn1 = bn2 * beta;
  const BigRational tn = tn1 * t, bn = bn1 * beta;

  return BigRational(nn * nn * nn - 2 * nn * nn - 4 * nn + 8) * tn1 * tn1 +
         BigRational(nn * nn * nn + 2 * nn * nn) * bn1 * bn1 +
         BigRational(4 * nn * nn - 2 * nn) * tn1 * bn1 -
         BigRational(nn * (nn + 1) * (nn + 1)) * tn * bn2 -
         BigRational((nn + 1) * (5 * nn * nn - 11 * nn + 8)) * tn2 * bn;
}

BigRational f_normalized(int n, const BigRational& alpha, const BigRational& beta) {
  const BigRational t = BigRational(n - 1) * alpha + beta;
  return f_expanded(n, alpha, beta) / (t.pow(n - 1) * beta.pow(n - 1));
}

ScanResult scan_min_n(const BigRational& alpha, const BigRational& beta, int n_max) {
  if (n_max < 2) throw DomainError("n_max must be at least 2");
  if (n_max > 1000000) throw DomainError("n_max out of supported range");
  ScanResult result;
  result.rows.reserve(static_cast<std::size_t>(n_max) - 1);
  for (int n = 2; n <= n_max; ++n) {
    // The expanded form carries the positive factor n/(n-1)^2 relative to
    // f itself, so its sign is the sign of f; report f exactly.
    const BigRational fe = f_expanded(n, alpha, beta);
    const BigRational f =
        fe * BigRational(BigInt(n), BigInt(n - 1) * BigInt(n - 1));
    ScanRow row{n, BigRational(n - 1) * alpha + beta, f, f.sign()};
    if (!result.first_positive && row.sign > 0) result.first_positive = n;
    if (result.first_positive && n > *result.first_positive && row.sign <= 0) {
      result.sign_reversals.push_back(n);
    }
    result.rows.push_back(std::move(row));
  }
  return result;
}

}  // namespace kahlercalc
