#pragma once

#include <optional>
#include <vector>

#include "kahlercalc/rational.hpp"

namespace kahlercalc {

struct KahlerClassData;

/// The four intersection numbers of the Kahler class W = alpha*L + beta*H
/// on X = P(O + O(n-1)), in closed form. With t = (n-1)*alpha + beta:
///
///   vol     = [W]^n          = (t^n - beta^n)/(n-1)
///   deg1    = c1 [W]^{n-1}   = ((2n-1) t^{n-1} - beta^{n-1})/(n-1)
///   chern11 = c1^2 [W]^{n-2} = ((2n-1)^2 t^{n-2} - beta^{n-2})/(n-1)
///   chern2  = c2 [W]^{n-2}   = (n/2)(3 t^{n-2} + beta^{n-2})
struct BatyrevInvariants {
  int n;
  BigRational alpha, beta, t;
  BigRational vol, deg1, chern11, chern2;

  KahlerClassData to_kahler_data() const;
};

/// Closed-form invariants; DomainError unless n >= 2 and alpha, beta > 0.
BatyrevInvariants invariants_closed_form(int n, const BigRational& alpha,
                                         const BigRational& beta);

/// The obstruction quantity
///   f = 2(n+1) vol (n chern11 - (n+2) chern2) - n^2 deg1^2.
/// f > 0 certifies that the class carries no cscK metric.
BigRational f_definition(const BatyrevInvariants& inv);

/// ((n-1)^2/n) * f as the five-term polynomial in t and beta:
///   (n^3-2n^2-4n+8) t^{2n-2} + (n^3+2n^2) beta^{2n-2}
///   + (4n^2-2n) t^{n-1} beta^{n-1} - n(n+1)^2 t^n beta^{n-2}
///   - (n+1)(5n^2-11n+8) t^{n-2} beta^n.
BigRational f_expanded(int n, const BigRational& alpha, const BigRational& beta);

/// The expanded form divided by t^{n-1} beta^{n-1}; shares the sign of f.
BigRational f_normalized(int n, const BigRational& alpha, const BigRational& beta);

struct ScanRow {
  int n;
  BigRational t;
  BigRational f;
  int sign;
};

struct ScanResult {
  std::vector<ScanRow> rows;
  std::optional<int> first_positive;
  /// Dimensions with f <= 0 after the first positive one, if any.
  std::vector<int> sign_reversals;
};

/// Evaluates sign(f(n, alpha, beta)) for every n in [2, n_max]. The scan
/// only certifies what it computes: it reports the first n with f > 0 and
/// any later sign reversal, and claims nothing beyond n_max.
ScanResult scan_min_n(const BigRational& alpha, const BigRational& beta, int n_max);

}  // namespace kahlercalc
