#include "kahlercalc/inequalities.hpp"

#include "kahlercalc/errors.hpp"

namespace kahlercalc {

void KahlerClassData::validate() const {
  if (n < 2) throw DomainError("dimension must be at least 2");
  if (n > 1000000) throw DomainError("dimension out of supported range");
  if (vol.sign() <= 0) throw DomainError("volume [w]^n must be positive");
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Strict: return "strict";
    case Verdict::Equality: return "equality";
    case Verdict::Violated: return "violated";
  }
  return "?";
}

InequalityReport make_report(std::string name, Relation rel,
                             const BigRational& lhs, const BigRational& rhs) {
  InequalityReport r;
  r.name = std::move(name);
  r.relation = rel;
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = lhs - rhs;
  const int s = r.margin.sign();
  if (s == 0) {
    r.verdict = Verdict::Equality;
  } else if ((rel == Relation::Geq && s > 0) || (rel == Relation::Leq && s < 0)) {
    r.verdict = Verdict::Strict;
  } else {
    r.verdict = Verdict::Violated;
  }
  return r;
}

BigRational calabi_trivial_bound(const KahlerClassData& d) {
  d.validate();
  const BigRational num = BigRational(2 * d.n) * d.deg1;
  return num * num / d.vol;
}

BigRational bochner_bound(const KahlerClassData& d) {
  return BigRational(8 * (d.n + 1)) *
         (BigRational(d.n) * d.chern11 - BigRational(d.n + 2) * d.chern2);
}

InequalityReport csck_obstruction_check(const KahlerClassData& d) {
  d.validate();
  const BigRational lhs = BigRational(BigInt(d.n) * d.n) * d.deg1 * d.deg1;
  const BigRational rhs =
      BigRational(2 * (d.n + 1)) * d.vol *
      (BigRational(d.n) * d.chern11 - BigRational(d.n + 2) * d.chern2);
  InequalityReport r = make_report("csck-obstruction", Relation::Geq, lhs, rhs);
  switch (r.verdict) {
    case Verdict::Violated:
      r.note = "no cscK metric in this class";
      break;
    case Verdict::Equality:
      r.note = "boundary case: a cscK representative must be Bochner-Kahler";
      break;
    case Verdict::Strict:
      r.note = "obstruction not triggered";
      break;
  }
  return r;
}

int compare_lower_bounds(const KahlerClassData& d) {
  return (bochner_bound(d) - calabi_trivial_bound(d)).sign();
}

InequalityReport yau_check(const KahlerClassData& d, YauMode mode) {
  InequalityReport r;
  if (mode == YauMode::C1Negative) {
    d.validate();
    r = make_report("chern-number-negative-c1", Relation::Geq,
                    BigRational(2 * (d.n + 1)) * d.chern2,
                    BigRational(d.n) * d.vol);
    if (r.verdict == Verdict::Equality) r.note = "covered by the unit ball";
  } else {
    r = make_report("chern-number-zero-c1", Relation::Geq, d.chern2,
                    BigRational(0));
    if (r.verdict == Verdict::Equality) r.note = "covered by a complex torus";
  }
  return r;
}

namespace {

// s^2 [w]^n with the cscK substitution s vol = 2n deg1, or an explicit s.
BigRational scalar_square_volume(const KahlerClassData& d,
                                 const std::optional<BigRational>& scalar) {
  if (scalar) return *scalar * *scalar * d.vol;
  const BigRational s_vol = BigRational(2 * d.n) * d.deg1;  // = s * vol
  return s_vol * s_vol / d.vol;
}

}  // namespace

InequalityReport tian_check_csck(const KahlerClassData& d,
                                 const std::optional<BigRational>& scalar) {
  d.validate();
  const int n = d.n;
  const BigRational coeff(BigInt(n + 2),
                          BigInt(8) * BigInt(n) * n * (n + 1));
  InequalityReport r =
      make_report("chern-difference-upper-bound", Relation::Leq,
                  d.chern11 - d.chern2, coeff * scalar_square_volume(d, scalar));
  if (r.verdict == Verdict::Equality) {
    r.note = "constant holomorphic sectional curvature";
  }
  return r;
}

BigRational bound_difference(const KahlerClassData& d,
                             const std::optional<BigRational>& scalar) {
  d.validate();
  const int n = d.n;
  const BigRational second(BigInt(2), BigInt(8) * BigInt(n) * n * (n + 1));
  return BigRational(BigInt(2), BigInt(n)) * d.chern2 -
         second * scalar_square_volume(d, scalar);
}

}  // namespace kahlercalc
