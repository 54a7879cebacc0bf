#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kahlercalc/rational.hpp"

namespace kahlercalc {

/// The cohomological data of a Kahler class: the four intersection numbers
/// every check in the suite consumes. No metric data exists anywhere; the
/// suite evaluates obstructions, never the Calabi functional itself.
struct KahlerClassData {
  int n = 2;                // complex dimension, >= 2
  BigRational vol;          // [w]^n, must be > 0
  BigRational deg1;         // c1 [w]^{n-1}
  BigRational chern11;      // c1^2 [w]^{n-2}
  BigRational chern2;       // c2 [w]^{n-2}

  /// DomainError when n < 2 or vol <= 0.
  void validate() const;
};

enum class Verdict { Strict, Equality, Violated };
enum class Relation { Geq, Leq };

std::string to_string(Verdict v);

/// Outcome of one inequality check. margin = lhs - rhs always; the verdict
/// reads the margin through the relation, so Strict means the inequality
/// holds strictly regardless of its direction.
struct InequalityReport {
  std::string name;
  Relation relation = Relation::Geq;
  BigRational lhs, rhs, margin;
  Verdict verdict = Verdict::Equality;
  std::string note;  // interpretation of the verdict, when the case is named
};

InequalityReport make_report(std::string name, Relation rel,
                             const BigRational& lhs, const BigRational& rhs);

/// Cohomological lower bound for the Calabi functional that needs only the
/// class and c1: (2n c1[w]^{n-1})^2 / [w]^n.
BigRational calabi_trivial_bound(const KahlerClassData& d);

/// Curvature-decomposition lower bound for the Calabi functional:
/// 8(n+1)(n c1^2[w]^{n-2} - (n+2) c2[w]^{n-2}). May be negative, in which
/// case it carries no information.
BigRational bochner_bound(const KahlerClassData& d);

/// The cscK obstruction: n^2 (c1[w]^{n-1})^2 >= 2(n+1) [w]^n
/// (n c1^2[w]^{n-2} - (n+2) c2[w]^{n-2}). Violated certifies that the class
/// contains no cscK metric; equality is the Bochner-Kahler boundary case.
InequalityReport csck_obstruction_check(const KahlerClassData& d);

/// sign(bochner_bound - calabi_trivial_bound); positive means the
/// curvature bound is strictly sharper.
int compare_lower_bounds(const KahlerClassData& d);

enum class YauMode { C1Negative, C1Zero };

/// Chern number inequality. In C1Negative mode the data is read with
/// [w] = -c1, so vol = (-c1)^n and chern2 = c2 (-c1)^{n-2}, and the check is
/// 2(n+1) chern2 >= n vol (equality: ball quotient). In C1Zero mode the
/// check is chern2 >= 0 (equality: torus quotient).
InequalityReport yau_check(const KahlerClassData& d, YauMode mode);

/// Upper bound for c1^2[w]^{n-2} - c2[w]^{n-2} on classes carrying a cscK
/// metric: (n+2)/(8n^2(n+1)) s^2 [w]^n, with the constant scalar curvature
/// substituted cohomologically as s = 2n deg1 / vol unless an explicit
/// `scalar` is supplied. Equality: constant holomorphic sectional curvature.
InequalityReport tian_check_csck(const KahlerClassData& d,
                                 const std::optional<BigRational>& scalar = {});

/// Exact difference of the two cscK upper bounds,
/// (2/n) c2[w]^{n-2} - 2/(8n^2(n+1)) s^2 [w]^n, with the same cscK
/// substitution for s. Its sign is reported, not asserted: it can go
/// either way.
BigRational bound_difference(const KahlerClassData& d,
                             const std::optional<BigRational>& scalar = {});

/// Parses Kahler-class records from text: a JSON array of objects, or one
/// JSON object per line. Fields: n (integer), vol, c1_w_nm1, c1sq_w_nm2,
/// c2_w_nm2 (each a "p/q" rational string). ParseError names the record and
/// field; DomainError surfaces invariant violations such as vol <= 0.
std::vector<KahlerClassData> parse_kahler_records(const std::string& text);

}  // namespace kahlercalc
