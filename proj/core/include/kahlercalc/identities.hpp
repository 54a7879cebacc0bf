#pragma once

#include <map>
#include <string>
#include <vector>

#include "kahlercalc/rational_function.hpp"
#include "kahlercalc/tensor.hpp"

namespace kahlercalc {

/// The scalar curvature-norm symbols that pointwise densities are written in.
enum class ScalarSymbol { S2, Ric2, TRic2, Riem2, SPart2, PPart2, BPart2 };

std::string to_string(ScalarSymbol s);

/// Linear combination of scalar symbols with rational-function-of-n
/// coefficients; zero entries are never stored.
using SymbolCombo = std::map<ScalarSymbol, RationalFunctionN>;

SymbolCombo combo_add(const SymbolCombo& a, const SymbolCombo& b);
SymbolCombo combo_scale(const SymbolCombo& a, const RationalFunctionN& c);
RationalFunctionN combo_coeff(const SymbolCombo& a, ScalarSymbol s);

/// A pointwise identity: `lhs_label` (a cohomological density) equals the
/// stored combination times the volume form.
struct PointwiseIdentity {
  std::string name;
  std::string lhs_label;
  SymbolCombo combo;
};

/// target -> replacement combination; rule sets must be acyclic.
struct RewriteRule {
  ScalarSymbol target;
  SymbolCombo replacement;
};

/// Fixed-point substitution of the rules into the identity, with exact
/// coefficient arithmetic. DomainError "cyclic rules" when the rule
/// dependency graph has a cycle.
PointwiseIdentity rewrite(const PointwiseIdentity& id,
                          const std::vector<RewriteRule>& rules);

/// The two density axioms for Ric^2 ^ w^{n-2} and c2 ^ w^{n-2}:
///   Ric^2 density : [s^2/4 -   |Ric|^2          ] / ( n(n-1))
///   c2    density : [s^2/4 - 2 |Ric|^2 + |R|^2  ] / (2n(n-1))
/// Taken as axioms; their Chern-Weil derivation is out of scope.
std::pair<PointwiseIdentity, PointwiseIdentity> apte_axioms();

/// Substitution rules extracted from the tensor engine's verified outputs:
/// |Ric|^2, |S|^2 and |P|^2 from the norm identities, and
/// |R|^2 -> |S|^2 + |P|^2 + |B|^2 legitimated by the cross-term checks.
/// Holding a value of this type is proof the verification ran and passed.
struct NormRules {
  std::vector<RewriteRule> rules;
  std::vector<IdentityCheck> norm_checks;
  std::vector<IdentityCheck> cross_checks;
};

/// Runs the tensor verification and converts its outputs into rules.
/// VerificationError when any contraction check fails.
NormRules rules_from_tensor_verification();

/// Same conversion from externally supplied checks (exposed so the refusal
/// path is testable). VerificationError when any check has pass == false.
NormRules rules_from_checks(std::vector<IdentityCheck> norm_checks,
                            std::vector<IdentityCheck> cross_checks);

/// c1^2 ^ w^{n-2} density: s^2/(4n^2) - |tRic|^2/(n(n-1)).
PointwiseIdentity derive_c1sq_density(const NormRules& rules);

/// c2 ^ w^{n-2} density:
/// s^2/(8n(n+1)) - |tRic|^2/((n+2)(n-1)) + |B|^2/(2n(n-1)).
PointwiseIdentity derive_c2_density(const NormRules& rules);

/// (n c1^2 - (n+2) c2) ^ w^{n-2} density: s^2/(8(n+1)) - (n+2)/(2n(n-1)) |B|^2,
/// with the |tRic|^2 coefficient cancelling exactly.
PointwiseIdentity derive_combination(const NormRules& rules);

/// (c1^2 - c2) ^ w^{n-2} density:
/// (n+2)/(8n^2(n+1)) s^2 - 2/(n(n+2)(n-1)) |tRic|^2 - 1/(2n(n-1)) |B|^2.
PointwiseIdentity derive_csck_difference_density(const NormRules& rules);

/// Difference of the two cscK upper bounds as a density:
/// -2/(n(n+2)(n-1)) |tRic|^2 + 1/(n^2(n-1)) |B|^2 (no s^2 term).
PointwiseIdentity derive_bound_difference_density(const NormRules& rules);

/// The factorial-normalized displays (densities against w^n/n! with the
/// 1/(n-2)! prefactor) and the audit of the |tRic|^2 coefficient in the c2
/// display: corrected -2n/(n+2) versus the erroneous -2(n-1)/n that
/// circulates in the literature; their difference is (2n-4)/(n(n+2)),
/// which vanishes only at n = 2.
struct CoefficientAudit {
  SymbolCombo c1sq_display;  // inside [...] of the c1^2 display
  SymbolCombo c2_display;    // inside [...] of the c2 display (1/2 factored out)
  RationalFunctionN corrected;
  RationalFunctionN erroneous;
  RationalFunctionN difference;
  std::string conventions_note;
};

CoefficientAudit besse_coefficient_audit(const NormRules& rules);

/// The obstruction inequality rewritten, under the cscK substitution
/// s vol = 2n deg1, as an upper bound for (c1^2 - c2) ^ w^{n-2}:
///   1/(8n(n+1)) s^2 [w]^n + (2/n) c2 [w]^{n-2}.
struct ObstructionUpperBound {
  RationalFunctionN s2_vol_coeff;  // 1/(8n(n+1))
  RationalFunctionN c2_coeff;      // 2/n
};

ObstructionUpperBound derive_obstruction_upper_bound();

}  // namespace kahlercalc
