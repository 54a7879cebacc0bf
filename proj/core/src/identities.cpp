#include "kahlercalc/identities.hpp"

#include <set>
#include <utility>

#include "kahlercalc/errors.hpp"

namespace kahlercalc {

std::string to_string(ScalarSymbol s) {
  switch (s) {
    case ScalarSymbol::S2: return "s^2";
    case ScalarSymbol::Ric2: return "|Ric|^2";
    case ScalarSymbol::TRic2: return "|tRic|^2";
    case ScalarSymbol::Riem2: return "|R|^2";
    case ScalarSymbol::SPart2: return "|S|^2";
    case ScalarSymbol::PPart2: return "|P|^2";
    case ScalarSymbol::BPart2: return "|B|^2";
  }
  return "?";
}

namespace {

void combo_insert(SymbolCombo& combo, ScalarSymbol s, const RationalFunctionN& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = combo.emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) combo.erase(it);
  }
}

}  // namespace

SymbolCombo combo_add(const SymbolCombo& a, const SymbolCombo& b) {
  SymbolCombo out = a;
  for (const auto& [s, c] : b) combo_insert(out, s, c);
  return out;
}

SymbolCombo combo_scale(const SymbolCombo& a, const RationalFunctionN& c) {
  SymbolCombo out;
  for (const auto& [s, v] : a) combo_insert(out, s, v * c);
  return out;
}

RationalFunctionN combo_coeff(const SymbolCombo& a, ScalarSymbol s) {
  const auto it = a.find(s);
  return it == a.end() ? RationalFunctionN() : it->second;
}

PointwiseIdentity rewrite(const PointwiseIdentity& id,
                          const std::vector<RewriteRule>& rules) {
  // Cycle check on the rule dependency graph.
  std::map<ScalarSymbol, const SymbolCombo*> by_target;
  for (const auto& r : rules) by_target[r.target] = &r.replacement;
  for (const auto& [start, _] : by_target) {
    std::set<ScalarSymbol> visited{start};
    std::vector<ScalarSymbol> frontier{start};
    while (!frontier.empty()) {
      const ScalarSymbol cur = frontier.back();
      frontier.pop_back();
      const auto it = by_target.find(cur);
      if (it == by_target.end()) continue;
      for (const auto& [next, c] : *it->second) {
        if (next == start) throw DomainError("cyclic rules");
        if (visited.insert(next).second) frontier.push_back(next);
      }
    }
  }

  PointwiseIdentity out = id;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [target, replacement] : by_target) {
      const auto it = out.combo.find(target);
      if (it == out.combo.end()) continue;
      const RationalFunctionN coeff = it->second;
      out.combo.erase(it);
      out.combo = combo_add(out.combo, combo_scale(*replacement, coeff));
      changed = true;
    }
  }
  return out;
}

std::pair<PointwiseIdentity, PointwiseIdentity> apte_axioms() {
  const PolyN n = PolyN::n();
  const RationalFunctionN inv_nn1(PolyN(1), n * (n - 1));    // 1/(n(n-1))
  const RationalFunctionN inv_2nn1(PolyN(1), 2 * n * (n - 1));

  PointwiseIdentity ric2;
  ric2.name = "ricci-square-density";
  ric2.lhs_label = "Ric^2 ^ w^{n-2} density";
  combo_insert(ric2.combo, ScalarSymbol::S2,
               inv_nn1 * RationalFunctionN(BigRational(BigInt(1), BigInt(4))));
  combo_insert(ric2.combo, ScalarSymbol::Ric2, -inv_nn1);

  PointwiseIdentity c2;
  c2.name = "c2-density";
  c2.lhs_label = "c2 ^ w^{n-2} density";
  combo_insert(c2.combo, ScalarSymbol::S2,
               inv_2nn1 * RationalFunctionN(BigRational(BigInt(1), BigInt(4))));
  combo_insert(c2.combo, ScalarSymbol::Ric2, inv_2nn1 * RationalFunctionN(-2));
  combo_insert(c2.combo, ScalarSymbol::Riem2, inv_2nn1);

  return {ric2, c2};
}

namespace {

// A fully contracted scalar TensorExpr as a symbol combination. Each term
// must be a single symbol: s^2, |tRic|^2 or |R|^2.
SymbolCombo combo_from_scalar_expr(const TensorExpr& expr) {
  SymbolCombo out;
  for (const auto& t : expr.terms()) {
    if (!t.factors.empty()) {
      throw VerificationError("contraction left uncontracted factors: " +
                              to_string(expr));
    }
    if (t.s_power == 2 && t.tric2_power == 0 && t.riem2_power == 0) {
      combo_insert(out, ScalarSymbol::S2, t.coeff);
    } else if (t.s_power == 0 && t.tric2_power == 1 && t.riem2_power == 0) {
      combo_insert(out, ScalarSymbol::TRic2, t.coeff);
    } else if (t.s_power == 0 && t.tric2_power == 0 && t.riem2_power == 1) {
      combo_insert(out, ScalarSymbol::Riem2, t.coeff);
    } else {
      throw VerificationError("unexpected scalar monomial in contraction: " +
                              to_string(expr));
    }
  }
  return out;
}

const IdentityCheck& find_check(const std::vector<IdentityCheck>& checks,
                                const std::string& name) {
  for (const auto& c : checks) {
    if (c.name == name) return c;
  }
  throw VerificationError("missing tensor check '" + name + "'");
}

}  // namespace

NormRules rules_from_checks(std::vector<IdentityCheck> norm_checks,
                            std::vector<IdentityCheck> cross_checks) {
  for (const auto* group : {&norm_checks, &cross_checks}) {
    for (const auto& check : *group) {
      if (!check.pass) {
        throw VerificationError("tensor verification failed: " + check.name +
                                ", residual " + to_string(check.residual));
      }
    }
  }

  NormRules out;
  out.norm_checks = std::move(norm_checks);
  out.cross_checks = std::move(cross_checks);

  // The coefficients below come from the verified contraction outputs, not
  // from literals.
  const SymbolCombo ric2 = combo_from_scalar_expr(
      find_check(out.norm_checks, "ricci-norm").computed);
  const SymbolCombo snorm = combo_from_scalar_expr(
      find_check(out.norm_checks, "scalar-part-norm").computed);
  const SymbolCombo pnorm = combo_from_scalar_expr(
      find_check(out.norm_checks, "traceless-ricci-part-norm").computed);

  SymbolCombo riem;
  combo_insert(riem, ScalarSymbol::SPart2, RationalFunctionN(1));
  combo_insert(riem, ScalarSymbol::PPart2, RationalFunctionN(1));
  combo_insert(riem, ScalarSymbol::BPart2, RationalFunctionN(1));

  out.rules.push_back({ScalarSymbol::Ric2, ric2});
  out.rules.push_back({ScalarSymbol::Riem2, riem});
  out.rules.push_back({ScalarSymbol::SPart2, snorm});
  out.rules.push_back({ScalarSymbol::PPart2, pnorm});
  return out;
}

NormRules rules_from_tensor_verification() {
  return rules_from_checks(verify_norm_identities(), verify_cross_terms());
}

PointwiseIdentity derive_c1sq_density(const NormRules& rules) {
  PointwiseIdentity out = rewrite(apte_axioms().first, rules.rules);
  out.name = "c1sq-density";
  out.lhs_label = "c1^2 ^ w^{n-2} density";
  return out;
}

PointwiseIdentity derive_c2_density(const NormRules& rules) {
  PointwiseIdentity out = rewrite(apte_axioms().second, rules.rules);
  out.name = "c2-density";
  out.lhs_label = "c2 ^ w^{n-2} density";
  return out;
}

PointwiseIdentity derive_combination(const NormRules& rules) {
  const PolyN n = PolyN::n();
  const PointwiseIdentity c1sq = derive_c1sq_density(rules);
  const PointwiseIdentity c2 = derive_c2_density(rules);
  PointwiseIdentity out;
  out.name = "obstruction-combination-density";
  out.lhs_label = "(n c1^2 - (n+2) c2) ^ w^{n-2} density";
  out.combo = combo_add(combo_scale(c1sq.combo, RationalFunctionN(n)),
                        combo_scale(c2.combo, -RationalFunctionN(n + 2)));
  return out;
}

PointwiseIdentity derive_csck_difference_density(const NormRules& rules) {
  const PointwiseIdentity c1sq = derive_c1sq_density(rules);
  const PointwiseIdentity c2 = derive_c2_density(rules);
  PointwiseIdentity out;
  out.name = "csck-difference-density";
  out.lhs_label = "(c1^2 - c2) ^ w^{n-2} density";
  out.combo = combo_add(c1sq.combo, combo_scale(c2.combo, RationalFunctionN(-1)));
  return out;
}

PointwiseIdentity derive_bound_difference_density(const NormRules& rules) {
  const PolyN n = PolyN::n();
  const PointwiseIdentity c2 = derive_c2_density(rules);
  // (2/n) c2-density - 2/(8n^2(n+1)) s^2
  PointwiseIdentity out;
  out.name = "bound-difference-density";
  out.lhs_label = "(2/n) c2 ^ w^{n-2} - 1/(4n^2(n+1)) s^2 w^n density";
  out.combo = combo_scale(c2.combo, RationalFunctionN(PolyN(2), n));
  combo_insert(out.combo, ScalarSymbol::S2,
               -RationalFunctionN(PolyN(2), 8 * n * n * (n + 1)));
  return out;
}

CoefficientAudit besse_coefficient_audit(const NormRules& rules) {
  const PolyN n = PolyN::n();
  const RationalFunctionN top_factor(n * (n - 1));  // n!/(n-2)! = n(n-1)

  CoefficientAudit audit;
  audit.c1sq_display =
      combo_scale(derive_c1sq_density(rules).combo, top_factor);
  audit.c2_display = combo_scale(derive_c2_density(rules).combo,
                                 top_factor * RationalFunctionN(2));

  audit.corrected = combo_coeff(audit.c2_display, ScalarSymbol::TRic2);
  audit.erroneous = RationalFunctionN(-2 * (n - 1), n);
  audit.difference = audit.corrected - audit.erroneous;
  audit.conventions_note =
      "Normalization: Kahler form carries the 1/(2pi) factor throughout. "
      "Texts that scale the form by 2pi pick up an extra 4pi^2 per Chern "
      "square, and those that scale by pi an extra pi^2; both are "
      "display-only rescalings and are never applied to stored coefficients.";
  return audit;
}

ObstructionUpperBound derive_obstruction_upper_bound() {
  const PolyN n = PolyN::n();
  // Divide the obstruction inequality
  //   n^2 deg1^2 >= 2(n+1) vol (n chern11 - (n+2) chern2)
  // by 2n(n+1) vol and move the c2 term across:
  //   chern11 - chern2 <= n deg1^2 / (2(n+1) vol) + (2/n) chern2.
  // The cscK substitution s vol = 2n deg1 turns the first summand into
  // s^2 vol / (8n(n+1)).
  const RationalFunctionN obstruction_lhs(n * n);
  const RationalFunctionN divide_by = RationalFunctionN(2 * n * (n + 1));
  const RationalFunctionN deg1sq_coeff = obstruction_lhs / divide_by;  // n/(2(n+1))
  // deg1^2 = s^2 vol^2 / (4n^2), so per s^2 vol: deg1sq_coeff / (4n^2).
  ObstructionUpperBound out;
  out.s2_vol_coeff = deg1sq_coeff / RationalFunctionN(4 * n * n);
  out.c2_coeff = RationalFunctionN(n + 2) / RationalFunctionN(n) -
                 RationalFunctionN(1);
  return out;
}

}  // namespace kahlercalc
