#include "kahlercalc/report.hpp"

#include <json.hpp>

#include <sstream>

#include "kahlercalc/class_expr.hpp"
#include "kahlercalc/errors.hpp"
#include "kahlercalc/intersection_ring.hpp"

namespace kahlercalc {

namespace {

using nlohmann::json;

// "p/q" plus a clearly approximate decimal when the value is not integral.
std::string pretty(const BigRational& q) {
  if (q.is_integer()) return q.str();
  return q.str() + " (~ " + q.decimal() + ")";
}

std::string relation_str(Relation r) { return r == Relation::Geq ? ">=" : "<="; }

std::string report_line(const InequalityReport& r) {
  std::string out = r.name + ": " + to_string(r.verdict) + "  [lhs " +
                    r.lhs.str() + " " + relation_str(r.relation) + " rhs " +
                    r.rhs.str() + ", margin " + r.margin.str() + "]";
  if (!r.note.empty()) out += "\n      -> " + r.note;
  return out;
}

json report_json(const InequalityReport& r) {
  json j;
  j["name"] = r.name;
  j["relation"] = relation_str(r.relation);
  j["lhs"] = r.lhs.str();
  j["rhs"] = r.rhs.str();
  j["margin"] = r.margin.str();
  j["verdict"] = to_string(r.verdict);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

std::string sign_str(int s) { return s > 0 ? "+1" : s < 0 ? "-1" : "0"; }

}  // namespace

BatyrevRun make_batyrev_run(int n, const BigRational& alpha, const BigRational& beta) {
  BatyrevRun run;
  run.inv = invariants_closed_form(n, alpha, beta);
  run.f_def = f_definition(run.inv);
  run.f_exp = f_expanded(n, alpha, beta);
  run.f_norm = f_normalized(n, alpha, beta);
  const BigRational scale(BigInt(n), BigInt(n - 1) * BigInt(n - 1));
  run.forms_agree =
      run.f_def == scale * run.f_exp &&
      run.f_def == run.f_norm * scale * run.inv.t.pow(n - 1) * beta.pow(n - 1);
  const KahlerClassData d = run.inv.to_kahler_data();
  run.trivial_bound = calabi_trivial_bound(d);
  run.bochner = bochner_bound(d);
  run.compare_sign = compare_lower_bounds(d);
  run.obstruction = csck_obstruction_check(d);
  run.tian = tian_check_csck(d);
  run.bound_diff = bound_difference(d);
  return run;
}

RecordChecks check_record(const KahlerClassData& d,
                          const std::optional<BigRational>& scalar,
                          const std::optional<YauMode>& yau_mode) {
  RecordChecks out;
  out.data = d;
  out.trivial_bound = calabi_trivial_bound(d);
  out.bochner = bochner_bound(d);
  out.compare_sign = compare_lower_bounds(d);
  out.obstruction = csck_obstruction_check(d);
  out.tian = tian_check_csck(d, scalar);
  out.bound_diff = bound_difference(d, scalar);
  if (yau_mode) out.yau = yau_check(d, *yau_mode);
  return out;
}

std::string batyrev_human(const BatyrevRun& run) {
  const BatyrevInvariants& inv = run.inv;
  std::ostringstream os;
  os << "Kahler class W = alpha*L + beta*H on X = P(O + O(n-1)) over P^{n-1}\n";
  os << "  n = " << inv.n << ", alpha = " << inv.alpha.str() << ", beta = "
     << inv.beta.str() << ", t = (n-1)*alpha + beta = " << inv.t.str() << "\n\n";
  os << "Intersection numbers\n";
  os << "  [W]^n          = " << pretty(inv.vol) << "\n";
  os << "  c1 [W]^{n-1}   = " << pretty(inv.deg1) << "\n";
  os << "  c1^2 [W]^{n-2} = " << pretty(inv.chern11) << "\n";
  os << "  c2 [W]^{n-2}   = " << pretty(inv.chern2) << "\n\n";
  os << "Obstruction quantity f\n";
  os << "  definition form               = " << pretty(run.f_def) << "\n";
  os << "  expanded form ((n-1)^2/n * f) = " << pretty(run.f_exp) << "\n";
  os << "  normalized form               = " << pretty(run.f_norm) << "\n";
  os << "  three-form agreement: " << (run.forms_agree ? "exact" : "FAILED")
     << "\n\n";
  os << "Inequality checks\n";
  os << "  calabi-trivial-lower-bound = " << pretty(run.trivial_bound) << "\n";
  os << "  bochner-lower-bound        = " << pretty(run.bochner) << "\n";
  os << "  sharper bound: "
     << (run.compare_sign > 0 ? "bochner" : run.compare_sign < 0 ? "trivial" : "tie")
     << " (difference sign " << sign_str(run.compare_sign) << ")\n";
  os << "  " << report_line(run.obstruction) << "\n";
  os << "  " << report_line(run.tian) << "\n";
  os << "  bound difference = " << pretty(run.bound_diff) << " (sign "
     << sign_str(run.bound_diff.sign()) << ")\n";
  return os.str();
}

std::string batyrev_json(const BatyrevRun& run) {
  json j;
  j["subcommand"] = "batyrev";
  j["n"] = run.inv.n;
  j["alpha"] = run.inv.alpha.str();
  j["beta"] = run.inv.beta.str();
  j["t"] = run.inv.t.str();
  j["invariants"] = {{"vol", run.inv.vol.str()},
                     {"c1_w_nm1", run.inv.deg1.str()},
                     {"c1sq_w_nm2", run.inv.chern11.str()},
                     {"c2_w_nm2", run.inv.chern2.str()}};
  j["f"] = {{"definition", run.f_def.str()},
            {"expanded", run.f_exp.str()},
            {"normalized", run.f_norm.str()},
            {"agreement", run.forms_agree}};
  j["checks"] = {{"calabi_trivial_lower_bound", run.trivial_bound.str()},
                 {"bochner_lower_bound", run.bochner.str()},
                 {"sharper_bound_sign", run.compare_sign},
                 {"csck_obstruction", report_json(run.obstruction)},
                 {"chern_difference_upper_bound", report_json(run.tian)},
                 {"bound_difference", run.bound_diff.str()},
                 {"bound_difference_sign", run.bound_diff.sign()}};
  return j.dump(2) + "\n";
}

std::string scan_human(const BigRational& alpha, const BigRational& beta,
                       const ScanResult& result) {
  std::ostringstream os;
  os << "scan of f(n, alpha, beta) for alpha = " << alpha.str() << ", beta = "
     << beta.str() << ", n in [2, "
     << (result.rows.empty() ? 1 : result.rows.back().n) << "]\n";
  for (const auto& row : result.rows) {
    os << "  n=" << row.n << " sign=" << (row.sign > 0 ? "+" : row.sign < 0 ? "-" : "0")
       << " t=" << row.t.str() << " f=" << row.f.str() << "\n";
  }
  if (result.first_positive) {
    os << "first n with f > 0: " << *result.first_positive;
    if (result.sign_reversals.empty()) {
      os << "; no sign reversal up to " << result.rows.back().n << "\n";
    } else {
      os << "; SIGN REVERSALS at n =";
      for (int n : result.sign_reversals) os << " " << n;
      os << "\n";
    }
  } else {
    os << "none up to " << (result.rows.empty() ? 1 : result.rows.back().n)
       << ": f never positive in range\n";
  }
  return os.str();
}

std::string scan_json(const BigRational& alpha, const BigRational& beta,
                      const ScanResult& result) {
  json j;
  j["subcommand"] = "scan";
  j["alpha"] = alpha.str();
  j["beta"] = beta.str();
  json rows = json::array();
  for (const auto& row : result.rows) {
    rows.push_back({{"n", row.n},
                    {"t", row.t.str()},
                    {"f", row.f.str()},
                    {"sign", row.sign}});
  }
  j["rows"] = rows;
  if (result.first_positive) {
    j["first_positive"] = *result.first_positive;
  } else {
    j["first_positive"] = nullptr;
  }
  j["sign_reversals"] = result.sign_reversals;
  return j.dump(2) + "\n";
}

std::string scan_csv(const ScanResult& result) {
  std::ostringstream os;
  os << "n,t,f_num,f_den,sign\n";
  for (const auto& row : result.rows) {
    os << row.n << "," << row.t.str() << "," << row.f.num().str() << ","
       << row.f.den().str() << "," << row.sign << "\n";
  }
  return os.str();
}

namespace {

json record_json(const RecordChecks& rc, std::size_t index) {
  json j;
  j["record"] = index;
  j["n"] = rc.data.n;
  j["vol"] = rc.data.vol.str();
  j["c1_w_nm1"] = rc.data.deg1.str();
  j["c1sq_w_nm2"] = rc.data.chern11.str();
  j["c2_w_nm2"] = rc.data.chern2.str();
  j["calabi_trivial_lower_bound"] = rc.trivial_bound.str();
  j["bochner_lower_bound"] = rc.bochner.str();
  j["sharper_bound_sign"] = rc.compare_sign;
  j["csck_obstruction"] = report_json(rc.obstruction);
  j["chern_difference_upper_bound"] = report_json(rc.tian);
  j["bound_difference"] = rc.bound_diff.str();
  j["bound_difference_sign"] = rc.bound_diff.sign();
  if (rc.yau) j["chern_number_check"] = report_json(*rc.yau);
  return j;
}

}  // namespace

std::string check_human(const std::vector<RecordChecks>& records) {
  std::ostringstream os;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const RecordChecks& rc = records[i];
    os << "record " << i << " (n = " << rc.data.n << ")\n";
    os << "  vol = " << rc.data.vol.str() << ", c1.w = " << rc.data.deg1.str()
       << ", c1^2.w = " << rc.data.chern11.str() << ", c2.w = "
       << rc.data.chern2.str() << "\n";
    os << "  calabi-trivial-lower-bound = " << pretty(rc.trivial_bound) << "\n";
    os << "  bochner-lower-bound        = " << pretty(rc.bochner) << "\n";
    os << "  sharper-bound sign         = " << sign_str(rc.compare_sign) << "\n";
    os << "  " << report_line(rc.obstruction) << "\n";
    os << "  " << report_line(rc.tian) << "\n";
    os << "  bound difference = " << pretty(rc.bound_diff) << " (sign "
       << sign_str(rc.bound_diff.sign()) << ")\n";
    if (rc.yau) os << "  " << report_line(*rc.yau) << "\n";
  }
  if (records.empty()) os << "no records\n";
  return os.str();
}

std::string check_json(const std::vector<RecordChecks>& records) {
  json j = json::array();
  for (std::size_t i = 0; i < records.size(); ++i) {
    j.push_back(record_json(records[i], i));
  }
  return j.dump(2) + "\n";
}

std::string check_csv(const std::vector<RecordChecks>& records) {
  std::ostringstream os;
  os << "record,check,relation,lhs,rhs,margin,verdict\n";
  auto scalar_row = [&os](std::size_t i, const std::string& name,
                          const BigRational& v) {
    os << i << "," << name << ",,," << v.str() << ",,\n";
  };
  auto report_row = [&os](std::size_t i, const InequalityReport& r) {
    os << i << "," << r.name << "," << relation_str(r.relation) << ","
       << r.lhs.str() << "," << r.rhs.str() << "," << r.margin.str() << ","
       << to_string(r.verdict) << "\n";
  };
  for (std::size_t i = 0; i < records.size(); ++i) {
    const RecordChecks& rc = records[i];
    scalar_row(i, "calabi-trivial-lower-bound", rc.trivial_bound);
    scalar_row(i, "bochner-lower-bound", rc.bochner);
    scalar_row(i, "sharper-bound-sign", BigRational(rc.compare_sign));
    report_row(i, rc.obstruction);
    report_row(i, rc.tian);
    scalar_row(i, "bound-difference", rc.bound_diff);
    if (rc.yau) report_row(i, *rc.yau);
  }
  return os.str();
}

namespace {

struct ExpectedCoefficient {
  const char* identity;
  ScalarSymbol symbol;
  RationalFunctionN value;
};

// The displayed coefficients the derivations must reproduce.
std::vector<ExpectedCoefficient> expected_table() {
  const PolyN n = PolyN::n();
  std::vector<ExpectedCoefficient> t;
  t.push_back({"c1sq-density", ScalarSymbol::S2,
               RationalFunctionN(PolyN(1), 4 * n * n)});
  t.push_back({"c1sq-density", ScalarSymbol::TRic2,
               RationalFunctionN(PolyN(-1), n * (n - 1))});
  t.push_back({"c2-density", ScalarSymbol::S2,
               RationalFunctionN(PolyN(1), 8 * n * (n + 1))});
  t.push_back({"c2-density", ScalarSymbol::TRic2,
               RationalFunctionN(PolyN(-1), (n + 2) * (n - 1))});
  t.push_back({"c2-density", ScalarSymbol::BPart2,
               RationalFunctionN(PolyN(1), 2 * n * (n - 1))});
  t.push_back({"obstruction-combination-density", ScalarSymbol::S2,
               RationalFunctionN(PolyN(1), 8 * (n + 1))});
  t.push_back({"obstruction-combination-density", ScalarSymbol::TRic2,
               RationalFunctionN()});
  t.push_back({"obstruction-combination-density", ScalarSymbol::BPart2,
               RationalFunctionN(-(n + 2), 2 * n * (n - 1))});
  t.push_back({"csck-difference-density", ScalarSymbol::S2,
               RationalFunctionN(n + 2, 8 * n * n * (n + 1))});
  t.push_back({"csck-difference-density", ScalarSymbol::TRic2,
               RationalFunctionN(PolyN(-2), n * (n + 2) * (n - 1))});
  t.push_back({"csck-difference-density", ScalarSymbol::BPart2,
               RationalFunctionN(PolyN(-1), 2 * n * (n - 1))});
  t.push_back({"bound-difference-density", ScalarSymbol::S2,
               RationalFunctionN()});
  t.push_back({"bound-difference-density", ScalarSymbol::TRic2,
               RationalFunctionN(PolyN(-2), n * (n + 2) * (n - 1))});
  t.push_back({"bound-difference-density", ScalarSymbol::BPart2,
               RationalFunctionN(PolyN(1), n * n * (n - 1))});
  return t;
}

}  // namespace

VerifyRun make_verify_run(bool tensor, bool identities) {
  VerifyRun run;
  run.run_tensor = tensor || identities;  // identities presuppose the tensor pass
  run.run_identities = identities;
  run.all_pass = true;

  if (run.run_tensor) {
    run.norm_checks = verify_norm_identities();
    run.cross_checks = verify_cross_terms();
    for (const auto* group : {&run.norm_checks, &run.cross_checks}) {
      for (const auto& c : *group) {
        if (!c.pass) run.all_pass = false;
      }
    }
  }
  if (!run.run_identities || !run.all_pass) return run;

  const NormRules rules =
      rules_from_checks(run.norm_checks, run.cross_checks);
  std::vector<PointwiseIdentity> derived;
  derived.push_back(derive_c1sq_density(rules));
  derived.push_back(derive_c2_density(rules));
  derived.push_back(derive_combination(rules));
  derived.push_back(derive_csck_difference_density(rules));
  derived.push_back(derive_bound_difference_density(rules));

  for (const auto& want : expected_table()) {
    const PointwiseIdentity* id = nullptr;
    for (const auto& d : derived) {
      if (d.name == want.identity) id = &d;
    }
    IdentityRow row;
    row.identity = want.identity;
    row.coefficient_of = to_string(want.symbol);
    row.derived = id ? combo_coeff(id->combo, want.symbol) : RationalFunctionN();
    row.expected = want.value;
    row.pass = id && row.derived == row.expected;
    if (!row.pass) run.all_pass = false;
    run.identity_rows.push_back(std::move(row));
  }

  // The rewritten obstruction bound.
  const PolyN n = PolyN::n();
  const ObstructionUpperBound bound = derive_obstruction_upper_bound();
  IdentityRow s2row;
  s2row.identity = "obstruction-upper-bound";
  s2row.coefficient_of = "s^2 [w]^n";
  s2row.derived = bound.s2_vol_coeff;
  s2row.expected = RationalFunctionN(PolyN(1), 8 * n * (n + 1));
  s2row.pass = s2row.derived == s2row.expected;
  if (!s2row.pass) run.all_pass = false;
  run.identity_rows.push_back(std::move(s2row));
  IdentityRow c2row;
  c2row.identity = "obstruction-upper-bound";
  c2row.coefficient_of = "c2 [w]^{n-2}";
  c2row.derived = bound.c2_coeff;
  c2row.expected = RationalFunctionN(PolyN(2), n);
  c2row.pass = c2row.derived == c2row.expected;
  if (!c2row.pass) run.all_pass = false;
  run.identity_rows.push_back(std::move(c2row));

  // Coefficient audit.
  CoefficientAudit audit = besse_coefficient_audit(rules);
  IdentityRow corrected;
  corrected.identity = "coefficient-audit";
  corrected.coefficient_of = "|tRic|^2 in the c2 display";
  corrected.derived = audit.corrected;
  corrected.expected = RationalFunctionN(-2 * n, n + 2);
  corrected.pass = corrected.derived == corrected.expected;
  if (!corrected.pass) run.all_pass = false;
  run.identity_rows.push_back(std::move(corrected));
  IdentityRow diff;
  diff.identity = "coefficient-audit";
  diff.coefficient_of = "corrected minus erroneous";
  diff.derived = audit.difference;
  diff.expected = RationalFunctionN(2 * n - 4, n * (n + 2));
  diff.pass = diff.derived == diff.expected;
  if (!diff.pass) run.all_pass = false;
  run.identity_rows.push_back(std::move(diff));
  run.audit = std::move(audit);

  return run;
}

std::string verify_human(const VerifyRun& run) {
  std::ostringstream os;
  if (run.run_tensor) {
    os << "Tensor contraction checks\n";
    for (const auto* group : {&run.norm_checks, &run.cross_checks}) {
      for (const auto& c : *group) {
        os << "  " << (c.pass ? "PASS" : "FAIL") << " " << c.name << ": "
           << to_string(c.computed) << "\n";
        if (!c.pass) {
          os << "       expected: " << to_string(c.expected) << "\n";
          os << "       residual: " << to_string(c.residual) << "\n";
        }
      }
    }
  }
  if (run.run_identities) {
    os << "Density axioms (not derived here): Ric^2 ^ w^{n-2} and "
          "c2 ^ w^{n-2} as curvature-norm densities; their Chern-Weil "
          "derivation is classical and out of scope.\n";
    os << "Derived density identities\n";
    for (const auto& row : run.identity_rows) {
      os << "  " << (row.pass ? "PASS" : "FAIL") << " " << row.identity << ", "
         << row.coefficient_of << ": " << row.derived.str();
      if (!row.pass) os << " (expected " << row.expected.str() << ")";
      os << "\n";
    }
    if (run.audit) {
      os << "Coefficient audit (|tRic|^2 term of the factorial-normalized c2 "
            "display)\n";
      os << "  corrected:  " << run.audit->corrected.str() << "\n";
      os << "  erroneous:  " << run.audit->erroneous.str() << "\n";
      os << "  difference: " << run.audit->difference.str()
         << " (vanishes only at n = 2)\n";
      os << "  note: " << run.audit->conventions_note << "\n";
    }
  }
  os << "overall: " << (run.all_pass ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string verify_json(const VerifyRun& run) {
  json j;
  j["subcommand"] = "verify";
  auto check_json_row = [](const IdentityCheck& c) {
    json r;
    r["name"] = c.name;
    r["computed"] = to_string(c.computed);
    r["expected"] = to_string(c.expected);
    r["residual"] = to_string(c.residual);
    r["pass"] = c.pass;
    return r;
  };
  if (run.run_tensor) {
    json tensor = json::array();
    for (const auto* group : {&run.norm_checks, &run.cross_checks}) {
      for (const auto& c : *group) tensor.push_back(check_json_row(c));
    }
    j["tensor"] = tensor;
  }
  if (run.run_identities) {
    j["axioms_note"] =
        "Ric^2 and c2 density expressions are consumed as axioms; their "
        "Chern-Weil derivation is classical and out of scope.";
    json rows = json::array();
    for (const auto& row : run.identity_rows) {
      rows.push_back({{"identity", row.identity},
                      {"coefficient_of", row.coefficient_of},
                      {"derived", row.derived.str()},
                      {"expected", row.expected.str()},
                      {"pass", row.pass}});
    }
    j["identities"] = rows;
    if (run.audit) {
      j["coefficient_audit"] = {
          {"corrected", run.audit->corrected.str()},
          {"erroneous", run.audit->erroneous.str()},
          {"difference", run.audit->difference.str()},
          {"note", run.audit->conventions_note}};
    }
  }
  j["pass"] = run.all_pass;
  return j.dump(2) + "\n";
}

std::string ring_human(const GradedClass& value) {
  std::ostringstream os;
  os << "normal form: " << value.str() << "\n";
  os << "degree " << value.degree() << " in dimension " << value.dim() << "\n";
  if (value.degree() == value.dim()) {
    os << "top intersection number: " << pretty(value.top_evaluate()) << "\n";
  }
  return os.str();
}

std::string ring_json(const std::string& expr_source, const GradedClass& value) {
  json j;
  j["subcommand"] = "ring";
  j["expr"] = expr_source;
  j["dim"] = value.dim();
  j["degree"] = value.degree();
  j["normal_form"] = value.str();
  if (value.degree() == 0) {
    j["scalar"] = value.scalar_part().str();
  } else {
    j["lh_coeff"] = value.lh_coeff().str();
    j["h_coeff"] = value.h_coeff().str();
  }
  if (value.degree() == value.dim()) {
    j["top_intersection"] = value.top_evaluate().str();
  }
  return j.dump(2) + "\n";
}

}  // namespace kahlercalc
