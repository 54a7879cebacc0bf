#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kahlercalc/batyrev.hpp"
#include "kahlercalc/identities.hpp"
#include "kahlercalc/inequalities.hpp"
#include "kahlercalc/intersection_ring.hpp"
#include "kahlercalc/tensor.hpp"

namespace kahlercalc {

/// Everything the batyrev subcommand reports for one class.
struct BatyrevRun {
  BatyrevInvariants inv;
  BigRational f_def, f_exp, f_norm;
  bool forms_agree = false;
  BigRational trivial_bound, bochner;
  int compare_sign = 0;
  InequalityReport obstruction;
  InequalityReport tian;
  BigRational bound_diff;
};

BatyrevRun make_batyrev_run(int n, const BigRational& alpha, const BigRational& beta);

/// The full battery the check subcommand runs on one record.
struct RecordChecks {
  KahlerClassData data;
  BigRational trivial_bound, bochner;
  int compare_sign = 0;
  InequalityReport obstruction;
  InequalityReport tian;
  BigRational bound_diff;
  std::optional<InequalityReport> yau;
};

RecordChecks check_record(const KahlerClassData& d,
                          const std::optional<BigRational>& scalar = {},
                          const std::optional<YauMode>& yau_mode = {});

/// One derived-versus-expected coefficient line of the identity report.
struct IdentityRow {
  std::string identity;
  std::string coefficient_of;
  RationalFunctionN derived;
  RationalFunctionN expected;
  bool pass = false;
};

/// Aggregated result of the verify subcommand.
struct VerifyRun {
  bool run_tensor = false;
  bool run_identities = false;
  std::vector<IdentityCheck> norm_checks;
  std::vector<IdentityCheck> cross_checks;
  std::vector<IdentityRow> identity_rows;
  std::optional<CoefficientAudit> audit;
  bool all_pass = false;
};

VerifyRun make_verify_run(bool tensor, bool identities);

// Human-readable reports. Every exact value printed here also appears in
// the JSON form; output is byte-deterministic for identical inputs.
std::string batyrev_human(const BatyrevRun& run);
std::string batyrev_json(const BatyrevRun& run);

std::string scan_human(const BigRational& alpha, const BigRational& beta,
                       const ScanResult& result);
std::string scan_json(const BigRational& alpha, const BigRational& beta,
                      const ScanResult& result);
/// Columns exactly: n, t, f_num, f_den, sign.
std::string scan_csv(const ScanResult& result);

std::string check_human(const std::vector<RecordChecks>& records);
std::string check_json(const std::vector<RecordChecks>& records);
std::string check_csv(const std::vector<RecordChecks>& records);

std::string verify_human(const VerifyRun& run);
std::string verify_json(const VerifyRun& run);

/// Normal-form report for the ring subcommand; includes the top
/// intersection number when the class has top degree.
std::string ring_human(const GradedClass& value);
std::string ring_json(const std::string& expr_source, const GradedClass& value);

}  // namespace kahlercalc
