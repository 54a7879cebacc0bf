// Command-line front end: every quantity the library computes, from a
// terminal, with exact rationals everywhere. Exit codes: 0 ok,
// 1 verification failure, 2 parse error, 3 precondition violation,
// 4 I/O error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "kahlercalc/class_expr.hpp"
#include "kahlercalc/errors.hpp"
#include "kahlercalc/report.hpp"

namespace {

using namespace kahlercalc;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitIo = 4;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("error while reading '" + path + "'");
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("error while writing '" + path + "'");
}

struct Options {
  // batyrev / ring
  int n = 2;
  std::string alpha = "1";
  std::string beta = "1";
  // scan
  int n_max = 50;
  std::string csv_path;
  // check
  std::string input_path;
  std::string scalar;
  std::string yau_mode;
  // ring
  std::string expr;
  // verify
  std::string which = "all";
  // output
  bool as_json = false;
};

int run_batyrev(const Options& opt) {
  const BatyrevRun run = make_batyrev_run(opt.n, BigRational::parse(opt.alpha),
                                          BigRational::parse(opt.beta));
  std::cout << (opt.as_json ? batyrev_json(run) : batyrev_human(run));
  return kExitOk;
}

int run_scan(const Options& opt) {
  const BigRational alpha = BigRational::parse(opt.alpha);
  const BigRational beta = BigRational::parse(opt.beta);
  const ScanResult result = scan_min_n(alpha, beta, opt.n_max);
  if (!opt.csv_path.empty()) {
    write_file(opt.csv_path, scan_csv(result));
    // The summary still goes to stdout.
    std::ostringstream os;
    if (result.first_positive) {
      os << "first n with f > 0: " << *result.first_positive << "\n";
    } else {
      os << "none up to " << opt.n_max << "\n";
    }
    std::cout << os.str();
    return kExitOk;
  }
  std::cout << (opt.as_json ? scan_json(alpha, beta, result)
                            : scan_human(alpha, beta, result));
  return kExitOk;
}

int run_check(const Options& opt, bool csv_selected) {
  const std::string text = read_file(opt.input_path);
  const std::vector<KahlerClassData> records = parse_kahler_records(text);
  std::optional<BigRational> scalar;
  if (!opt.scalar.empty()) scalar = BigRational::parse(opt.scalar);
  std::optional<YauMode> yau;
  if (opt.yau_mode == "c1_negative") {
    yau = YauMode::C1Negative;
  } else if (opt.yau_mode == "c1_zero") {
    yau = YauMode::C1Zero;
  } else if (!opt.yau_mode.empty()) {
    throw ParseError("unknown mode '" + opt.yau_mode +
                     "' (expected c1_negative or c1_zero)");
  }
  std::vector<RecordChecks> checks;
  checks.reserve(records.size());
  for (const auto& record : records) {
    checks.push_back(check_record(record, scalar, yau));
  }
  if (csv_selected) {
    std::cout << check_csv(checks);
  } else if (opt.as_json) {
    std::cout << check_json(checks);
  } else {
    std::cout << check_human(checks);
  }
  return kExitOk;
}

int run_ring(const Options& opt) {
  const ClassExprPtr ast = parse_class_expr(opt.expr);
  const GradedClass value = eval_class_expr(
      *ast, opt.n, BigRational::parse(opt.alpha), BigRational::parse(opt.beta));
  std::cout << (opt.as_json ? ring_json(opt.expr, value) : ring_human(value));
  return kExitOk;
}

int run_verify(const Options& opt) {
  if (opt.which != "tensor" && opt.which != "identities" && opt.which != "all") {
    throw ParseError("unknown verification target '" + opt.which +
                     "' (expected tensor, identities or all)");
  }
  const bool identities = opt.which != "tensor";
  const VerifyRun run = make_verify_run(true, identities);
  std::cout << (opt.as_json ? verify_json(run) : verify_human(run));
  return run.all_pass ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact intersection numbers, cscK obstruction inequalities and "
      "curvature-norm identities for Kahler classes"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* batyrev = app.add_subcommand(
      "batyrev", "Invariants, obstruction quantity and inequality checks for "
                 "the class alpha*L + beta*H on P(O + O(n-1))");
  batyrev->add_option("--n", opt.n, "complex dimension (>= 2)")->required();
  batyrev->add_option("--alpha", opt.alpha, "coefficient of L, as p/q")->required();
  batyrev->add_option("--beta", opt.beta, "coefficient of H, as p/q")->required();
  batyrev->add_flag("--json", opt.as_json, "machine-readable output");

  CLI::App* scan = app.add_subcommand(
      "scan", "Sign of the obstruction quantity f(n, alpha, beta) over a "
              "range of dimensions");
  scan->add_option("--alpha", opt.alpha)->required();
  scan->add_option("--beta", opt.beta)->required();
  scan->add_option("--n-max", opt.n_max, "largest dimension to scan")->required();
  scan->add_option("--csv", opt.csv_path, "write rows n,t,f_num,f_den,sign here");
  scan->add_flag("--json", opt.as_json);

  CLI::App* check = app.add_subcommand(
      "check", "Run all inequality checks on Kahler-class records from a file");
  check->add_option("--input", opt.input_path, "JSON records file")->required();
  bool csv_selected = false;
  check->add_flag("--csv", csv_selected, "CSV output");
  check->add_flag("--json", opt.as_json);
  check->add_option("--scalar", opt.scalar,
                    "use this scalar curvature instead of the cscK substitution");
  check->add_option("--yau", opt.yau_mode,
                    "also run the Chern number check: c1_negative or c1_zero");

  CLI::App* ring = app.add_subcommand(
      "ring", "Evaluate a cohomology-class expression in the intersection ring");
  ring->add_option("--n", opt.n, "complex dimension (>= 2)")->required();
  ring->add_option("--alpha", opt.alpha, "W = alpha*L + beta*H");
  ring->add_option("--beta", opt.beta);
  ring->add_option("--expr", opt.expr, "e.g. \"c1^2 * W^(n-2)\"")->required();
  ring->add_flag("--json", opt.as_json);

  CLI::App* verify = app.add_subcommand(
      "verify", "Re-derive the curvature-norm and density identities");
  verify->add_option("target", opt.which, "tensor, identities or all")
      ->default_val("all");
  verify->add_flag("--json", opt.as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (batyrev->parsed()) return run_batyrev(opt);
    if (scan->parsed()) return run_scan(opt);
    if (check->parsed()) return run_check(opt, csv_selected);
    if (ring->parsed()) return run_ring(opt);
    if (verify->parsed()) return run_verify(opt);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const VerificationError& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kExitVerifyFail;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitVerifyFail;
  }
  return kExitOk;
}
