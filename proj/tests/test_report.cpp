#include <doctest.h>

#include <json.hpp>

#include "kahlercalc/class_expr.hpp"
#include "kahlercalc/report.hpp"

using namespace kahlercalc;

TEST_SUITE("report") {

TEST_CASE("batyrev reports are byte deterministic") {
  const BatyrevRun a = make_batyrev_run(4, 1, 1);
  const BatyrevRun b = make_batyrev_run(4, 1, 1);
  CHECK(batyrev_human(a) == batyrev_human(b));
  CHECK(batyrev_json(a) == batyrev_json(b));
}

TEST_CASE("every human value appears in the machine form") {
  const BatyrevRun run = make_batyrev_run(4, 1, 1);
  const std::string j = batyrev_json(run);
  for (const char* needle :
       {"\"85\"", "\"149\"", "\"261\"", "\"98\"", "\"32384\"", "\"72864\"",
        "\"2277/2\"", "\"-32384\"", "\"1420864/85\"", "\"18240\""}) {
    CAPTURE(needle);
    CHECK(j.find(needle) != std::string::npos);
  }
  CHECK(j.find("\"verdict\": \"violated\"") != std::string::npos);
}

TEST_CASE("approximations are marked and only shown for non-integers") {
  const std::string human = batyrev_human(make_batyrev_run(4, 1, 1));
  CHECK(human.find("2277/2 (~ 1138.5)") != std::string::npos);
  CHECK(human.find("= 85\n") != std::string::npos);  // integers stay bare
  CHECK(human.find("no cscK metric in this class") != std::string::npos);
}

TEST_CASE("scan csv has the exact column layout") {
  const ScanResult r = scan_min_n(1, 1, 4);
  CHECK(scan_csv(r) ==
        "n,t,f_num,f_den,sign\n"
        "2,2,-100,1,-1\n"
        "3,3,-612,1,-1\n"
        "4,4,32384,1,1\n");
}

TEST_CASE("scan human output reports the first positive dimension") {
  const std::string human = scan_human(1, 1, scan_min_n(1, 1, 6));
  CHECK(human.find("first n with f > 0: 4") != std::string::npos);
  CHECK(human.find("no sign reversal up to 6") != std::string::npos);
  const std::string none = scan_human(1, 1, scan_min_n(1, 1, 3));
  CHECK(none.find("none up to 3") != std::string::npos);
}

TEST_CASE("scan json round trips") {
  const ScanResult r = scan_min_n(1, 1, 5);
  const auto j = nlohmann::json::parse(scan_json(1, 1, r));
  CHECK(j["first_positive"] == 4);
  CHECK(j["rows"].size() == 4);
  CHECK(j["rows"][2]["f"] == "32384");
  CHECK(j["sign_reversals"].empty());
}

TEST_CASE("record check reports") {
  const KahlerClassData d{2, BigRational(3), BigRational(5), BigRational(8),
                          BigRational(4)};
  const std::vector<RecordChecks> checks = {check_record(d)};
  SUBCASE("human and csv forms") {
    const std::string human = check_human(checks);
    CHECK(human.find("record 0 (n = 2)") != std::string::npos);
    CHECK(human.find("400/3") != std::string::npos);
    CHECK(human.find("11/9") != std::string::npos);
    const std::string csv = check_csv(checks);
    CHECK(csv.rfind("record,check,relation,lhs,rhs,margin,verdict\n", 0) == 0);
    CHECK(csv.find("0,csck-obstruction,>=,100,0,100,strict") != std::string::npos);
  }
  SUBCASE("json mirrors the margins") {
    const auto j = nlohmann::json::parse(check_json(checks));
    CHECK(j[0]["csck_obstruction"]["margin"] == "100");
    CHECK(j[0]["bound_difference"] == "11/9");
    CHECK(j[0]["calabi_trivial_lower_bound"] == "400/3");
  }
  SUBCASE("empty input produces an empty report") {
    CHECK(check_human({}) == "no records\n");
    CHECK(nlohmann::json::parse(check_json({})).empty());
  }
  SUBCASE("requested chern-number check is included") {
    const KahlerClassData ball{2, BigRational(3), BigRational(0), BigRational(0),
                               BigRational(1)};
    const RecordChecks rc = check_record(ball, {}, YauMode::C1Negative);
    REQUIRE(rc.yau.has_value());
    CHECK(rc.yau->verdict == Verdict::Equality);
    const std::string human = check_human({rc});
    CHECK(human.find("covered by the unit ball") != std::string::npos);
  }
}

TEST_CASE("verify reports") {
  const VerifyRun run = make_verify_run(true, true);
  CHECK(run.all_pass);
  SUBCASE("human output") {
    const std::string human = verify_human(run);
    CHECK(human.find("PASS ricci-norm") != std::string::npos);
    CHECK(human.find("overall: PASS") != std::string::npos);
    CHECK(human.find("(-2*n)/(n + 2)") != std::string::npos);
    CHECK(human.find("FAIL") == std::string::npos);
  }
  SUBCASE("json output") {
    const auto j = nlohmann::json::parse(verify_json(run));
    CHECK(j["pass"] == true);
    CHECK(j["tensor"].size() == 7);
    CHECK(j["identities"].size() == 18);
    CHECK(j["coefficient_audit"]["corrected"] == "(-2*n)/(n + 2)");
    CHECK(j["coefficient_audit"]["difference"] == "(2*n - 4)/(n^2 + 2*n)");
  }
  SUBCASE("tensor-only run skips the identity table") {
    const VerifyRun t = make_verify_run(true, false);
    CHECK(t.all_pass);
    CHECK(t.identity_rows.empty());
    CHECK(verify_human(t).find("Derived density") == std::string::npos);
  }
  SUBCASE("deterministic") {
    CHECK(verify_json(make_verify_run(true, true)) == verify_json(run));
    CHECK(verify_human(make_verify_run(true, true)) == verify_human(run));
  }
  SUBCASE("a failing check renders its residual") {
    const PolyN n = PolyN::n();
    // Scaling P by (n+2)/(n+3) turns its leading 1/(n+2) into 1/(n+3).
    const RationalFunctionN wrong = RationalFunctionN(n + 2, n + 3);
    VerifyRun bad;
    bad.run_tensor = true;
    bad.norm_checks.push_back(check_contraction(
        "perturbed-traceless-part",
        build_P("i", "j", "k", "l").scaled(wrong) *
            build_P("j", "i", "l", "k").scaled(wrong),
        TensorExpr::scalar_monomial(RationalFunctionN(PolyN(4), n + 2), 0, 1)));
    bad.all_pass = false;
    const std::string human = verify_human(bad);
    CHECK(human.find("FAIL perturbed-traceless-part") != std::string::npos);
    CHECK(human.find("residual:") != std::string::npos);
    CHECK(human.find("overall: FAIL") != std::string::npos);
  }
}

TEST_CASE("ring reports") {
  const GradedClass value = eval_class_expr(
      *parse_class_expr("c1^2 * W^(n-2)"), 3, BigRational(1), BigRational(1));
  const std::string human = ring_human(value);
  CHECK(human.find("normal form: 37*L*H^2") != std::string::npos);
  CHECK(human.find("top intersection number: 37") != std::string::npos);
  const auto j = nlohmann::json::parse(ring_json("c1^2 * W^(n-2)", value));
  CHECK(j["top_intersection"] == "37");
  CHECK(j["normal_form"] == "37*L*H^2");
  CHECK(j["degree"] == 3);
  // Scalar classes expose the scalar field instead.
  const GradedClass scalar = eval_class_expr(*parse_class_expr("1 + 2"), 3,
                                             BigRational(1), BigRational(1));
  const auto js = nlohmann::json::parse(ring_json("1 + 2", scalar));
  CHECK(js["scalar"] == "3");
}

}  // TEST_SUITE
