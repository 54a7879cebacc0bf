#include <doctest.h>

#include <random>

#include "kahlercalc/batyrev.hpp"
#include "kahlercalc/errors.hpp"
#include "kahlercalc/inequalities.hpp"
#include "test_support.hpp"

using namespace kahlercalc;
using kahlercalc::testing::rand_positive_rational;
using kahlercalc::testing::rand_rational;

namespace {

KahlerClassData batyrev_data(int n) {
  return invariants_closed_form(n, 1, 1).to_kahler_data();
}

}  // namespace

TEST_SUITE("inequalities") {

TEST_CASE("calabi trivial lower bound") {
  CHECK(calabi_trivial_bound(batyrev_data(2)) ==
        BigRational(BigInt(400), BigInt(3)));
  KahlerClassData zero_deg{3, BigRational(7), BigRational(0), BigRational(1),
                           BigRational(1)};
  CHECK(calabi_trivial_bound(zero_deg) == BigRational(0));
  KahlerClassData bad{3, BigRational(0), BigRational(1), BigRational(1),
                      BigRational(1)};
  CHECK_THROWS_AS(calabi_trivial_bound(bad), DomainError);
}

TEST_CASE("bochner lower bound") {
  CHECK(bochner_bound(batyrev_data(2)) == BigRational(0));
  CHECK(bochner_bound(batyrev_data(3)) == BigRational(1152));
  KahlerClassData flat{4, BigRational(1), BigRational(0), BigRational(0),
                       BigRational(0)};
  CHECK(bochner_bound(flat) == BigRational(0));
}

TEST_CASE("cscK obstruction check") {
  SUBCASE("violated on the n=4 family class") {
    const InequalityReport r = csck_obstruction_check(batyrev_data(4));
    CHECK(r.verdict == Verdict::Violated);
    CHECK(r.margin == BigRational(-32384));
    CHECK(r.note == "no cscK metric in this class");
  }
  SUBCASE("strict at n=2") {
    const InequalityReport r = csck_obstruction_check(batyrev_data(2));
    CHECK(r.verdict == Verdict::Strict);
    CHECK(r.margin == BigRational(100));
  }
  SUBCASE("equality on degenerate synthetic data") {
    KahlerClassData d{3, BigRational(5), BigRational(0), BigRational(0),
                      BigRational(0)};
    const InequalityReport r = csck_obstruction_check(d);
    CHECK(r.verdict == Verdict::Equality);
    CHECK(r.margin == BigRational(0));
  }
  SUBCASE("margin is minus the obstruction quantity on the family") {
    for (int n = 2; n <= 30; ++n) {
      const BatyrevInvariants inv = invariants_closed_form(n, 1, 1);
      const InequalityReport r = csck_obstruction_check(inv.to_kahler_data());
      CHECK(r.margin == -f_definition(inv));
    }
  }
}

TEST_CASE("comparison of the two lower bounds") {
  CHECK(compare_lower_bounds(batyrev_data(4)) > 0);
  CHECK(compare_lower_bounds(batyrev_data(2)) < 0);
  SUBCASE("sign equals sign of the obstruction quantity") {
    for (int n = 2; n <= 30; ++n) {
      const BatyrevInvariants inv = invariants_closed_form(n, 1, 1);
      CHECK(compare_lower_bounds(inv.to_kahler_data()) ==
            f_definition(inv).sign());
    }
  }
}

TEST_CASE("chern number checks") {
  SUBCASE("ball-quotient equality signature") {
    KahlerClassData d{2, BigRational(3), BigRational(0), BigRational(0),
                      BigRational(1)};
    const InequalityReport r = yau_check(d, YauMode::C1Negative);
    CHECK(r.verdict == Verdict::Equality);  // 2*3*1 == 2*3
    CHECK(r.note == "covered by the unit ball");
  }
  SUBCASE("torus equality signature") {
    KahlerClassData d{3, BigRational(1), BigRational(0), BigRational(0),
                      BigRational(0)};
    const InequalityReport r = yau_check(d, YauMode::C1Zero);
    CHECK(r.verdict == Verdict::Equality);
    CHECK(r.note == "covered by a complex torus");
  }
  SUBCASE("strict case") {
    KahlerClassData d{3, BigRational(1), BigRational(0), BigRational(0),
                      BigRational(1)};
    const InequalityReport r = yau_check(d, YauMode::C1Negative);
    CHECK(r.verdict == Verdict::Strict);  // 8 >= 3
    CHECK(r.lhs == BigRational(8));
    CHECK(r.rhs == BigRational(3));
  }
  SUBCASE("violated is reportable, not an error") {
    KahlerClassData d{3, BigRational(1), BigRational(0), BigRational(0),
                      BigRational(-1)};
    CHECK(yau_check(d, YauMode::C1Zero).verdict == Verdict::Violated);
  }
}

TEST_CASE("chern-difference upper bound under the cscK hypothesis") {
  SUBCASE("strict on the n=2 family class") {
    const InequalityReport r = tian_check_csck(batyrev_data(2));
    CHECK(r.relation == Relation::Leq);
    CHECK(r.lhs == BigRational(4));
    CHECK(r.rhs == BigRational(BigInt(50), BigInt(9)));
    CHECK(r.verdict == Verdict::Strict);
  }
  SUBCASE("constructed equality witness") {
    // Solve chern11 - chern2 = bound for chern2 on top of the n=2 data.
    KahlerClassData d = batyrev_data(2);
    d.chern11 = BigRational(10);
    d.chern2 = BigRational(10) - BigRational(BigInt(50), BigInt(9));
    const InequalityReport r = tian_check_csck(d);
    CHECK(r.verdict == Verdict::Equality);
    CHECK(r.note == "constant holomorphic sectional curvature");
  }
  SUBCASE("degenerate data") {
    KahlerClassData d{3, BigRational(1), BigRational(0), BigRational(1),
                      BigRational(2)};
    const InequalityReport r = tian_check_csck(d);
    CHECK(r.verdict == Verdict::Strict);  // -1 <= 0
  }
  SUBCASE("explicit scalar matches the substitution when consistent") {
    const KahlerClassData d = batyrev_data(2);
    const BigRational s = BigRational(2 * d.n) * d.deg1 / d.vol;  // 20/3
    const InequalityReport substituted = tian_check_csck(d);
    const InequalityReport explicit_s = tian_check_csck(d, s);
    CHECK(substituted.rhs == explicit_s.rhs);
    CHECK(substituted.verdict == explicit_s.verdict);
    // A different scalar changes the bound.
    CHECK(tian_check_csck(d, BigRational(1)).rhs != substituted.rhs);
  }
}

TEST_CASE("difference of the two cscK upper bounds") {
  CHECK(bound_difference(batyrev_data(2)) == BigRational(BigInt(11), BigInt(9)));
  SUBCASE("only the negative term survives without c2") {
    KahlerClassData d{3, BigRational(2), BigRational(1), BigRational(0),
                      BigRational(0)};
    CHECK(bound_difference(d).sign() < 0);
  }
  SUBCASE("only the positive term survives without deg1") {
    KahlerClassData d{3, BigRational(2), BigRational(0), BigRational(0),
                      BigRational(5)};
    CHECK(bound_difference(d).sign() > 0);
  }
}

TEST_CASE("verdicts are consistent with margins through the relation") {
  std::mt19937_64 rng(20240907);
  for (int i = 0; i < 300; ++i) {
    const BigRational lhs = rand_rational(rng, 60);
    const BigRational rhs = rand_rational(rng, 60);
    const Relation rel = (i % 2 == 0) ? Relation::Geq : Relation::Leq;
    const InequalityReport r = make_report("random", rel, lhs, rhs);
    CHECK(r.margin == lhs - rhs);
    if (r.margin.is_zero()) {
      CHECK(r.verdict == Verdict::Equality);
    } else if (rel == Relation::Geq) {
      CHECK(r.verdict == (r.margin.sign() > 0 ? Verdict::Strict : Verdict::Violated));
    } else {
      CHECK(r.verdict == (r.margin.sign() < 0 ? Verdict::Strict : Verdict::Violated));
    }
  }
}

TEST_CASE("verdicts are scale invariant") {
  std::mt19937_64 rng(20240908);
  for (int trial = 0; trial < 30; ++trial) {
    std::uniform_int_distribution<int> n_dist(2, 10);
    const int n = n_dist(rng);
    const BigRational a = rand_positive_rational(rng, 15);
    const BigRational b = rand_positive_rational(rng, 15);
    const BigRational lambda = rand_positive_rational(rng, 7);
    const KahlerClassData base = invariants_closed_form(n, a, b).to_kahler_data();
    const KahlerClassData scaled =
        invariants_closed_form(n, lambda * a, lambda * b).to_kahler_data();
    CHECK(csck_obstruction_check(base).verdict ==
          csck_obstruction_check(scaled).verdict);
    CHECK(tian_check_csck(base).verdict == tian_check_csck(scaled).verdict);
    CHECK(compare_lower_bounds(base) == compare_lower_bounds(scaled));
    CHECK(bound_difference(base).sign() == bound_difference(scaled).sign());
  }
}

TEST_CASE("record parsing") {
  SUBCASE("JSON array form") {
    const auto records = parse_kahler_records(
        R"([{"n": 2, "vol": "3", "c1_w_nm1": "5", "c1sq_w_nm2": "8", "c2_w_nm2": "4"},
            {"n": 3, "vol": "13/1", "c1_w_nm1": "22", "c1sq_w_nm2": "37", "c2_w_nm2": "15"}])");
    REQUIRE(records.size() == 2);
    CHECK(records[0].n == 2);
    CHECK(records[0].vol == BigRational(3));
    CHECK(records[1].deg1 == BigRational(22));
  }
  SUBCASE("one object per line") {
    const auto records = parse_kahler_records(
        "{\"n\": 2, \"vol\": \"3\", \"c1_w_nm1\": \"5\", \"c1sq_w_nm2\": \"8\", \"c2_w_nm2\": \"4\"}\n"
        "\n"
        "{\"n\": 4, \"vol\": \"85\", \"c1_w_nm1\": \"149\", \"c1sq_w_nm2\": \"261\", \"c2_w_nm2\": \"98\"}\n");
    REQUIRE(records.size() == 2);
    CHECK(records[1].chern2 == BigRational(98));
  }
  SUBCASE("integer JSON numbers are accepted for rationals") {
    const auto records = parse_kahler_records(
        R"([{"n": 2, "vol": 3, "c1_w_nm1": 5, "c1sq_w_nm2": 8, "c2_w_nm2": 4}])");
    CHECK(records[0].vol == BigRational(3));
  }
  SUBCASE("malformed rational names the field") {
    try {
      parse_kahler_records(
          R"([{"n": 2, "vol": "3", "c1_w_nm1": "3/", "c1sq_w_nm2": "8", "c2_w_nm2": "4"}])");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.field() == "c1_w_nm1");
      CHECK(std::string(e.what()).find("c1_w_nm1") != std::string::npos);
    }
  }
  SUBCASE("missing field") {
    CHECK_THROWS_AS(parse_kahler_records(R"([{"n": 2, "vol": "3"}])"), ParseError);
  }
  SUBCASE("invariant violations surface as domain errors") {
    CHECK_THROWS_AS(
        parse_kahler_records(
            R"([{"n": 2, "vol": "-3", "c1_w_nm1": "5", "c1sq_w_nm2": "8", "c2_w_nm2": "4"}])"),
        DomainError);
    CHECK_THROWS_AS(
        parse_kahler_records(
            R"([{"n": 1, "vol": "3", "c1_w_nm1": "5", "c1sq_w_nm2": "8", "c2_w_nm2": "4"}])"),
        DomainError);
  }
  SUBCASE("structural failures") {
    CHECK_THROWS_AS(parse_kahler_records("[{"), ParseError);
    CHECK_THROWS_AS(parse_kahler_records("[1, 2]"), ParseError);
    CHECK_THROWS_AS(parse_kahler_records("{\"n\": oops}"), ParseError);
    CHECK(parse_kahler_records("").empty());
    CHECK(parse_kahler_records("[]").empty());
  }
}

}  // TEST_SUITE
