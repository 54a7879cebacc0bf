#include <doctest.h>

#include "kahlercalc/class_expr.hpp"
#include "kahlercalc/errors.hpp"

using namespace kahlercalc;

TEST_SUITE("class_expr") {

TEST_CASE("AST structure honors precedence") {
  SUBCASE("power binds tighter than product") {
    const ClassExprPtr e = parse_class_expr("c1^2 * W^(n-2)");
    REQUIRE(e->kind == ExprKind::Mul);
    REQUIRE(e->lhs->kind == ExprKind::Pow);
    CHECK(e->lhs->lhs->kind == ExprKind::Symbol);
    CHECK(e->lhs->lhs->symbol == RingSymbol::C1);
    CHECK(e->lhs->exponent == AffineInt{0, 2});
    REQUIRE(e->rhs->kind == ExprKind::Pow);
    CHECK(e->rhs->lhs->symbol == RingSymbol::W);
    CHECK(e->rhs->exponent == AffineInt{1, -2});
  }
  SUBCASE("parenthesized sum as a base") {
    const ClassExprPtr e = parse_class_expr("(2*L + H)^2");
    REQUIRE(e->kind == ExprKind::Pow);
    CHECK(e->exponent == AffineInt{0, 2});
    REQUIRE(e->lhs->kind == ExprKind::Add);
    CHECK(e->lhs->lhs->kind == ExprKind::Mul);
    CHECK(e->lhs->rhs->symbol == RingSymbol::H);
  }
  SUBCASE("product binds tighter than sum, left associative") {
    const ClassExprPtr e = parse_class_expr("L + H * L");
    CHECK(e->kind == ExprKind::Add);
    CHECK(e->rhs->kind == ExprKind::Mul);
    const ClassExprPtr f = parse_class_expr("10 - 2 - 3");
    CHECK(f->kind == ExprKind::Sub);
    CHECK(f->lhs->kind == ExprKind::Sub);
  }
}

TEST_CASE("parse errors carry offsets") {
  SUBCASE("doubled operator") {
    try {
      parse_class_expr("c1 ** 2");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.offset() == 4);
    }
  }
  SUBCASE("unknown symbol") {
    try {
      parse_class_expr("c1 * Q");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.offset() == 5);
      CHECK(std::string(e.what()).find("'Q'") != std::string::npos);
    }
  }
  SUBCASE("assorted malformed inputs") {
    CHECK_THROWS_AS(parse_class_expr(""), ParseError);
    CHECK_THROWS_AS(parse_class_expr("(L + H"), ParseError);
    CHECK_THROWS_AS(parse_class_expr("L +"), ParseError);
    CHECK_THROWS_AS(parse_class_expr("L ^ H"), ParseError);
    CHECK_THROWS_AS(parse_class_expr("c1^2^3"), ParseError);
    CHECK_THROWS_AS(parse_class_expr("W^(n*n)"), ParseError);
    CHECK_THROWS_AS(parse_class_expr("c1^(1/2)"), ParseError);
    CHECK_THROWS_AS(parse_class_expr("L $ H"), ParseError);
  }
  SUBCASE("symbols are case-sensitive") {
    CHECK_THROWS_AS(parse_class_expr("l + H"), ParseError);
    CHECK_THROWS_AS(parse_class_expr("C1"), ParseError);
  }
}

namespace {

GradedClass eval(const std::string& src, int n, long long a = 1, long long b = 1) {
  return eval_class_expr(*parse_class_expr(src), n, BigRational(a), BigRational(b));
}

}  // namespace

TEST_CASE("evaluation") {
  SUBCASE("chern square against the family class") {
    const GradedClass c = eval("c1^2 * W^(n-2)", 3);
    CHECK(c.degree() == 3);
    CHECK(c.top_evaluate() == BigRational(37));
  }
  SUBCASE("volume of the unit class at n=2") {
    CHECK(eval("W^n", 2).top_evaluate() == BigRational(3));
  }
  SUBCASE("H^n vanishes") {
    CHECK(eval("H^n", 5).is_zero());
    CHECK(eval("H^n", 2).is_zero());
  }
  SUBCASE("scalar arithmetic inside expressions") {
    CHECK(eval("1 + 2 * 3", 4).scalar_part() == BigRational(7));
    CHECK(eval("2 * 3^2", 4).scalar_part() == BigRational(18));
    CHECK(eval("1/2 * W^2", 2).top_evaluate() == BigRational(BigInt(3), BigInt(2)));
    CHECK(eval("n * H", 5).h_coeff() == BigRational(5));
    CHECK(eval("-L + L", 3).is_zero());
  }
  SUBCASE("affine exponents evaluate before powering") {
    CHECK(eval("W^(2*n-4)", 3).degree() == 2);
    CHECK(eval("W^(n-2+1)", 3).degree() == 2);
    CHECK(eval("c1^(n-n)", 3).scalar_part() == BigRational(1));
  }
  SUBCASE("the generators multiply by the ring relations") {
    CHECK(eval("L*L - (n-1)*L*H", 4).is_zero());
    CHECK(eval("L * H^(n-1)", 6).top_evaluate() == BigRational(1));
  }
}

TEST_CASE("evaluation errors") {
  SUBCASE("degree overflow") {
    CHECK_THROWS_WITH(eval("L^2 * H^2", 3), "degree exceeds dimension");
    CHECK_THROWS_AS(eval("W^(n+1)", 4), DomainError);
  }
  SUBCASE("negative exponent after substitution") {
    CHECK_THROWS_WITH(eval("W^(n-5)", 3), "negative exponent");
  }
  SUBCASE("positivity of the class parameters") {
    CHECK_THROWS_AS(eval("W^2", 2, 0, 1), DomainError);
    CHECK_THROWS_AS(eval("W^2", 2, 1, -1), DomainError);
    CHECK_NOTHROW(eval("c1^2", 2, 0, 0));  // W absent: no constraint
  }
  SUBCASE("inhomogeneous sums are rejected") {
    CHECK_THROWS_AS(eval("L + c2", 4), DomainError);
    CHECK(eval("H^n + c1", 3) == eval("c1", 3));  // zero class absorbs
  }
  SUBCASE("dimension precondition") {
    CHECK_THROWS_AS(eval("L", 1), DomainError);
  }
}

TEST_CASE("W detection") {
  CHECK(mentions_kahler_class(*parse_class_expr("c1 * W")));
  CHECK(mentions_kahler_class(*parse_class_expr("(L + W)^2")));
  CHECK_FALSE(mentions_kahler_class(*parse_class_expr("c1^2 * H")));
}

}  // TEST_SUITE
