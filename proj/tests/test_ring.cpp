#include <doctest.h>

#include <random>

#include "kahlercalc/errors.hpp"
#include "kahlercalc/intersection_ring.hpp"
#include "test_support.hpp"

using namespace kahlercalc;
using kahlercalc::testing::rand_rational;

namespace {

GradedClass rand_class(std::mt19937_64& rng, int dim, int degree) {
  if (degree == 0) return GradedClass::scalar(dim, rand_rational(rng, 50));
  return GradedClass::make(dim, degree, rand_rational(rng, 50),
                           rand_rational(rng, 50));
}

}  // namespace

TEST_SUITE("ring") {

TEST_CASE("monomial normal form") {
  SUBCASE("L^2 = (n-1) LH") {
    const GradedClass c = monomial_normal_form(2, 0, 3);
    CHECK(c.degree() == 2);
    CHECK(c.lh_coeff() == BigRational(2));
    CHECK(c.h_coeff() == BigRational(0));
  }
  SUBCASE("LH is already normal") {
    const GradedClass c = monomial_normal_form(1, 1, 3);
    CHECK(c.degree() == 2);
    CHECK(c.lh_coeff() == BigRational(1));
    CHECK(c.h_coeff() == BigRational(0));
  }
  SUBCASE("L^3 reduces twice") {
    const GradedClass c = monomial_normal_form(3, 0, 4);
    CHECK(c.degree() == 3);
    CHECK(c.lh_coeff() == BigRational(9));
  }
  SUBCASE("pure H powers") {
    const GradedClass c = monomial_normal_form(0, 2, 4);
    CHECK(c.lh_coeff() == BigRational(0));
    CHECK(c.h_coeff() == BigRational(1));
    CHECK(monomial_normal_form(0, 4, 4).is_zero());  // H^n = 0
  }
  SUBCASE("degree overflow") {
    CHECK_THROWS_WITH(monomial_normal_form(3, 1, 3), "degree exceeds dimension");
  }
  SUBCASE("idempotence on normal forms") {
    for (int n = 2; n <= 6; ++n) {
      for (int d = 1; d <= n; ++d) {
        const GradedClass lh = monomial_normal_form(1, d - 1, n);
        CHECK(lh.lh_coeff() == BigRational(1));
        CHECK(lh.h_coeff() == BigRational(0));
        if (d < n) {
          const GradedClass h = monomial_normal_form(0, d, n);
          CHECK(h.lh_coeff() == BigRational(0));
          CHECK(h.h_coeff() == BigRational(1));
        }
      }
    }
  }
}

TEST_CASE("multiplication") {
  const int n = 2;
  const GradedClass L = GradedClass::generator_L(n);
  const GradedClass H = GradedClass::generator_H(n);
  SUBCASE("(L+H)^2 with the top rewrite applied") {
    const GradedClass c = (L + H) * (L + H);
    CHECK(c.degree() == 2);
    CHECK(c.lh_coeff() == BigRational(3));  // L^2 + 2LH = 3LH at n=2
    CHECK(c.h_coeff() == BigRational(0));   // H^2 = H^n dies
  }
  SUBCASE("(2L+H)^2") {
    const GradedClass c1 = L.scaled(BigRational(2)) + H;
    const GradedClass c = c1 * c1;
    CHECK(c.lh_coeff() == BigRational(8));  // 4 L^2 + 4 LH = 8 LH at n=2
    CHECK(c.top_evaluate() == BigRational(8));
  }
  SUBCASE("unit") {
    const GradedClass x = GradedClass::make(3, 2, BigRational(5), BigRational(7));
    CHECK(x * GradedClass::one(3) == x);
    CHECK(GradedClass::one(3) * x == x);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(GradedClass::generator_L(2) * GradedClass::generator_L(3),
                    DomainError);
    CHECK_THROWS_WITH(L * L * L, "degree exceeds dimension");
  }
}

TEST_CASE("powers") {
  SUBCASE("(L+H)^3 at n=3") {
    const GradedClass w =
        GradedClass::generator_L(3) + GradedClass::generator_H(3);
    const GradedClass c = w.power(3);
    CHECK(c.lh_coeff() == BigRational(13));
    CHECK(c.h_coeff() == BigRational(0));
  }
  SUBCASE("H^n vanishes for all n") {
    for (int n = 2; n <= 8; ++n) {
      CHECK(GradedClass::generator_H(n).power(n).is_zero());
    }
  }
  SUBCASE("first power is the identity map") {
    const GradedClass x = GradedClass::make(4, 2, BigRational(3), BigRational(-1));
    CHECK(x.power(1) == x);
    CHECK(x.power(0) == GradedClass::one(4));
  }
  SUBCASE("degree overflow") {
    CHECK_THROWS_AS(GradedClass::generator_L(3).power(4), DomainError);
  }
}

TEST_CASE("top evaluation") {
  CHECK(GradedClass::make(2, 2, BigRational(3), BigRational(5)).top_evaluate() ==
        BigRational(3));
  CHECK(monomial_normal_form(3, 2, 5).top_evaluate() == BigRational(16));
  CHECK(GradedClass::zero(3, 3).top_evaluate() == BigRational(0));
  CHECK_THROWS_WITH(GradedClass::generator_L(3).top_evaluate(), "not a top class");
}

TEST_CASE("chern classes of the bundle") {
  SUBCASE("n = 2") {
    const auto [c1, c2] = chern_classes(2);
    CHECK(c1.degree() == 1);
    CHECK(c1.lh_coeff() == BigRational(2));
    CHECK(c1.h_coeff() == BigRational(1));
    CHECK(c2.degree() == 2);
    CHECK(c2.lh_coeff() == BigRational(4));
    CHECK(c2.h_coeff() == BigRational(-1));
    CHECK((c1 * c1).top_evaluate() == BigRational(8));
    CHECK(c2.top_evaluate() == BigRational(4));  // Euler number of the surface
  }
  SUBCASE("dimension precondition") {
    CHECK_THROWS_AS(chern_classes(1), DomainError);
  }
  SUBCASE("degree of the family grows like ((2n-1)^n - 1)/(n-1)") {
    for (int n = 2; n <= 15; ++n) {
      const auto [c1, c2] = chern_classes(n);
      const BigInt closed = (int_pow(BigInt(2 * n - 1), static_cast<unsigned>(n)) - 1) /
                            BigInt(n - 1);
      CHECK(c1.power(n).top_evaluate() == BigRational(closed));
    }
  }
}

TEST_CASE("ring properties on randomized classes") {
  std::mt19937_64 rng(20240902);
  std::uniform_int_distribution<int> dim_dist(2, 7);
  for (int i = 0; i < 200; ++i) {
    const int n = dim_dist(rng);
    std::uniform_int_distribution<int> deg(0, n);
    const int d1 = deg(rng);
    std::uniform_int_distribution<int> deg2(0, n - d1);
    const int d2 = deg2(rng);
    const GradedClass x = rand_class(rng, n, d1);
    const GradedClass y = rand_class(rng, n, d2);
    CHECK(x * y == y * x);
    CHECK((x * y).degree() == d1 + d2);
    std::uniform_int_distribution<int> deg3(0, n - d1 - d2);
    const GradedClass z = rand_class(rng, n, deg3(rng));
    CHECK((x * y) * z == x * (y * z));
  }
}

TEST_CASE("binomial expansion agrees with repeated products") {
  std::mt19937_64 rng(20240903);
  std::uniform_int_distribution<int> dim_dist(2, 8);
  for (int i = 0; i < 60; ++i) {
    const int n = dim_dist(rng);
    std::uniform_int_distribution<int> k_dist(0, n);
    const int k = k_dist(rng);
    const BigRational alpha = rand_rational(rng, 20);
    const BigRational beta = rand_rational(rng, 20);
    const GradedClass base = GradedClass::generator_L(n).scaled(alpha) +
                             GradedClass::generator_H(n).scaled(beta);
    const GradedClass lhs = base.power(k);
    GradedClass rhs = k == 0 ? GradedClass::scalar(n, BigRational(0))
                             : GradedClass::zero(n, k);
    for (int j = 0; j <= k; ++j) {
      const BigRational coeff = BigRational(binomial(static_cast<unsigned>(k),
                                                     static_cast<unsigned>(j))) *
                                alpha.pow(j) * beta.pow(k - j);
      rhs = rhs + monomial_normal_form(j, k - j, n).scaled(coeff);
    }
    CHECK(lhs == rhs);
  }
}

}  // TEST_SUITE
