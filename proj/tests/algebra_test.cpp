#include <catch2/catch_amalgamated.hpp>

#include "coring/algebra.hpp"
#include "coring/fixtures.hpp"
#include "coring/module.hpp"

#include <random>

using namespace coring;

namespace {

// Independent multiplication oracle for Q(√2) = Q[t]/(t²−2):
// (a + b t)(c + d t) = (ac + 2bd) + (ad + bc) t.
Mat sqrt2_product(const Mat& x, const Mat& y) {
  return Mat(2, 1,
             {x(0, 0) * y(0, 0) + 2 * x(1, 0) * y(1, 0), x(0, 0) * y(1, 0) + x(1, 0) * y(0, 0)});
}

}  // namespace

TEST_CASE("the scalars pass the algebra axioms", "[algebra]") {
  CHECK(check_algebra(scalar_algebra()).ok());
}

TEST_CASE("quadratic extension: axioms pass and products match the hand oracle", "[algebra]") {
  const Algebra a = fixtures::quadratic_algebra(2);
  CHECK(check_algebra(a).ok());

  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int trial = 0; trial < 16; ++trial) {
    const Mat x(2, 1, {coef(rng), coef(rng)});
    const Mat y(2, 1, {coef(rng), coef(rng)});
    CHECK(a.mul(x, y) == sqrt2_product(x, y));
  }
}

TEST_CASE("group algebra and dual numbers pass the axioms", "[algebra]") {
  CHECK(check_algebra(fixtures::quadratic_algebra(1)).ok());
  CHECK(check_algebra(fixtures::quadratic_algebra(0)).ok());
  CHECK(check_algebra(fixtures::matrix_algebra(2)).ok());
  CHECK(check_algebra(fixtures::matrix_algebra(3)).ok());
}

TEST_CASE("associativity failure is reported with the failing triple", "[algebra]") {
  // e0 e0 = e1, e1 e0 = e0, all other products zero:
  // (e0 e0) e0 = e1 e0 = e0   but   e0 (e0 e0) = e0 e1 = 0.
  Algebra bad;
  bad.dim = 2;
  bad.sc.assign(8, Rat(0));
  bad.c(0, 0, 1) = 1;
  bad.c(1, 0, 0) = 1;
  const AxiomReport report = check_algebra(bad);
  REQUIRE_FALSE(report.ok());
  const CheckItem* failure = report.first_failure();
  REQUIRE(failure != nullptr);
  CHECK(failure->law == "associativity");
  CHECK(failure->witness.find("e0") != std::string::npos);
}

TEST_CASE("declared units are verified", "[algebra]") {
  Algebra almost = fixtures::left_unit_only_algebra();
  CHECK(check_algebra(almost).ok());  // associative, no unit declared
  almost.unit = Mat(2, 1, {1, 0});    // `a` is only a left unit
  const AxiomReport report = check_algebra(almost);
  REQUIRE_FALSE(report.ok());
  CHECK(report.first_failure()->law == "right unit law");
}

TEST_CASE("zero-multiplication algebra is associative and non-unital", "[algebra]") {
  const Algebra z = fixtures::zero_mult_algebra(2);
  CHECK(check_algebra(z).ok());
  CHECK_FALSE(z.unital());
}

TEST_CASE("regular modules satisfy the module axioms", "[module]") {
  const Algebra a = fixtures::quadratic_algebra(2);
  CHECK(check_right_module(regular_right(a)).ok());
  CHECK(check_left_module(regular_left(a)).ok());
  CHECK(check_bimodule(regular_bimodule(a)).ok());

  const Algebra m2 = fixtures::matrix_algebra(2);
  CHECK(check_bimodule(regular_bimodule(m2)).ok());
}

TEST_CASE("free modules and direct sums inherit the axioms", "[module]") {
  const Algebra a = fixtures::quadratic_algebra(2);
  const Module free2 = free_right_module(a, 2);
  CHECK(free2.dim == 4);
  CHECK(check_right_module(free2).ok());

  const Module reg = regular_right(a);
  const Module sum = direct_sum(reg, reg);
  CHECK(sum.dim == 4);
  CHECK(check_right_module(sum).ok());
}

TEST_CASE("a broken action is caught with a witness pair", "[module]") {
  const Algebra a = fixtures::quadratic_algebra(2);
  Module broken = regular_right(a);
  broken.right_act[1] = Mat(2, 2, {0, 1, 0, 0});  // not the action of t
  const AxiomReport report = check_right_module(broken);
  REQUIRE_FALSE(report.ok());
  CHECK_FALSE(report.first_failure()->witness.empty());
}

TEST_CASE("restriction along an algebra inclusion is still a module", "[module]") {
  const Algebra a = fixtures::quadratic_algebra(2);
  const Algebra q = scalar_algebra();
  const Module restricted = restrict_right(regular_bimodule(a), q, fixtures::unit_inclusion(a));
  CHECK(restricted.right_alg == &q);
  CHECK(check_right_module(restricted).ok());
  CHECK(check_bimodule(restricted).ok());  // left A-action survives
}

TEST_CASE("the column module over a matrix algebra is a bimodule", "[module]") {
  const Algebra m2 = fixtures::matrix_algebra(2);
  const Algebra q = scalar_algebra();
  CHECK(check_bimodule(fixtures::column_module(m2, q, 2)).ok());
}
