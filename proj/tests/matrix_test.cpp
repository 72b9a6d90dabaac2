#include <catch2/catch_amalgamated.hpp>

#include "coring/matrix.hpp"

#include <random>

using namespace coring;

namespace {

// Deterministic small random matrices for the property checks.
Mat random_mat(std::mt19937& rng, long rows, long cols) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  Mat m(rows, cols);
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j) m(i, j) = Rat(num(rng), den(rng));
  return m;
}

}  // namespace

TEST_CASE("rational literals round-trip and stay reduced", "[rational]") {
  CHECK(rat_from_string("-3/2") == Rat(-3, 2));
  CHECK(rat_from_string("7") == Rat(7));
  CHECK(rat_from_string("4/6") == Rat(2, 3));   // reduced on construction
  CHECK(rat_from_string("3/-2") == Rat(-3, 2)); // denominator kept positive
  CHECK(rat_to_string(Rat(-3, 2)) == "-3/2");
  CHECK(rat_to_string(Rat(5)) == "5");
  CHECK(rat_to_string(Rat(0)) == "0");
  CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
  CHECK_THROWS_AS(rat_from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("x"), std::invalid_argument);
}

TEST_CASE("rref: identity is already reduced", "[rref]") {
  const auto r = rref(Mat::identity(3));
  CHECK(r.mat == Mat::identity(3));
  CHECK(r.pivots == std::vector<long>{0, 1, 2});
}

TEST_CASE("rref: rank-1 symmetric matrix", "[rref]") {
  const Mat m(2, 2, {1, 1, 1, 1});
  const auto r = rref(m);
  CHECK(r.mat == Mat(2, 2, {1, 1, 0, 0}));
  CHECK(r.pivots == std::vector<long>{0});
}

TEST_CASE("rref: hand elimination oracle", "[rref]") {
  // [[2,4],[1,3]]: r0 /= 2 -> [1,2]; r1 -= r0 -> [0,1]; r0 -= 2 r1 -> identity.
  const auto r = rref(Mat(2, 2, {2, 4, 1, 3}));
  CHECK(r.mat == Mat::identity(2));
  CHECK(r.pivots == std::vector<long>{0, 1});
}

TEST_CASE("kernel_basis: rank-nullity on the all-ones matrix", "[kernel]") {
  const Mat f(2, 2, {1, 1, 1, 1});
  const auto k = kernel_basis(f);
  REQUIRE(k.dim() == 1);
  CHECK((f * k.basis).is_zero());
  // spanning vector proportional to (1, -1)
  CHECK(k.basis(0, 0) == -k.basis(1, 0));
  CHECK(k.basis(0, 0) != 0);
}

TEST_CASE("kernel_basis: injective map has zero kernel", "[kernel]") {
  CHECK(kernel_basis(Mat::identity(4)).dim() == 0);
}

TEST_CASE("kernel_basis: 1x3 row has a plane kernel", "[kernel]") {
  const Mat f(1, 3, {1, 2, 3});
  const auto k = kernel_basis(f);
  REQUIRE(k.dim() == 2);
  CHECK((f * k.basis).is_zero());
  CHECK(rank(k.basis) == 2);
}

TEST_CASE("cokernel: no relations leaves the identity quotient", "[cokernel]") {
  const auto q = cokernel(Mat::zero(3, 0), 3);
  CHECK(q.dim() == 3);
  CHECK(q.proj == Mat::identity(3));
  CHECK(q.sect == Mat::identity(3));
}

TEST_CASE("cokernel: full column space collapses everything", "[cokernel]") {
  const auto q = cokernel(Mat::identity(3), 3);
  CHECK(q.dim() == 0);
}

TEST_CASE("cokernel: one relation in dimension 2", "[cokernel]") {
  const Mat rel(2, 1, {1, -1});
  const auto q = cokernel(rel, 2);
  REQUIRE(q.dim() == 1);
  CHECK((q.proj * rel).is_zero());
  CHECK(q.proj * q.sect == Mat::identity(1));
  // both coordinates map to the same class
  CHECK(q.proj(0, 0) == q.proj(0, 1));
}

TEST_CASE("kronecker: identities, zero, scalar action", "[kron]") {
  CHECK(kron(Mat::identity(2), Mat::identity(3)) == Mat::identity(6));
  CHECK(kron(Mat(2, 2, {1, 2, 3, 4}), Mat::zero(2, 2)).is_zero());
  const Mat s(1, 1, {2});
  const Mat swap(2, 2, {0, 1, 1, 0});
  CHECK(kron(s, swap) == Mat(2, 2, {0, 2, 2, 0}));
}

TEST_CASE("is_isomorphism: identity, rank-deficient, non-square", "[iso]") {
  CHECK(is_isomorphism(Mat::identity(5)));
  CHECK_FALSE(is_isomorphism(Mat(2, 2, {1, 1, 1, 1})));
  CHECK_FALSE(is_isomorphism(Mat(2, 3, {1, 0, 0, 0, 1, 0})));
}

TEST_CASE("solve: consistent and inconsistent systems", "[solve]") {
  const Mat a(2, 2, {1, 2, 3, 4});
  const Mat b(2, 1, {5, 6});
  const auto x = solve(a, b);
  REQUIRE(x.has_value());
  CHECK(a * *x == b);

  const Mat sing(2, 2, {1, 1, 1, 1});
  CHECK_FALSE(solve(sing, Mat(2, 1, {0, 1})).has_value());
  CHECK(solve(sing, Mat(2, 1, {2, 2})).has_value());
}

TEST_CASE("inverse: round-trips on an invertible matrix", "[solve]") {
  const Mat m(3, 3, {2, 0, 1, 0, Rat(1, 2), 0, 1, 0, 1});
  CHECK(inverse(m) * m == Mat::identity(3));
}

TEST_CASE("property: rank-nullity holds exactly", "[property]") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Mat f = random_mat(rng, 3 + trial % 3, 2 + trial % 4);
    CHECK(kernel_basis(f).dim() + rank(f) == f.cols());
  }
}

TEST_CASE("property: cokernel sections split the projection", "[property]") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const long n = 3 + trial % 3;
    const Mat rel = random_mat(rng, n, trial % 4);
    const auto q = cokernel(rel, n);
    CHECK(q.proj * q.sect == Mat::identity(q.dim()));
    CHECK((q.proj * rel).is_zero());
    CHECK(q.dim() == n - rank(rel));
  }
}

TEST_CASE("property: kronecker is functorial", "[property]") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const Mat f = random_mat(rng, 2, 3), fp = random_mat(rng, 3, 2);
    const Mat g = random_mat(rng, 3, 2), gp = random_mat(rng, 2, 3);
    CHECK(kron(f * fp, g * gp) == kron(f, g) * kron(fp, gp));
  }
}
