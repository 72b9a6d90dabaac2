// The comatrix coring of a finitely generated projective bimodule, checked
// entry-for-entry against hand-written coalgebras and against the canonical
// coring of a ring extension, plus the exact correspondence between right
// coactions, coring morphisms out of the comatrix coring, and left coactions
// on the dual.

#include <catch2/catch_amalgamated.hpp>

#include "coring/comatrix.hpp"
#include "coring/fixtures.hpp"

using namespace coring;

TEST_CASE("the comatrix coring of the plane over Q is the 2x2 matrix coalgebra", "[comatrix]") {
  const Algebra q = scalar_algebra();
  const Module plane = fixtures::scalar_bimodule(q, 2);
  const ComatrixData cm = comatrix_coring(q, q, plane);
  CHECK(cm.dual.mod.dim == 2);
  CHECK(cm.coring.c.dim == 4);
  CHECK(check_coring(cm.coring).ok());

  // entry-for-entry match with the hand-written coalgebra under the
  // identification φ_p ⊗ u_j ↦ E_pj (both sides use lexicographic bases)
  const Coring oracle = fixtures::matrix_coalgebra(q, 2);
  CHECK(cm.coring.delta == oracle.delta);
  CHECK(cm.coring.epsilon == oracle.epsilon);
}

TEST_CASE("the tautological coaction over the comatrix coring of the plane", "[comatrix]") {
  const Algebra q = scalar_algebra();
  const Module plane = fixtures::scalar_bimodule(q, 2);
  const ComatrixData cm = comatrix_coring(q, q, plane);

  const Comodule taut = coaction_from_can(cm, cm.coring, Mat::identity(4));
  CHECK(check_comodule(taut).ok());
  CHECK(canonical_map(cm, taut) == Mat::identity(4));

  // it is the column comodule of the matrix coalgebra
  const Coring oracle = fixtures::matrix_coalgebra(q, 2);
  const Comodule cols = fixtures::column_comodule(oracle, q, 2);
  CHECK(taut.rho == cols.rho);

  // left coaction on the dual: α(φ_p) = Σ_i E_pi ⊗ φ_i
  const LeftComodule lc = left_coaction_on_dual(cm, cm.coring, Mat::identity(4));
  CHECK(check_left_comodule(lc).ok());
  Mat expected(4 * 2, 2);
  for (long p = 0; p < 2; ++p)
    for (long i = 0; i < 2; ++i) expected((p * 2 + i) * 2 + i, p) = 1;
  CHECK(lc.alpha == expected);
}

TEST_CASE("the comatrix coring of a field extension is its canonical coring", "[comatrix]") {
  const Algebra a = fixtures::quadratic_algebra(2);  // Q(sqrt 2)
  const Algebra b = scalar_algebra();
  const Module sigma = restrict_left(regular_bimodule(a), b, fixtures::unit_inclusion(a));
  const ComatrixData cm = comatrix_coring(b, a, sigma);
  CHECK(cm.coring.c.dim == 4);
  CHECK(check_coring(cm.coring).ok());

  const auto sw = sweedler_coring(a, b, fixtures::unit_inclusion(a));

  // J : φ ⊗ u ↦ φ(1) ⊗ u is an isomorphism of corings onto A ⊗_Q A
  Mat ev1(a.dim, cm.dual.mod.dim);
  for (long p = 0; p < cm.dual.mod.dim; ++p) {
    const Mat v = cm.dual.homs[static_cast<size_t>(p)] * *a.unit;
    for (long r = 0; r < a.dim; ++r) ev1(r, p) = v(r, 0);
  }
  const Mat j = sw.aba.q.proj * (kron(ev1, Mat::identity(sigma.dim)) * cm.carrier_space.q.sect);
  CHECK(is_isomorphism(j));
  CHECK(check_coring_morphism(j, cm.coring, sw.coring).ok());

  SECTION("the canonical map of the unit coaction is exactly J, hence bijective") {
    const Comodule on_a = coaction_from_grouplike(sw.coring, sw.unit_class);
    const Comodule com = make_comodule(sw.coring, sigma, on_a.rho);
    REQUIRE(check_comodule(com).ok());

    const Mat can = canonical_map(cm, com);
    CHECK(can == j);
    CHECK(check_coring_morphism(can, cm.coring, sw.coring).ok());
    CHECK(is_isomorphism(can));

    // the coaction/morphism correspondence round-trips exactly
    const Comodule back = coaction_from_can(cm, sw.coring, can);
    CHECK(back.rho == com.rho);
    CHECK(canonical_map(cm, back) == can);

    const LeftComodule lc = left_coaction_on_dual(cm, sw.coring, can);
    CHECK(check_left_comodule(lc).ok());
  }
}

TEST_CASE("a non-surjective canonical map: one grouplike line of the two-grouplike coalgebra",
          "[comatrix][galois]") {
  const Algebra q = scalar_algebra();
  const Coring c = fixtures::grouplike_coalgebra(q);
  const Module line = fixtures::scalar_bimodule(q, 1);
  Mat rho_e(2, 1);
  rho_e(0, 0) = 1;  // x maps to x tensor e
  const Comodule xe = make_comodule(c, line, rho_e);
  REQUIRE(check_comodule(xe).ok());

  const ComatrixData cm = comatrix_coring(q, q, line);
  CHECK(cm.coring.c.dim == 1);
  const Mat can = canonical_map(cm, xe);
  CHECK(check_coring_morphism(can, cm.coring, c).ok());
  CHECK(rank(can) == 1);  // the image only sees the grouplike e
  CHECK_FALSE(is_isomorphism(can));

  // the correspondence still round-trips on the nose
  const Comodule back = coaction_from_can(cm, c, can);
  CHECK(back.rho == xe.rho);
  CHECK(canonical_map(cm, back) == can);
}

TEST_CASE("the comatrix coring of the column module over a matrix algebra is trivial",
          "[comatrix]") {
  const Algebra q = scalar_algebra();
  const Algebra m2 = fixtures::matrix_algebra(2);
  const Module cols = fixtures::column_module(m2, q, 2);
  const ComatrixData cm = comatrix_coring(m2, q, cols);
  CHECK(cm.coring.c.dim == 1);  // Σ* ⊗_{M2} Σ collapses to Q
  CHECK(cm.coring.delta == Mat::identity(1));
  CHECK(cm.coring.epsilon == Mat::identity(1));
  CHECK(check_coring(cm.coring).ok());
}

TEST_CASE("the comatrix coring over the dual numbers with a non-flat bimodule", "[comatrix]") {
  const Algebra q = scalar_algebra();
  const Algebra b = fixtures::quadratic_algebra(0);  // Q[t]/(t^2)
  const Module sigma = fixtures::residue_plus_regular(b, q);
  const ComatrixData cm = comatrix_coring(b, q, sigma);

  // quotient basis of Σ* ⊗_B Σ: classes of
  //   s*⊗s, s*⊗1, t*⊗s, t*⊗1, t*⊗t   (and 1*⊗1 ≡ t*⊗t)
  REQUIRE(cm.coring.c.dim == 5);
  CHECK(check_coring(cm.coring).ok());

  const Comodule taut = coaction_from_can(cm, cm.coring, Mat::identity(5));
  CHECK(check_comodule(taut).ok());
  CHECK(canonical_map(cm, taut) == Mat::identity(5));

  // ρ(s) = s⊗[s*⊗s] + t⊗[t*⊗s], ρ(1) = s⊗[s*⊗1] + 1⊗[t*⊗t] + t⊗[t*⊗1],
  // ρ(t) = t⊗[t*⊗t]
  Mat rho(15, 3);
  rho(0 * 5 + 0, 0) = 1;
  rho(2 * 5 + 2, 0) = 1;
  rho(0 * 5 + 1, 1) = 1;
  rho(1 * 5 + 4, 1) = 1;
  rho(2 * 5 + 3, 1) = 1;
  rho(2 * 5 + 4, 2) = 1;
  CHECK(taut.rho == rho);

  // α(s*) = [s*⊗s]⊗s* + [s*⊗1]⊗1*, α(1*) = [t*⊗t]⊗1*,
  // α(t*) = [t*⊗s]⊗s* + [t*⊗1]⊗1* + [t*⊗t]⊗t*
  const LeftComodule lc = left_coaction_on_dual(cm, cm.coring, Mat::identity(5));
  CHECK(check_left_comodule(lc).ok());
  Mat alpha(15, 3);
  alpha(0 * 3 + 0, 0) = 1;
  alpha(1 * 3 + 1, 0) = 1;
  alpha(4 * 3 + 1, 1) = 1;
  alpha(2 * 3 + 0, 2) = 1;
  alpha(3 * 3 + 1, 2) = 1;
  alpha(4 * 3 + 2, 2) = 1;
  CHECK(lc.alpha == alpha);
}
