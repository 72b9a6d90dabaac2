// Coring and comodule law checks on small exact fixtures: the trivial coring,
// canonical corings of subalgebra inclusions, hand-written coalgebras, induced
// coactions of grouplikes, coinvariant subalgebras, and comodule endomorphism
// rings.  Sabotaged structures must surface as failing report items with
// witnesses, never as aborts.

#include <catch2/catch_amalgamated.hpp>

#include "coring/coring.hpp"
#include "coring/fixtures.hpp"

#include <string>
#include <vector>

using namespace coring;

namespace {

const CheckItem* find_item(const AxiomReport& r, const std::string& law) {
  for (const auto& item : r.items)
    if (item.law == law) return &item;
  return nullptr;
}

std::string failure_text(const AxiomReport& r) {
  const CheckItem* f = r.first_failure();
  return f ? f->law + " | " + f->witness : "all laws hold";
}

}  // namespace

TEST_CASE("the trivial coring on a quadratic field satisfies all coring laws", "[coring]") {
  const Algebra a = fixtures::quadratic_algebra(2);  // Q(sqrt 2)
  const Coring triv = fixtures::trivial_coring(a);
  CHECK(triv.c.dim == a.dim);
  CHECK(triv.cc.dim() == a.dim);  // C tensor_A C collapses back to A
  const AxiomReport report = check_coring(triv);
  INFO(failure_text(report));
  CHECK(report.ok());
}

TEST_CASE("the canonical coring of Q inside Q(sqrt 2) satisfies all coring laws", "[coring]") {
  const Algebra a = fixtures::quadratic_algebra(2);
  const Algebra b = scalar_algebra();
  const auto sw = sweedler_coring(a, b, fixtures::unit_inclusion(a));
  CHECK(sw.coring.c.dim == 4);  // A tensor_Q A
  const AxiomReport report = check_coring(sw.coring);
  INFO(failure_text(report));
  CHECK(report.ok());
}

TEST_CASE("the canonical coring of a group algebra over Q satisfies all coring laws",
          "[coring]") {
  const Algebra a = fixtures::quadratic_algebra(1);  // Q[t]/(t^2 - 1)
  const Algebra b = scalar_algebra();
  const auto sw = sweedler_coring(a, b, fixtures::unit_inclusion(a));
  CHECK(sw.coring.c.dim == 4);
  const AxiomReport report = check_coring(sw.coring);
  INFO(failure_text(report));
  CHECK(report.ok());
}

TEST_CASE("the canonical coring of the identity inclusion is the trivial coring", "[coring]") {
  const Algebra a = fixtures::quadratic_algebra(2);
  const auto sw = sweedler_coring(a, a, Mat::identity(a.dim));
  CHECK(sw.coring.c.dim == a.dim);  // A tensor_A A collapses to A
  const AxiomReport report = check_coring(sw.coring);
  INFO(failure_text(report));
  CHECK(report.ok());

  // the counit A tensor_A A → A is bijective and transports the structure
  // maps onto the trivial coring, so the two are isomorphic as corings
  const Coring triv = fixtures::trivial_coring(a);
  const Mat phi = sw.coring.epsilon;
  CHECK(is_isomorphism(phi));
  const Mat phi_phi = triv.cc.q.proj * (kron(phi, phi) * sw.coring.cc.q.sect);
  CHECK(triv.delta * phi == phi_phi * sw.coring.delta);
  CHECK(triv.epsilon * phi == sw.coring.epsilon);
  CHECK(sw.coring.epsilon * sw.unit_class.g == *a.unit);
}

TEST_CASE("a coalgebra spanned by two grouplikes satisfies all coring laws", "[coring]") {
  const Algebra q = scalar_algebra();
  const Coring c = fixtures::grouplike_coalgebra(q);
  CHECK(c.c.dim == 2);
  CHECK(c.cc.dim() == 4);  // over the scalars nothing collapses
  const AxiomReport report = check_coring(c);
  INFO(failure_text(report));
  CHECK(report.ok());
}

TEST_CASE("the 2x2 matrix coalgebra satisfies all coring laws", "[coring]") {
  const Algebra q = scalar_algebra();
  const Coring c = fixtures::matrix_coalgebra(q, 2);
  CHECK(c.c.dim == 4);
  const AxiomReport report = check_coring(c);
  INFO(failure_text(report));
  CHECK(report.ok());
}

TEST_CASE("zeroing the counit fails exactly the counit laws, with witnesses", "[coring]") {
  const Algebra a = fixtures::quadratic_algebra(2);
  const Algebra b = scalar_algebra();
  const auto sw = sweedler_coring(a, b, fixtures::unit_inclusion(a));

  Coring sabotaged = make_coring(a, sw.coring.c, sw.coring.delta, Mat(a.dim, sw.coring.c.dim));
  const AxiomReport report = check_coring(sabotaged);
  CHECK_FALSE(report.ok());

  const CheckItem* left = find_item(report, "left counit law");
  const CheckItem* right = find_item(report, "right counit law");
  REQUIRE(left != nullptr);
  REQUIRE(right != nullptr);
  CHECK_FALSE(left->ok);
  CHECK_FALSE(right->ok);
  CHECK_FALSE(left->witness.empty());

  // everything else still holds: the zero map is a bimodule map and the
  // comultiplication was untouched
  for (const auto& item : report.items)
    if (item.law != "left counit law" && item.law != "right counit law") {
      INFO(item.law);
      CHECK(item.ok);
    }
}

TEST_CASE("doubling the comultiplication keeps coassociativity but breaks the counit laws",
          "[coring]") {
  const Algebra q = scalar_algebra();
  const Coring good = fixtures::grouplike_coalgebra(q);
  const Coring sabotaged = make_coring(q, good.c, Rat(2) * good.delta, good.epsilon);
  const AxiomReport report = check_coring(sabotaged);
  // (2D tensor C)(2D) = (C tensor 2D)(2D): the defect is invisible to
  // coassociativity and only the counit laws can catch it
  CHECK(find_item(report, "comultiplication is coassociative")->ok);
  CHECK_FALSE(find_item(report, "left counit law")->ok);
  CHECK_FALSE(find_item(report, "right counit law")->ok);
}

TEST_CASE("the cofree comodule over a canonical coring satisfies the comodule laws",
          "[comodule]") {
  const Algebra a = fixtures::quadratic_algebra(2);
  const Algebra b = scalar_algebra();
  const auto sw = sweedler_coring(a, b, fixtures::unit_inclusion(a));
  const Comodule cofree = cofree_comodule(sw.coring);
  const AxiomReport report = check_comodule(cofree);
  INFO(failure_text(report));
  CHECK(report.ok());
}

TEST_CASE("one-dimensional comodules over the two-grouplike coalgebra", "[comodule]") {
  const Algebra q = scalar_algebra();
  const Coring c = fixtures::grouplike_coalgebra(q);

  Module line;
  line.dim = 1;
  line.left_alg = &q;
  line.right_alg = &q;
  line.left_act = {Mat::identity(1)};
  line.right_act = {Mat::identity(1)};

  Mat rho_e(2, 1), rho_sigma(2, 1);
  rho_e(0, 0) = 1;      // x maps to x tensor e
  rho_sigma(1, 0) = 1;  // x maps to x tensor sigma
  const Comodule xe = make_comodule(c, line, rho_e);
  const Comodule xs = make_comodule(c, line, rho_sigma);

  CHECK(check_comodule(xe).ok());
  CHECK(check_comodule(xs).ok());

  SECTION("the zero coaction fails exactly the counit law") {
    const Comodule bad = make_comodule(c, line, Mat(2, 1));
    const AxiomReport report = check_comodule(bad);
    CHECK_FALSE(report.ok());
    CHECK(find_item(report, "coaction is right A-linear")->ok);
    CHECK(find_item(report, "coaction is coassociative")->ok);
    CHECK_FALSE(find_item(report, "coaction counit law")->ok);
  }

  SECTION("comodule maps must intertwine the coactions") {
    const Mat id = Mat::identity(1);
    const Mat zero(1, 1);
    CHECK(check_comodule_map(id, xe, xe));
    CHECK(check_comodule_map(zero, xe, xs));
    CHECK_FALSE(check_comodule_map(id, xe, xs));  // e and sigma coactions differ
  }

  SECTION("hom-spaces between the two lines") {
    CHECK(comodule_hom_space(xe, xe).dim() == 1);
    CHECK(comodule_hom_space(xe, xs).dim() == 0);
    CHECK(comodule_hom_space(xs, xe).dim() == 0);
  }
}

TEST_CASE("the column comodule over the matrix coalgebra satisfies the comodule laws",
          "[comodule]") {
  const Algebra q = scalar_algebra();
  const Coring c = fixtures::matrix_coalgebra(q, 2);
  const Comodule cols = fixtures::column_comodule(c, q, 2);
  const AxiomReport report = check_comodule(cols);
  INFO(failure_text(report));
  CHECK(report.ok());
  CHECK(endomorphism_ring(cols).homs.dim() == 1);  // the columns are simple
}

TEST_CASE("grouplike verification accepts exactly the grouplike vectors", "[grouplike]") {
  const Algebra q = scalar_algebra();
  const Coring c = fixtures::grouplike_coalgebra(q);

  Mat e(2, 1), sigma(2, 1), sum(2, 1);
  e(0, 0) = 1;
  sigma(1, 0) = 1;
  sum(0, 0) = 1;
  sum(1, 0) = 1;
  CHECK(is_grouplike(c, e));
  CHECK(is_grouplike(c, sigma));
  CHECK_FALSE(is_grouplike(c, sum));        // counit gives 2, not 1
  CHECK_FALSE(is_grouplike(c, Mat(2, 1)));  // zero fails both conditions

  const auto found = grouplikes(c, {e, sigma, sum, Mat(2, 1)});
  CHECK(found.size() == 2);

  SECTION("the unit class of a canonical coring is grouplike") {
    const Algebra a = fixtures::quadratic_algebra(2);
    const Algebra b = scalar_algebra();
    const auto sw = sweedler_coring(a, b, fixtures::unit_inclusion(a));
    CHECK(is_grouplike(sw.coring, sw.unit_class.g));
  }

  SECTION("no matrix unit of the matrix coalgebra is grouplike") {
    const Coring m2 = fixtures::matrix_coalgebra(q, 2);
    std::vector<Mat> units;
    for (long i = 0; i < 4; ++i) {
      Mat u(4, 1);
      u(i, 0) = 1;
      units.push_back(std::move(u));
    }
    CHECK(grouplikes(m2, units).empty());
  }
}

TEST_CASE("the coaction induced by the unit of the trivial coring is the comultiplication",
          "[grouplike]") {
  const Algebra a = fixtures::quadratic_algebra(2);
  const Coring triv = fixtures::trivial_coring(a);
  REQUIRE(is_grouplike(triv, *a.unit));
  const Comodule induced = coaction_from_grouplike(triv, Grouplike{*a.unit});
  CHECK(check_comodule(induced).ok());
  // on the trivial coring, rho_1(a) = 1 tensor a is exactly Delta
  CHECK(induced.rho == triv.delta);
}

TEST_CASE("coinvariants of the canonical coring recover the base subalgebra", "[coinvariants]") {
  const Algebra a = fixtures::quadratic_algebra(2);
  const Algebra b = scalar_algebra();
  const auto sw = sweedler_coring(a, b, fixtures::unit_inclusion(a));
  const Coinvariants d = coinvariants(sw.coring, sw.unit_class);
  // { a : a tensor 1 = 1 tensor a } inside Q(sqrt 2) tensor_Q Q(sqrt 2) is Q
  CHECK(d.inclusion.dim() == 1);
  CHECK(contained_in_span(d.inclusion.basis, *a.unit));
  CHECK(d.algebra.unital());
  const AxiomReport report = check_algebra(d.algebra);
  INFO(failure_text(report));
  CHECK(report.ok());
}

TEST_CASE("coinvariants of the trivial coring are the whole algebra", "[coinvariants]") {
  const Algebra a = fixtures::quadratic_algebra(2);
  const Coring triv = fixtures::trivial_coring(a);
  const Coinvariants d = coinvariants(triv, Grouplike{*a.unit});
  // a.1 = 1.a always: every element is coinvariant, and the induced structure
  // constants agree with those of A itself
  CHECK(d.inclusion.dim() == a.dim);
  CHECK(d.algebra.sc == a.sc);
}

TEST_CASE("coinvariants of a grouplike line in the two-grouplike coalgebra", "[coinvariants]") {
  const Algebra q = scalar_algebra();
  const Coring c = fixtures::grouplike_coalgebra(q);
  Mat e(2, 1);
  e(0, 0) = 1;
  const Coinvariants d = coinvariants(c, Grouplike{e});
  CHECK(d.inclusion.dim() == 1);  // all of Q
}

TEST_CASE("the endomorphism ring of the induced comodule recovers the coinvariants",
          "[endomorphisms]") {
  const Algebra a = fixtures::quadratic_algebra(2);
  const Algebra b = scalar_algebra();
  const auto sw = sweedler_coring(a, b, fixtures::unit_inclusion(a));

  const Comodule induced = coaction_from_grouplike(sw.coring, sw.unit_class);
  REQUIRE(check_comodule(induced).ok());

  const EndomorphismRing endo = endomorphism_ring(induced);
  const Coinvariants d = coinvariants(sw.coring, sw.unit_class);
  REQUIRE(endo.homs.dim() == d.inclusion.dim());

  // evaluation at 1 identifies End(A) with the coinvariants: it intertwines
  // composition with multiplication and matches the subalgebra elementwise
  std::vector<Mat> images;
  Mat image_span(a.dim, endo.homs.dim());
  for (long i = 0; i < endo.homs.dim(); ++i) {
    images.push_back(endo.homs.basis[static_cast<size_t>(i)] * *a.unit);
    for (long r = 0; r < a.dim; ++r) image_span(r, i) = images.back()(r, 0);
  }
  CHECK(rank(image_span) == d.inclusion.dim());
  CHECK(contained_in_span(d.inclusion.basis, image_span));
  CHECK(contained_in_span(image_span, d.inclusion.basis));

  for (long p = 0; p < endo.homs.dim(); ++p)
    for (long q = 0; q < endo.homs.dim(); ++q) {
      Mat expected(a.dim, 1);
      for (long k = 0; k < endo.homs.dim(); ++k)
        if (endo.ring.c(p, q, k) != 0)
          expected = expected + endo.ring.c(p, q, k) * images[static_cast<size_t>(k)];
      // (f compose g)(1) = f(1) g(1) because every endomorphism is left
      // multiplication by its value at 1
      CHECK(a.mul(images[static_cast<size_t>(p)], images[static_cast<size_t>(q)]) == expected);
    }
}

TEST_CASE("the endomorphism ring of the trivial cofree comodule has the full dimension",
          "[endomorphisms]") {
  const Algebra a = fixtures::quadratic_algebra(2);
  const Coring triv = fixtures::trivial_coring(a);
  const Comodule cofree = cofree_comodule(triv);
  const EndomorphismRing endo = endomorphism_ring(cofree);
  CHECK(endo.homs.dim() == a.dim);  // Hom over the trivial coring is Hom_A(A, A)
  CHECK(endo.ring.unital());
  const AxiomReport report = check_algebra(endo.ring);
  INFO(failure_text(report));
  CHECK(report.ok());

  SECTION("the carrier becomes a module over its endomorphism ring") {
    const Module upgraded = with_endomorphism_action(cofree, endo, endo.ring);
    const AxiomReport mod_report = check_bimodule(upgraded);
    INFO(failure_text(mod_report));
    CHECK(mod_report.ok());
  }
}
