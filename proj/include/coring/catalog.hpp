#pragma once

// The built-in fixture catalog.  Each builder assembles a resolved object
// graph in canonical form; the shipped fixture files are exactly the
// canonical serializations of these sets, and a test regenerates them to
// guard against drift.
//
//   trivial_coring          the trivial coring over Q(sqrt 2), cofree comodule
//   field_extension         the canonical coring of Q in Q(sqrt 2), grouplike 1 (x) 1
//   group_coalgebra         the two-grouplike coalgebra over Q and one grouplike line
//   group_coalgebra_broken  the same with a zeroed coaction: one axiom warning
//   matrix_coalgebra        the 2x2 matrix coalgebra as comatrix coring of the plane
//   nonflat_comatrix        a bijective canonical map over the dual numbers whose
//                           bimodule is not flat, with the grouplike line witnessing
//                           the equalizer-preservation failure
//   nonunital_ring          a non-unital algebra: loads and checks without a unit

#include "coring/comatrix.hpp"
#include "coring/fixtures.hpp"
#include "coring/json_io.hpp"

#include <string>
#include <vector>

namespace coring::catalog {

inline io::FixtureSet trivial_coring() {
  io::FixtureSet f;
  f.name = "trivial_coring";
  f.algebras.emplace("A", fixtures::quadratic_algebra(2));
  const Algebra& a = f.algebras.at("A");
  const Coring triv = fixtures::trivial_coring(a);
  f.modules.emplace("A_bimodule", triv.c);
  f.bimodule_names.insert("A_bimodule");
  f.corings.emplace("trivial", triv);
  f.coring_refs["trivial"] = {"A", "A_bimodule"};
  const Coring& stored = f.corings.at("trivial");
  f.comodules.emplace("cofree", make_comodule(stored, stored.c, stored.delta));
  f.comodule_refs["cofree"] = {"trivial", "A_bimodule"};
  f.grouplikes["unit"] = {"trivial", *a.unit};
  f.morphisms["identity"] = {"algebras", "A", "A", Mat::identity(a.dim)};
  return f;
}

inline io::FixtureSet field_extension() {
  io::FixtureSet f;
  f.name = "field_extension";
  f.algebras.emplace("A", fixtures::quadratic_algebra(2));
  f.algebras.emplace("B", scalar_algebra());
  const Algebra& a = f.algebras.at("A");
  const Algebra& b = f.algebras.at("B");
  const Mat incl = fixtures::unit_inclusion(a);
  f.morphisms["inclusion"] = {"algebras", "B", "A", incl};

  f.modules.emplace("Sigma", restrict_left(regular_bimodule(a), b, incl));
  f.bimodule_names.insert("Sigma");
  const auto sw = sweedler_coring(a, b, incl);
  f.modules.emplace("sweedler_carrier", sw.coring.c);
  f.bimodule_names.insert("sweedler_carrier");
  f.corings.emplace("sweedler", sw.coring);
  f.coring_refs["sweedler"] = {"A", "sweedler_carrier"};
  const Coring& stored = f.corings.at("sweedler");
  f.comodules.emplace(
      "sigma_rho",
      make_comodule(stored, f.modules.at("Sigma"),
                    coaction_from_grouplike(stored, sw.unit_class).rho));
  f.comodule_refs["sigma_rho"] = {"sweedler", "Sigma"};
  f.grouplikes["g"] = {"sweedler", sw.unit_class.g};

  f.modules.emplace("B_regular", regular_right(b));
  f.modules.emplace("B_square", free_right_module(b, 2));
  Mat embed(2, 1);
  embed(0, 0) = 1;
  f.morphisms["identity_B"] = {"modules", "B_regular", "B_regular", Mat::identity(1)};
  f.morphisms["embedding"] = {"modules", "B_regular", "B_square", embed};
  return f;
}

inline io::FixtureSet group_coalgebra(bool broken) {
  io::FixtureSet f;
  f.name = broken ? "group_coalgebra_broken" : "group_coalgebra";
  f.algebras.emplace("B", scalar_algebra());
  const Algebra& q = f.algebras.at("B");
  const Coring c = fixtures::grouplike_coalgebra(q);
  f.modules.emplace("coalgebra_carrier", c.c);
  f.bimodule_names.insert("coalgebra_carrier");
  f.modules.emplace("line", fixtures::scalar_bimodule(q, 1));
  f.bimodule_names.insert("line");
  f.corings.emplace("ztwo", c);
  f.coring_refs["ztwo"] = {"B", "coalgebra_carrier"};
  const Coring& stored = f.corings.at("ztwo");

  Mat rho_e(2, 1);
  if (!broken) rho_e(0, 0) = 1;  // the zeroed variant breaks the counit law
  f.comodules.emplace("x_e", make_comodule(stored, f.modules.at("line"), rho_e));
  f.comodule_refs["x_e"] = {"ztwo", "line"};
  if (!broken) {
    Mat e(2, 1), s(2, 1);
    e(0, 0) = 1;
    s(1, 0) = 1;
    f.grouplikes["e"] = {"ztwo", e};
    f.grouplikes["s"] = {"ztwo", s};
  }
  f.modules.emplace("B_regular", regular_right(q));
  return f;
}

inline io::FixtureSet matrix_coalgebra() {
  io::FixtureSet f;
  f.name = "matrix_coalgebra";
  f.algebras.emplace("B", scalar_algebra());
  const Algebra& q = f.algebras.at("B");
  const Coring c = fixtures::matrix_coalgebra(q, 2);
  f.modules.emplace("coalgebra_carrier", c.c);
  f.bimodule_names.insert("coalgebra_carrier");
  f.modules.emplace("plane", fixtures::scalar_bimodule(q, 2));
  f.bimodule_names.insert("plane");
  f.corings.emplace("matrix", c);
  f.coring_refs["matrix"] = {"B", "coalgebra_carrier"};
  const Coring& stored = f.corings.at("matrix");
  f.comodules.emplace("columns", make_comodule(stored, f.modules.at("plane"),
                                               fixtures::column_comodule(stored, q, 2).rho));
  f.comodule_refs["columns"] = {"matrix", "plane"};

  f.modules.emplace("B_regular", regular_right(q));
  f.modules.emplace("B_square", free_right_module(q, 2));
  Mat swap(2, 2);
  swap(0, 1) = 1;
  swap(1, 0) = 1;
  f.morphisms["swap"] = {"modules", "B_square", "B_square", swap};
  return f;
}

inline io::FixtureSet nonflat_comatrix() {
  io::FixtureSet f;
  f.name = "nonflat_comatrix";
  f.algebras.emplace("B", fixtures::quadratic_algebra(0));  // the dual numbers
  f.algebras.emplace("Q", scalar_algebra());
  const Algebra& b = f.algebras.at("B");
  const Algebra& q = f.algebras.at("Q");
  f.modules.emplace("sigma", fixtures::residue_plus_regular(b, q));
  f.bimodule_names.insert("sigma");
  f.modules.emplace("line", fixtures::scalar_bimodule(q, 1));
  f.bimodule_names.insert("line");

  const ComatrixData cm = comatrix_coring(b, q, f.modules.at("sigma"));
  f.modules.emplace("comatrix_carrier", cm.coring.c);
  f.bimodule_names.insert("comatrix_carrier");
  f.corings.emplace("comatrix", cm.coring);
  f.coring_refs["comatrix"] = {"Q", "comatrix_carrier"};
  const Coring& stored = f.corings.at("comatrix");

  const Comodule taut = coaction_from_can(cm, cm.coring, Mat::identity(5));
  f.comodules.emplace("taut", make_comodule(stored, f.modules.at("sigma"), taut.rho));
  f.comodule_refs["taut"] = {"comatrix", "sigma"};
  Mat rho(5, 1);
  rho(0, 0) = 1;
  f.comodules.emplace("grouplike_line", make_comodule(stored, f.modules.at("line"), rho));
  f.comodule_refs["grouplike_line"] = {"comatrix", "line"};
  Mat g(5, 1);
  g(0, 0) = 1;
  f.grouplikes["g"] = {"comatrix", g};

  f.modules.emplace("B_regular", regular_right(b));
  return f;
}

inline io::FixtureSet nonunital_ring() {
  io::FixtureSet f;
  f.name = "nonunital_ring";
  f.algebras.emplace("F", fixtures::left_unit_only_algebra());
  const Algebra& alg = f.algebras.at("F");
  f.modules.emplace("F_regular", regular_right(alg));
  return f;
}

inline std::vector<std::string> fixture_names() {
  return {"trivial_coring", "field_extension", "group_coalgebra", "group_coalgebra_broken", "matrix_coalgebra", "nonflat_comatrix", "nonunital_ring"};
}

inline io::FixtureSet build(const std::string& name) {
  if (name == "trivial_coring") return trivial_coring();
  if (name == "field_extension") return field_extension();
  if (name == "group_coalgebra") return group_coalgebra(false);
  if (name == "group_coalgebra_broken") return group_coalgebra(true);
  if (name == "matrix_coalgebra") return matrix_coalgebra();
  if (name == "nonflat_comatrix") return nonflat_comatrix();
  if (name == "nonunital_ring") return nonunital_ring();
  return {};
}

// Report configurations: which named objects each equivalence report runs on.
inline std::vector<std::string> config_names() {
  return {"field_extension_report", "group_coalgebra_report", "matrix_coalgebra_report", "nonflat_comatrix_report"};
}

inline io::json config(const std::string& name) {
  io::json cfg = io::json::object();
  if (name == "field_extension_report") {
    cfg["base"] = "B";
    cfg["sigma"] = "sigma_rho";
    cfg["comodules"] = {"sigma_rho"};
    cfg["bmodules"] = {"B_regular", "B_square"};
    cfg["morphisms"] = {"identity_B", "embedding"};
  } else if (name == "group_coalgebra_report") {
    cfg["base"] = "B";
    cfg["sigma"] = "x_e";
    cfg["comodules"] = {"x_e"};
    cfg["bmodules"] = {"B_regular"};
    cfg["morphisms"] = io::json::array();
  } else if (name == "matrix_coalgebra_report") {
    cfg["base"] = "B";
    cfg["sigma"] = "columns";
    cfg["comodules"] = {"columns"};
    cfg["bmodules"] = {"B_regular", "B_square"};
    cfg["morphisms"] = {"swap"};
  } else if (name == "nonflat_comatrix_report") {
    cfg["base"] = "B";
    cfg["sigma"] = "taut";
    cfg["comodules"] = {"grouplike_line"};
    cfg["bmodules"] = {"B_regular"};
    cfg["morphisms"] = io::json::array();
  }
  return cfg;
}

}  // namespace coring::catalog
