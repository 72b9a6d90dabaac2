// coring-lab: command-line driver over the coring library.
//
// Subcommands: check | sweedler | comatrix | can | galois | cotensor | report.
// Exit codes: 0 = all checks pass, 1 = a mathematical verdict is negative,
// 2 = input error (unreadable file, unresolved reference, invalid data).

#include <CLI11.hpp>

#include "coring/adjunction.hpp"
#include "coring/json_io.hpp"
#include "coring/reports.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using coring::Algebra;
using coring::AxiomReport;
using coring::Comodule;
using coring::Coring;
using coring::DiagnosticsReport;
using coring::Mat;
using coring::Module;
using coring::TensorSpace;
using coring::Verdict;
using coring::io::json;
using coring::io::LoadResult;

int fail_input(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return 2;
}

std::optional<json> parse_file(const std::string& path, std::string& error) {
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) {
    error = "cannot open \"" + path + "\"";
    return std::nullopt;
  }
  try {
    return json::parse(in);
  } catch (const std::exception& ex) {
    error = "cannot parse \"" + path + "\": " + ex.what();
    return std::nullopt;
  }
}

void print_load_errors(const std::vector<coring::io::LoadError>& errors) {
  for (const auto& e : errors) std::cerr << "error: " << e.where << ": " << e.message << "\n";
}

// Loads a fixture in strict mode and hands the set to the handler; any load
// problem (structural or axiomatic) is an input error for engine commands.
template <typename Fn>
int with_fixture(const std::string& path, Fn&& handler) {
  std::string error;
  const auto doc = parse_file(path, error);
  if (!doc) return fail_input(error);
  const LoadResult result = coring::io::load_fixtures(*doc, /*strict=*/true);
  if (!result.ok()) {
    print_load_errors(result.errors);
    return 2;
  }
  return handler(result.set);
}

// Σ must admit a finite dual basis over its right algebra before the comatrix
// constructions may run; returns the obstruction instead of tripping asserts.
std::optional<std::string> comatrix_obstruction(const Module& sigma) {
  if (!sigma.has_left() || !sigma.has_right()) return "sigma must be a bimodule";
  const coring::DualModule dual = dual_of(sigma, *sigma.right_alg, *sigma.left_alg);
  const TensorSpace sd = coring::tensor_over({&sigma, &dual.mod}, {sigma.right_alg});
  if (!dual_basis(sigma, dual, sd))
    return "sigma has no finite dual basis over its right algebra "
           "(not finitely generated projective)";
  return std::nullopt;
}

void print_axiom_report(const AxiomReport& report) {
  for (const auto& item : report.items) {
    std::cout << (item.ok ? "  [ ok ] " : "  [FAIL] ") << item.law;
    if (!item.ok && !item.witness.empty()) std::cout << " -- " << item.witness;
    std::cout << "\n";
  }
}

void print_verdict(const Verdict& v) {
  std::cout << (v.value ? "  [ ok ] " : "  [FAIL] ") << v.label;
  if (!v.detail.empty()) std::cout << " (" << v.detail << ")";
  std::cout << "\n";
}

void print_verdict_list(const char* heading, const std::vector<Verdict>& list) {
  if (list.empty()) return;
  std::cout << heading << ":\n";
  for (const auto& v : list) print_verdict(v);
}

void print_report_text(const DiagnosticsReport& rep, const std::string& digest) {
  std::cout << "tool: " << coring::io::tool_version << "\n";
  std::cout << "fixture: " << digest << "\n";
  std::cout << "GALOIS: " << (rep.galois.value ? "yes" : "no") << " (" << rep.galois.detail
            << ")\n";
  if (rep.vacuous) {
    std::cout << "comodule sample empty: report is vacuous\n";
    return;
  }
  print_verdict_list("counit isomorphisms", rep.counit_iso);
  print_verdict_list("unit isomorphisms", rep.unit_iso);
  print_verdict_list("equalizer preservation", rep.preserves_equalizers);
  print_verdict_list("isomorphism reflection", rep.reflects_iso_samples);
  print_verdict_list("theorem consistency", rep.theorem_consistency);
  if (rep.equivalence) print_verdict_list("equivalence", {*rep.equivalence});
  std::cout << "consistent: " << (rep.consistent() ? "yes" : "no") << "\n";
  std::cout << "overall: " << (rep.all_ok() ? "pass" : "fail") << "\n";
}

// --- check ------------------------------------------------------------------

struct ObjectCheck {
  std::string kind;
  AxiomReport report;
};

std::optional<ObjectCheck> check_object(const coring::io::FixtureSet& set,
                                        const std::string& name) {
  using coring::check_algebra;
  if (set.algebras.count(name)) return ObjectCheck{"algebra", check_algebra(set.algebras.at(name))};
  if (set.modules.count(name)) {
    const Module& mod = set.modules.at(name);
    if (set.bimodule_names.count(name)) return ObjectCheck{"bimodule", check_bimodule(mod)};
    if (mod.has_right()) return ObjectCheck{"module", check_right_module(mod)};
    return ObjectCheck{"module", check_left_module(mod)};
  }
  if (set.corings.count(name)) return ObjectCheck{"coring", check_coring(set.corings.at(name))};
  if (set.comodules.count(name))
    return ObjectCheck{"comodule", check_comodule(set.comodules.at(name))};
  if (set.grouplikes.count(name)) {
    const auto& entry = set.grouplikes.at(name);
    AxiomReport report;
    report.add("element is grouplike", is_grouplike(set.corings.at(entry.coring), entry.element),
               "delta(g) != g tensor g or epsilon(g) != 1");
    return ObjectCheck{"grouplike", report};
  }
  if (set.morphisms.count(name)) {
    const auto& m = set.morphisms.at(name);
    if (m.between == "algebras")
      return ObjectCheck{"morphism", check_algebra_morphism(m.map, set.algebras.at(m.from),
                                                            set.algebras.at(m.to))};
    return ObjectCheck{
        "morphism", check_module_morphism(m.map, set.modules.at(m.from), set.modules.at(m.to))};
  }
  return std::nullopt;
}

int cmd_check(const std::string& path, bool strict, const std::string& object,
              bool as_json) {
  std::string error;
  const auto doc = parse_file(path, error);
  if (!doc) return fail_input(error);
  const LoadResult result = coring::io::load_fixtures(*doc, strict);

  json out;
  out["tool"] = coring::io::tool_version;
  out["name"] = result.set.name;
  out["ok"] = result.ok();
  json errs = json::array();
  for (const auto& e : result.errors) errs.push_back({{"where", e.where}, {"message", e.message}});
  out["errors"] = std::move(errs);
  out["warnings"] = result.set.warnings;
  out["counts"] = {{"algebras", result.set.algebras.size()},
                   {"modules", result.set.modules.size() - result.set.bimodule_names.size()},
                   {"bimodules", result.set.bimodule_names.size()},
                   {"corings", result.set.corings.size()},
                   {"comodules", result.set.comodules.size()},
                   {"grouplikes", result.set.grouplikes.size()},
                   {"morphisms", result.set.morphisms.size()}};

  int code = result.ok() ? (result.set.warnings.empty() ? 0 : 1) : 2;
  std::optional<ObjectCheck> object_check;
  if (result.ok() && !object.empty()) {
    object_check = check_object(result.set, object);
    if (!object_check) {
      if (!as_json) return fail_input("no object named \"" + object + "\" in the fixture");
      out["ok"] = false;
      out["errors"].push_back(
          {{"where", "$"}, {"message", "no object named \"" + object + "\" in the fixture"}});
      code = 2;
    } else {
      out["object"] = {{"name", object},
                       {"kind", object_check->kind},
                       {"axioms", coring::io::axiom_report_json(object_check->report)}};
      code = object_check->report.ok() ? 0 : 1;
    }
  }

  if (as_json) {
    std::cout << coring::io::canonical_dump(out);
    return code;
  }

  if (!result.ok()) {
    print_load_errors(result.errors);
    return 2;
  }
  std::cout << "loaded: " << (result.set.name.empty() ? path : result.set.name) << "\n";
  for (const auto& [key, value] : out["counts"].items())
    std::cout << "  " << key << ": " << value.get<size_t>() << "\n";
  for (const auto& w : result.set.warnings) std::cout << "warning: " << w << "\n";
  if (object_check) {
    std::cout << "object: " << object << " (" << object_check->kind << ")\n";
    print_axiom_report(object_check->report);
    std::cout << "result: " << (object_check->report.ok() ? "pass" : "fail") << "\n";
  } else {
    std::cout << "result: " << (result.set.warnings.empty() ? "pass" : "fail") << "\n";
  }
  return code;
}

// --- sweedler ----------------------------------------------------------------

int cmd_sweedler(const std::string& path, const std::string& alg_name,
                 const std::string& sub_name, bool as_json) {
  return with_fixture(path, [&](const coring::io::FixtureSet& set) -> int {
    if (!set.algebras.count(alg_name)) return fail_input("no algebra named \"" + alg_name + "\"");
    if (!set.algebras.count(sub_name)) return fail_input("no algebra named \"" + sub_name + "\"");
    const Algebra& a = set.algebras.at(alg_name);
    const Algebra& b = set.algebras.at(sub_name);
    if (!a.unital() || !b.unital())
      return fail_input("the canonical coring needs unital algebras");

    const Mat* incl = nullptr;
    for (const auto& [name, m] : set.morphisms)
      if (m.between == "algebras" && m.from == sub_name && m.to == alg_name) {
        if (incl)
          return fail_input("more than one algebra morphism from \"" + sub_name + "\" to \"" +
                            alg_name + "\" in the fixture");
        incl = &m.map;
      }
    if (!incl)
      return fail_input("no algebra morphism from \"" + sub_name + "\" to \"" + alg_name +
                        "\" in the fixture");
    if (!check_algebra_morphism(*incl, b, a).ok())
      return fail_input("the stored map from \"" + sub_name + "\" to \"" + alg_name +
                        "\" is not a unital algebra morphism");

    const coring::CanonicalCoringData sw = sweedler_coring(a, b, *incl);
    const AxiomReport axioms = check_coring(sw.coring);
    const bool unit_grouplike = is_grouplike(sw.coring, sw.unit_class.g);

    if (as_json) {
      json out;
      out["tool"] = coring::io::tool_version;
      out["carrier_dim"] = sw.coring.c.dim;
      out["axioms"] = coring::io::axiom_report_json(axioms);
      out["unit_class_grouplike"] = unit_grouplike;
      std::cout << coring::io::canonical_dump(out);
    } else {
      std::cout << "SWEEDLER: carrier dimension " << sw.coring.c.dim << " over \"" << alg_name
                << "\" of dimension " << a.dim << "\n";
      print_axiom_report(axioms);
      std::cout << "  [" << (unit_grouplike ? " ok " : "FAIL")
                << "] the class of 1 tensor 1 is grouplike\n";
      std::cout << "result: " << (axioms.ok() && unit_grouplike ? "pass" : "fail") << "\n";
    }
    return axioms.ok() && unit_grouplike ? 0 : 1;
  });
}

// --- comatrix ----------------------------------------------------------------

int cmd_comatrix(const std::string& path, const std::string& sigma_name, bool as_json) {
  return with_fixture(path, [&](const coring::io::FixtureSet& set) -> int {
    if (!set.modules.count(sigma_name) || !set.bimodule_names.count(sigma_name))
      return fail_input("no bimodule named \"" + sigma_name + "\"");
    const Module& sigma = set.modules.at(sigma_name);
    if (const auto obstruction = comatrix_obstruction(sigma)) return fail_input(*obstruction);

    const coring::ComatrixData cm =
        comatrix_coring(*sigma.left_alg, *sigma.right_alg, sigma);
    const AxiomReport axioms = check_coring(cm.coring);

    if (as_json) {
      json out;
      out["tool"] = coring::io::tool_version;
      out["sigma_dim"] = sigma.dim;
      out["dual_dim"] = cm.dual.mod.dim;
      out["carrier_dim"] = cm.coring.c.dim;
      out["axioms"] = coring::io::axiom_report_json(axioms);
      std::cout << coring::io::canonical_dump(out);
    } else {
      std::cout << "COMATRIX: carrier dimension " << cm.coring.c.dim << " (sigma " << sigma.dim
                << ", dual " << cm.dual.mod.dim << ")\n";
      print_axiom_report(axioms);
      std::cout << "result: " << (axioms.ok() ? "pass" : "fail") << "\n";
    }
    return axioms.ok() ? 0 : 1;
  });
}

// --- can / galois -------------------------------------------------------------

// Builds the Galois context for a named comodule, or reports why it cannot
// exist.  The optional coring name cross-checks the comodule's coring.
std::optional<coring::GaloisContext> context_for(const coring::io::FixtureSet& set,
                                                 const std::string& sigma_name,
                                                 const std::string& coring_name,
                                                 std::string& error) {
  if (!set.comodules.count(sigma_name)) {
    error = "no comodule named \"" + sigma_name + "\"";
    return std::nullopt;
  }
  const Comodule& com = set.comodules.at(sigma_name);
  if (!coring_name.empty()) {
    if (!set.corings.count(coring_name)) {
      error = "no coring named \"" + coring_name + "\"";
      return std::nullopt;
    }
    if (&set.corings.at(coring_name) != com.cor) {
      error = "comodule \"" + sigma_name + "\" is not a comodule over coring \"" + coring_name +
              "\"";
      return std::nullopt;
    }
  }
  if (const auto obstruction = comatrix_obstruction(com.x)) {
    error = *obstruction;
    return std::nullopt;
  }
  return galois_context(*com.x.left_alg, com);
}

int cmd_can(const std::string& path, const std::string& sigma_name,
            const std::string& coring_name, bool as_json) {
  return with_fixture(path, [&](const coring::io::FixtureSet& set) -> int {
    std::string error;
    const auto ctx = context_for(set, sigma_name, coring_name, error);
    if (!ctx) return fail_input(error);

    if (as_json) {
      json out;
      out["tool"] = coring::io::tool_version;
      out["rows"] = ctx->can.rows();
      out["cols"] = ctx->can.cols();
      out["rank"] = rank(ctx->can);
      out["matrix"] = coring::io::detail::mat_json(ctx->can);
      std::cout << coring::io::canonical_dump(out);
    } else {
      std::cout << "CAN: " << ctx->can.rows() << "x" << ctx->can.cols() << " matrix, rank "
                << rank(ctx->can) << "\n";
      for (long i = 0; i < ctx->can.rows(); ++i) {
        std::cout << " ";
        for (long j = 0; j < ctx->can.cols(); ++j)
          std::cout << " " << coring::rat_to_string(ctx->can(i, j));
        std::cout << "\n";
      }
    }
    return 0;
  });
}

int cmd_galois(const std::string& path, const std::string& sigma_name,
               const std::string& coring_name, bool as_json) {
  return with_fixture(path, [&](const coring::io::FixtureSet& set) -> int {
    std::string error;
    const auto ctx = context_for(set, sigma_name, coring_name, error);
    if (!ctx) return fail_input(error);

    const Verdict verdict = galois_verdict(*ctx);
    if (as_json) {
      json out;
      out["tool"] = coring::io::tool_version;
      out["galois"] = coring::io::verdict_json(verdict);
      std::cout << coring::io::canonical_dump(out);
    } else {
      std::cout << "GALOIS: " << (verdict.value ? "yes" : "no") << " (" << verdict.detail
                << ")\n";
    }
    return verdict.value ? 0 : 1;
  });
}

// --- cotensor ------------------------------------------------------------------

int cmd_cotensor(const std::string& path, const std::string& x_name,
                 const std::string& sigma_name, bool as_json) {
  return with_fixture(path, [&](const coring::io::FixtureSet& set) -> int {
    std::string error;
    const auto ctx = context_for(set, sigma_name, "", error);
    if (!ctx) return fail_input(error);
    if (!set.comodules.count(x_name)) return fail_input("no comodule named \"" + x_name + "\"");
    const Comodule& x = set.comodules.at(x_name);
    if (x.cor != ctx->cor)
      return fail_input("comodules \"" + x_name + "\" and \"" + sigma_name +
                        "\" live over different corings");

    const coring::Cotensor cot = cotensor(x, ctx->dual_left);
    if (as_json) {
      json out;
      out["tool"] = coring::io::tool_version;
      out["window_dim"] = cot.window.dim();
      out["ambient_dim"] = cot.window.ambient_dim;
      out["basis"] = coring::io::detail::mat_json(cot.window.basis);
      std::cout << coring::io::canonical_dump(out);
    } else {
      std::cout << "COTENSOR: dimension " << cot.window.dim() << " inside a tensor product of "
                << "dimension " << cot.window.ambient_dim << "\n";
    }
    return 0;
  });
}

// --- report --------------------------------------------------------------------

int cmd_report(const std::string& path, const std::string& config_path, bool as_json) {
  return with_fixture(path, [&](const coring::io::FixtureSet& set) -> int {
    std::string error;
    const auto cfg = parse_file(config_path, error);
    if (!cfg) return fail_input(error);
    if (!cfg->is_object()) return fail_input("config must be a JSON object");

    const auto str_field = [&](const char* key) -> std::optional<std::string> {
      if (!cfg->contains(key) || !cfg->at(key).is_string()) {
        error = std::string("config needs a string field \"") + key + "\"";
        return std::nullopt;
      }
      return cfg->at(key).get<std::string>();
    };
    const auto name_list = [&](const char* key) -> std::optional<std::vector<std::string>> {
      if (!cfg->contains(key)) return std::vector<std::string>{};
      if (!cfg->at(key).is_array()) {
        error = std::string("config field \"") + key + "\" must be an array of names";
        return std::nullopt;
      }
      std::vector<std::string> out;
      for (const auto& item : cfg->at(key)) {
        if (!item.is_string()) {
          error = std::string("config field \"") + key + "\" must be an array of names";
          return std::nullopt;
        }
        out.push_back(item.get<std::string>());
      }
      return out;
    };

    const auto base_name = str_field("base");
    if (!base_name) return fail_input(error);
    const auto sigma_name = str_field("sigma");
    if (!sigma_name) return fail_input(error);
    const auto comodule_names = name_list("comodules");
    if (!comodule_names) return fail_input(error);
    const auto bmodule_names = name_list("bmodules");
    if (!bmodule_names) return fail_input(error);
    const auto morphism_names = name_list("morphisms");
    if (!morphism_names) return fail_input(error);

    if (!set.algebras.count(*base_name))
      return fail_input("no algebra named \"" + *base_name + "\"");
    const Algebra& base = set.algebras.at(*base_name);
    const auto ctx = context_for(set, *sigma_name, "", error);
    if (!ctx) return fail_input(error);
    if (ctx->inner != &base)
      return fail_input("algebra \"" + *base_name + "\" does not act on \"" + *sigma_name +
                        "\" from the left");

    std::vector<coring::LabeledComodule> comodules;
    for (const auto& name : *comodule_names) {
      if (!set.comodules.count(name)) return fail_input("no comodule named \"" + name + "\"");
      const Comodule& com = set.comodules.at(name);
      if (com.cor != ctx->cor)
        return fail_input("comodule \"" + name + "\" lives over a different coring than \"" +
                          *sigma_name + "\"");
      comodules.push_back({name, &com});
    }
    std::vector<coring::LabeledModule> bmodules;
    for (const auto& name : *bmodule_names) {
      if (!set.modules.count(name)) return fail_input("no module named \"" + name + "\"");
      const Module& mod = set.modules.at(name);
      if (!mod.has_right() || mod.right_alg != &base)
        return fail_input("module \"" + name + "\" is not a right module over \"" + *base_name +
                          "\"");
      bmodules.push_back({name, &mod});
    }
    std::vector<coring::MorphismSample> samples;
    for (const auto& name : *morphism_names) {
      if (!set.morphisms.count(name)) return fail_input("no morphism named \"" + name + "\"");
      const auto& m = set.morphisms.at(name);
      if (m.between != "modules")
        return fail_input("morphism \"" + name + "\" is not a module morphism");
      const Module& from = set.modules.at(m.from);
      const Module& to = set.modules.at(m.to);
      if (!from.has_right() || from.right_alg != &base || !to.has_right() ||
          to.right_alg != &base)
        return fail_input("morphism \"" + name + "\" is not between right modules over \"" +
                          *base_name + "\"");
      samples.push_back({name, &from, &to, m.map});
    }

    const DiagnosticsReport rep = equivalence_report(*ctx, comodules, bmodules, samples);
    const std::string digest = coring::io::fixture_digest(coring::io::fixture_to_json(set));
    if (as_json) {
      std::cout << coring::io::canonical_dump(coring::io::report_json(rep, digest));
    } else {
      print_report_text(rep, digest);
    }
    return rep.all_ok() ? 0 : 1;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic coring and comodule diagnostics"};
  app.require_subcommand(1);

  std::string file, output = "text";
  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "fixture file (JSON)")->required();
    cmd->add_option("--output", output, "output format")
        ->check(CLI::IsMember({"json", "text"}));
  };

  auto* check = app.add_subcommand("check", "load a fixture and verify axioms");
  add_common(check);
  bool strict = false, lenient = false;
  std::string object;
  check->add_flag("--strict", strict, "treat axiom failures as errors (default)");
  check->add_flag("--lenient", lenient, "downgrade axiom failures to warnings")
      ->excludes("--strict");
  check->add_option("--object", object, "re-check a single named object");

  auto* sweedler = app.add_subcommand("sweedler", "build the canonical coring of an extension");
  add_common(sweedler);
  std::string alg_name, sub_name;
  sweedler->add_option("--algebra", alg_name, "the extension algebra")->required();
  sweedler->add_option("--subalgebra", sub_name, "the base algebra")->required();

  auto* comatrix = app.add_subcommand("comatrix", "build the comatrix coring of a bimodule");
  add_common(comatrix);
  std::string sigma_name;
  comatrix->add_option("--sigma", sigma_name, "the bimodule")->required();

  auto* can = app.add_subcommand("can", "compute the canonical comparison map");
  add_common(can);
  std::string coring_name;
  can->add_option("--sigma", sigma_name, "the comodule inducing the map")->required();
  can->add_option("--coring", coring_name, "cross-check the comodule's coring");

  auto* galois = app.add_subcommand("galois", "decide whether the canonical map is bijective");
  add_common(galois);
  galois->add_option("--sigma", sigma_name, "the comodule inducing the map")->required();
  galois->add_option("--coring", coring_name, "cross-check the comodule's coring");

  auto* cotensor = app.add_subcommand("cotensor", "compute a cotensor product with the dual");
  add_common(cotensor);
  std::string x_name;
  cotensor->add_option("--comodule", x_name, "the right comodule")->required();
  cotensor->add_option("--sigma", sigma_name, "the comodule inducing the dual")->required();

  auto* report = app.add_subcommand("report", "run the equivalence diagnostics");
  add_common(report);
  std::string config_path;
  report->add_option("--config", config_path, "report configuration file (JSON)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const bool as_json = output == "json";
  if (check->parsed()) return cmd_check(file, !lenient, object, as_json);
  if (sweedler->parsed()) return cmd_sweedler(file, alg_name, sub_name, as_json);
  if (comatrix->parsed()) return cmd_comatrix(file, sigma_name, as_json);
  if (can->parsed()) return cmd_can(file, sigma_name, coring_name, as_json);
  if (galois->parsed()) return cmd_galois(file, sigma_name, coring_name, as_json);
  if (cotensor->parsed()) return cmd_cotensor(file, x_name, sigma_name, as_json);
  if (report->parsed()) return cmd_report(file, config_path, as_json);
  return 2;
}
