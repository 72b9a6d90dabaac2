#pragma once

// Fixture files and report documents.
//
// A fixture is a JSON object with top-level maps `algebras`, `modules`,
// `bimodules`, `corings`, `comodules`, `grouplikes`, `morphisms`; every
// rational number is a string "p/q" (or "p"), every matrix an array of rows,
// and every cross-reference a name.  The loader resolves names, recomputes
// every tensor quotient, validates shapes, and runs the axiom checks: axiom
// failures are errors in strict mode and warnings in lenient mode, while
// structural problems (unparseable numbers, dangling references, wrong
// dimensions) are always errors.
//
// Emission is canonical — map keys sort lexicographically, rationals render
// in lowest terms — so loading a file and re-emitting it is idempotent after
// one normalization pass, and equal inputs always produce identical bytes.

#include <json.hpp>

#include "coring/coring.hpp"
#include "coring/reports.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace coring::io {

using json = nlohmann::json;

struct LoadError {
  std::string where;
  std::string message;
};

struct GrouplikeEntry {
  std::string coring;
  Mat element;
};

struct MorphismEntry {
  std::string between;  // "algebras" or "modules"
  std::string from;
  std::string to;
  Mat map;
};

// The resolved object graph.  Node-based maps keep every address stable, so
// the cross-object pointers (module -> algebra, comodule -> coring) survive
// moves of the whole set; copying would dangle them, hence no copying.
struct FixtureSet {
  std::string name;
  std::map<std::string, Algebra> algebras;
  std::map<std::string, Module> modules;  // one-sided entries and bimodules
  std::set<std::string> bimodule_names;
  std::map<std::string, Coring> corings;
  std::map<std::string, Comodule> comodules;
  std::map<std::string, GrouplikeEntry> grouplikes;
  std::map<std::string, MorphismEntry> morphisms;
  std::map<std::string, std::pair<std::string, std::string>> coring_refs;    // algebra, bimodule
  std::map<std::string, std::pair<std::string, std::string>> comodule_refs;  // coring, module
  std::vector<std::string> warnings;

  FixtureSet() = default;
  FixtureSet(const FixtureSet&) = delete;
  FixtureSet& operator=(const FixtureSet&) = delete;
  FixtureSet(FixtureSet&&) = default;
  FixtureSet& operator=(FixtureSet&&) = default;

  std::string algebra_name(const Algebra* a) const {
    for (const auto& [name, alg] : algebras)
      if (&alg == a) return name;
    return "?";
  }
};

struct LoadResult {
  FixtureSet set;
  std::vector<LoadError> errors;
  bool ok() const { return errors.empty(); }
};

namespace detail {

inline std::optional<Rat> parse_rat(const json& j) {
  if (!j.is_string()) return std::nullopt;
  const std::string text = j.get<std::string>();
  if (text.empty()) return std::nullopt;
  // digits with an optional leading sign and at most one '/'
  long slashes = 0;
  for (size_t k = 0; k < text.size(); ++k) {
    const char ch = text[k];
    if (ch == '/') {
      ++slashes;
      if (slashes > 1 || k == 0 || k + 1 == text.size()) return std::nullopt;
    } else if (ch == '-') {
      if (k != 0 && text[k - 1] != '/') return std::nullopt;
      if (k + 1 == text.size() || text[k + 1] == '/') return std::nullopt;
    } else if (ch < '0' || ch > '9') {
      return std::nullopt;
    }
  }
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    bool nonzero = false;
    for (size_t k = slash + 1; k < text.size(); ++k)
      nonzero = nonzero || (text[k] != '0' && text[k] != '-');
    if (!nonzero) return std::nullopt;  // zero denominator
  }
  return rat_from_string(text);
}

inline std::optional<Mat> parse_mat(const json& j, long rows, long cols, const std::string& where,
                                    std::vector<LoadError>& errors) {
  if (!j.is_array() || static_cast<long>(j.size()) != rows) {
    errors.push_back({where, "expected a matrix with " + std::to_string(rows) + " rows"});
    return std::nullopt;
  }
  Mat m(rows, cols);
  for (long i = 0; i < rows; ++i) {
    const json& row = j[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<long>(row.size()) != cols) {
      errors.push_back({where, "row " + std::to_string(i) + " must have " +
                                   std::to_string(cols) + " entries"});
      return std::nullopt;
    }
    for (long k = 0; k < cols; ++k) {
      const auto r = parse_rat(row[static_cast<size_t>(k)]);
      if (!r) {
        errors.push_back({where, "entry (" + std::to_string(i) + "," + std::to_string(k) +
                                     ") is not a rational string"});
        return std::nullopt;
      }
      m(i, k) = *r;
    }
  }
  return m;
}

inline std::optional<Mat> parse_vector(const json& j, long dim, const std::string& where,
                                       std::vector<LoadError>& errors) {
  if (!j.is_array() || static_cast<long>(j.size()) != dim) {
    errors.push_back({where, "expected " + std::to_string(dim) + " coordinates"});
    return std::nullopt;
  }
  Mat v(dim, 1);
  for (long i = 0; i < dim; ++i) {
    const auto r = parse_rat(j[static_cast<size_t>(i)]);
    if (!r) {
      errors.push_back({where, "coordinate " + std::to_string(i) + " is not a rational string"});
      return std::nullopt;
    }
    v(i, 0) = *r;
  }
  return v;
}

inline std::optional<std::vector<Mat>> parse_action(const json& j, long alg_dim, long mod_dim,
                                                    const std::string& where,
                                                    std::vector<LoadError>& errors) {
  if (!j.is_array() || static_cast<long>(j.size()) != alg_dim) {
    errors.push_back(
        {where, "expected one matrix per algebra basis vector (" + std::to_string(alg_dim) + ")"});
    return std::nullopt;
  }
  std::vector<Mat> action;
  for (long t = 0; t < alg_dim; ++t) {
    const auto m = parse_mat(j[static_cast<size_t>(t)], mod_dim, mod_dim,
                             where + "[" + std::to_string(t) + "]", errors);
    if (!m) return std::nullopt;
    action.push_back(*m);
  }
  return action;
}

inline long require_dim(const json& entry, const std::string& where,
                        std::vector<LoadError>& errors) {
  if (!entry.contains("dim") || !entry["dim"].is_number_integer() ||
      entry["dim"].get<long>() < 0) {
    errors.push_back({where, "missing or invalid \"dim\""});
    return -1;
  }
  return entry["dim"].get<long>();
}

inline json rat_json(const Rat& r) { return rat_to_string(r); }

inline json mat_json(const Mat& m) {
  json rows = json::array();
  for (long i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (long j = 0; j < m.cols(); ++j) row.push_back(rat_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json vector_json(const Mat& v) {
  json out = json::array();
  for (long i = 0; i < v.rows(); ++i) out.push_back(rat_json(v(i, 0)));
  return out;
}

inline json action_json(const std::vector<Mat>& action) {
  json out = json::array();
  for (const Mat& m : action) out.push_back(mat_json(m));
  return out;
}

// axiom failures: hard errors in strict mode, warnings otherwise
inline void report_axioms(const AxiomReport& report, const std::string& where, bool strict,
                          FixtureSet& set, std::vector<LoadError>& errors) {
  for (const auto& item : report.items) {
    if (item.ok) continue;
    const std::string message =
        "axiom failure: " + item.law + (item.witness.empty() ? "" : " (" + item.witness + ")");
    if (strict)
      errors.push_back({where, message});
    else
      set.warnings.push_back(where + ": " + message);
  }
}

}  // namespace detail

inline LoadResult load_fixtures(const json& doc, bool strict) {
  using detail::parse_action;
  using detail::parse_mat;
  using detail::parse_vector;

  LoadResult out;
  FixtureSet& set = out.set;
  std::vector<LoadError>& errors = out.errors;

  if (!doc.is_object()) {
    errors.push_back({"$", "fixture document must be a JSON object"});
    return out;
  }
  if (doc.contains("name") && doc["name"].is_string()) set.name = doc["name"].get<std::string>();

  static const json empty_section = json::object();
  const auto section = [&](const char* key) -> const json& {
    if (!doc.contains(key)) return empty_section;
    if (!doc.at(key).is_object()) {
      errors.push_back({key, "section must be an object"});
      return empty_section;
    }
    return doc.at(key);
  };

  // --- algebras ---
  for (const auto& [name, entry] : section("algebras").items()) {
    const std::string where = "algebras." + name;
    const long dim = detail::require_dim(entry, where, errors);
    if (dim < 0) continue;
    if (!entry.contains("mult") || !entry["mult"].is_array() ||
        static_cast<long>(entry["mult"].size()) != dim) {
      errors.push_back({where, "\"mult\" must list e_i e_j coordinates for every basis pair"});
      continue;
    }
    std::vector<Rat> sc(static_cast<size_t>(dim * dim * dim));
    bool good = true;
    for (long i = 0; i < dim && good; ++i) {
      const json& row = entry["mult"][static_cast<size_t>(i)];
      if (!row.is_array() || static_cast<long>(row.size()) != dim) {
        errors.push_back({where, "\"mult\" row " + std::to_string(i) + " must have " +
                                     std::to_string(dim) + " entries"});
        good = false;
        break;
      }
      for (long j = 0; j < dim && good; ++j) {
        const auto v = parse_vector(row[static_cast<size_t>(j)], dim,
                                    where + ".mult[" + std::to_string(i) + "][" +
                                        std::to_string(j) + "]",
                                    errors);
        if (!v) {
          good = false;
          break;
        }
        for (long k = 0; k < dim; ++k) sc[static_cast<size_t>((i * dim + j) * dim + k)] = (*v)(k, 0);
      }
    }
    if (!good) continue;
    std::optional<Mat> unit;
    if (entry.contains("unit")) {
      const auto u = parse_vector(entry["unit"], dim, where + ".unit", errors);
      if (!u) continue;
      unit = *u;
    }
    set.algebras.emplace(name, algebra_from_constants(dim, std::move(sc), std::move(unit)));
    detail::report_axioms(check_algebra(set.algebras.at(name)), where, strict, set, errors);
  }

  const auto find_algebra = [&](const json& entry, const char* key,
                                const std::string& where) -> const Algebra* {
    if (!entry.contains(key) || !entry[key].is_string()) {
      errors.push_back({where, std::string("missing algebra reference \"") + key + "\""});
      return nullptr;
    }
    const auto it = set.algebras.find(entry[key].get<std::string>());
    if (it == set.algebras.end()) {
      errors.push_back({where, "unresolved algebra \"" + entry[key].get<std::string>() + "\""});
      return nullptr;
    }
    return &it->second;
  };

  // --- one-sided modules ---
  for (const auto& [name, entry] : section("modules").items()) {
    const std::string where = "modules." + name;
    const long dim = detail::require_dim(entry, where, errors);
    if (dim < 0) continue;
    const std::string side =
        entry.contains("side") && entry["side"].is_string() ? entry["side"].get<std::string>() : "";
    if (side != "left" && side != "right") {
      errors.push_back({where, "\"side\" must be \"left\" or \"right\""});
      continue;
    }
    const Algebra* alg = find_algebra(entry, "algebra", where);
    if (!alg) continue;
    if (!entry.contains("action")) {
      errors.push_back({where, "missing \"action\""});
      continue;
    }
    const auto action = parse_action(entry["action"], alg->dim, dim, where + ".action", errors);
    if (!action) continue;
    const Module mod =
        side == "right" ? right_module(*alg, dim, *action) : left_module(*alg, dim, *action);
    set.modules.emplace(name, mod);
    detail::report_axioms(side == "right" ? check_right_module(set.modules.at(name))
                                          : check_left_module(set.modules.at(name)),
                          where, strict, set, errors);
  }

  // --- bimodules ---
  for (const auto& [name, entry] : section("bimodules").items()) {
    const std::string where = "bimodules." + name;
    if (set.modules.count(name)) {
      errors.push_back({where, "name already used by a module entry"});
      continue;
    }
    const long dim = detail::require_dim(entry, where, errors);
    if (dim < 0) continue;
    const Algebra* left = find_algebra(entry, "left_algebra", where);
    const Algebra* right = find_algebra(entry, "right_algebra", where);
    if (!left || !right) continue;
    if (!entry.contains("left_action") || !entry.contains("right_action")) {
      errors.push_back({where, "missing \"left_action\" or \"right_action\""});
      continue;
    }
    const auto la =
        parse_action(entry["left_action"], left->dim, dim, where + ".left_action", errors);
    const auto ra =
        parse_action(entry["right_action"], right->dim, dim, where + ".right_action", errors);
    if (!la || !ra) continue;
    set.modules.emplace(name, bimodule(*left, *right, dim, *la, *ra));
    set.bimodule_names.insert(name);
    detail::report_axioms(check_bimodule(set.modules.at(name)), where, strict, set, errors);
  }

  const auto find_module = [&](const json& entry, const char* key,
                               const std::string& where) -> const Module* {
    if (!entry.contains(key) || !entry[key].is_string()) {
      errors.push_back({where, std::string("missing module reference \"") + key + "\""});
      return nullptr;
    }
    const auto it = set.modules.find(entry[key].get<std::string>());
    if (it == set.modules.end()) {
      errors.push_back({where, "unresolved module \"" + entry[key].get<std::string>() + "\""});
      return nullptr;
    }
    return &it->second;
  };

  // --- corings ---
  for (const auto& [name, entry] : section("corings").items()) {
    const std::string where = "corings." + name;
    const Algebra* alg = find_algebra(entry, "algebra", where);
    const Module* carrier = find_module(entry, "bimodule", where);
    if (!alg || !carrier) continue;
    if (!(carrier->has_left() && carrier->has_right() && carrier->left_alg == alg &&
          carrier->right_alg == alg)) {
      errors.push_back({where, "carrier must be a bimodule over \"" +
                                   entry["algebra"].get<std::string>() + "\" on both sides"});
      continue;
    }
    // recompute the tensor quotient C (x)_A C and validate the matrix shapes
    const TensorSpace cc = tensor_over({carrier, carrier}, {alg});
    if (!entry.contains("delta") || !entry.contains("epsilon")) {
      errors.push_back({where, "missing \"delta\" or \"epsilon\""});
      continue;
    }
    const auto delta = parse_mat(entry["delta"], cc.dim(), carrier->dim, where + ".delta", errors);
    const auto epsilon =
        parse_mat(entry["epsilon"], alg->dim, carrier->dim, where + ".epsilon", errors);
    if (!delta || !epsilon) continue;
    set.corings.emplace(name, make_coring(*alg, *carrier, *delta, *epsilon));
    set.coring_refs[name] = {entry["algebra"].get<std::string>(),
                             entry["bimodule"].get<std::string>()};
    detail::report_axioms(check_coring(set.corings.at(name)), where, strict, set, errors);
  }

  // --- comodules ---
  for (const auto& [name, entry] : section("comodules").items()) {
    const std::string where = "comodules." + name;
    if (!entry.contains("coring") || !entry["coring"].is_string()) {
      errors.push_back({where, "missing coring reference"});
      continue;
    }
    const auto cit = set.corings.find(entry["coring"].get<std::string>());
    if (cit == set.corings.end()) {
      errors.push_back({where, "unresolved coring \"" + entry["coring"].get<std::string>() + "\""});
      continue;
    }
    const Coring& cor = cit->second;
    const Module* carrier = find_module(entry, "module", where);
    if (!carrier) continue;
    if (!carrier->has_right() || carrier->right_alg != cor.alg) {
      errors.push_back({where, "carrier must be a right module over the coring's algebra"});
      continue;
    }
    const TensorSpace xc = tensor_over({carrier, &cor.c}, {cor.alg});
    if (!entry.contains("rho")) {
      errors.push_back({where, "missing \"rho\""});
      continue;
    }
    const auto rho = parse_mat(entry["rho"], xc.dim(), carrier->dim, where + ".rho", errors);
    if (!rho) continue;
    set.comodules.emplace(name, make_comodule(cor, *carrier, *rho));
    set.comodule_refs[name] = {entry["coring"].get<std::string>(),
                               entry["module"].get<std::string>()};
    detail::report_axioms(check_comodule(set.comodules.at(name)), where, strict, set, errors);
  }

  // --- grouplikes ---
  for (const auto& [name, entry] : section("grouplikes").items()) {
    const std::string where = "grouplikes." + name;
    if (!entry.contains("coring") || !entry["coring"].is_string() ||
        !set.corings.count(entry["coring"].get<std::string>())) {
      errors.push_back({where, "unresolved coring reference"});
      continue;
    }
    const std::string cname = entry["coring"].get<std::string>();
    const Coring& cor = set.corings.at(cname);
    if (!entry.contains("element")) {
      errors.push_back({where, "missing \"element\""});
      continue;
    }
    const auto element = parse_vector(entry["element"], cor.c.dim, where + ".element", errors);
    if (!element) continue;
    if (!cor.alg->unital()) {
      errors.push_back({where, "grouplikes require a unital base algebra"});
      continue;
    }
    set.grouplikes[name] = {cname, *element};
    AxiomReport glike;
    glike.add("element is grouplike", is_grouplike(cor, *element),
              "delta(g) != g tensor g or epsilon(g) != 1");
    detail::report_axioms(glike, where, strict, set, errors);
  }

  // --- morphisms ---
  for (const auto& [name, entry] : section("morphisms").items()) {
    const std::string where = "morphisms." + name;
    const std::string between = entry.contains("between") && entry["between"].is_string()
                                    ? entry["between"].get<std::string>()
                                    : "";
    if (between != "algebras" && between != "modules") {
      errors.push_back({where, "\"between\" must be \"algebras\" or \"modules\""});
      continue;
    }
    if (!entry.contains("from") || !entry["from"].is_string() || !entry.contains("to") ||
        !entry["to"].is_string()) {
      errors.push_back({where, "missing \"from\" or \"to\""});
      continue;
    }
    const std::string from = entry["from"].get<std::string>(), to = entry["to"].get<std::string>();
    long from_dim = -1, to_dim = -1;
    if (between == "algebras") {
      if (!set.algebras.count(from) || !set.algebras.count(to)) {
        errors.push_back({where, "unresolved algebra \"" + (set.algebras.count(from) ? to : from) +
                                     "\""});
        continue;
      }
      from_dim = set.algebras.at(from).dim;
      to_dim = set.algebras.at(to).dim;
    } else {
      if (!set.modules.count(from) || !set.modules.count(to)) {
        errors.push_back(
            {where, "unresolved module \"" + (set.modules.count(from) ? to : from) + "\""});
        continue;
      }
      from_dim = set.modules.at(from).dim;
      to_dim = set.modules.at(to).dim;
    }
    if (!entry.contains("matrix")) {
      errors.push_back({where, "missing \"matrix\""});
      continue;
    }
    const auto map = parse_mat(entry["matrix"], to_dim, from_dim, where + ".matrix", errors);
    if (!map) continue;
    set.morphisms[name] = {between, from, to, *map};
    detail::report_axioms(
        between == "algebras"
            ? check_algebra_morphism(*map, set.algebras.at(from), set.algebras.at(to))
            : check_module_morphism(*map, set.modules.at(from), set.modules.at(to)),
        where, strict, set, errors);
  }

  return out;
}

// ---------------------------------------------------------------------------
// Canonical emission.

inline json fixture_to_json(const FixtureSet& set) {
  using detail::action_json;
  using detail::mat_json;
  using detail::vector_json;

  json doc = json::object();
  if (!set.name.empty()) doc["name"] = set.name;

  json algebras = json::object();
  for (const auto& [name, alg] : set.algebras) {
    json entry;
    entry["dim"] = alg.dim;
    json mult = json::array();
    for (long i = 0; i < alg.dim; ++i) {
      json row = json::array();
      for (long j = 0; j < alg.dim; ++j) {
        json coords = json::array();
        for (long k = 0; k < alg.dim; ++k) coords.push_back(detail::rat_json(alg.c(i, j, k)));
        row.push_back(std::move(coords));
      }
      mult.push_back(std::move(row));
    }
    entry["mult"] = std::move(mult);
    if (alg.unital()) entry["unit"] = vector_json(*alg.unit);
    algebras[name] = std::move(entry);
  }
  if (!algebras.empty()) doc["algebras"] = std::move(algebras);

  json modules = json::object(), bimodules = json::object();
  for (const auto& [name, mod] : set.modules) {
    json entry;
    entry["dim"] = mod.dim;
    if (set.bimodule_names.count(name)) {
      entry["left_algebra"] = set.algebra_name(mod.left_alg);
      entry["right_algebra"] = set.algebra_name(mod.right_alg);
      entry["left_action"] = action_json(mod.left_act);
      entry["right_action"] = action_json(mod.right_act);
      bimodules[name] = std::move(entry);
    } else {
      entry["side"] = mod.has_right() ? "right" : "left";
      entry["algebra"] = set.algebra_name(mod.has_right() ? mod.right_alg : mod.left_alg);
      entry["action"] = action_json(mod.has_right() ? mod.right_act : mod.left_act);
      modules[name] = std::move(entry);
    }
  }
  if (!modules.empty()) doc["modules"] = std::move(modules);
  if (!bimodules.empty()) doc["bimodules"] = std::move(bimodules);

  json corings = json::object();
  for (const auto& [name, cor] : set.corings) {
    json entry;
    const auto& refs = set.coring_refs.at(name);
    entry["algebra"] = refs.first;
    entry["bimodule"] = refs.second;
    entry["delta"] = mat_json(cor.delta);
    entry["epsilon"] = mat_json(cor.epsilon);
    corings[name] = std::move(entry);
  }
  if (!corings.empty()) doc["corings"] = std::move(corings);

  json comodules = json::object();
  for (const auto& [name, com] : set.comodules) {
    json entry;
    const auto& refs = set.comodule_refs.at(name);
    entry["coring"] = refs.first;
    entry["module"] = refs.second;
    entry["rho"] = mat_json(com.rho);
    comodules[name] = std::move(entry);
  }
  if (!comodules.empty()) doc["comodules"] = std::move(comodules);

  json grouplikes = json::object();
  for (const auto& [name, g] : set.grouplikes) {
    json entry;
    entry["coring"] = g.coring;
    entry["element"] = vector_json(g.element);
    grouplikes[name] = std::move(entry);
  }
  if (!grouplikes.empty()) doc["grouplikes"] = std::move(grouplikes);

  json morphisms = json::object();
  for (const auto& [name, m] : set.morphisms) {
    json entry;
    entry["between"] = m.between;
    entry["from"] = m.from;
    entry["to"] = m.to;
    entry["matrix"] = mat_json(m.map);
    morphisms[name] = std::move(entry);
  }
  if (!morphisms.empty()) doc["morphisms"] = std::move(morphisms);

  return doc;
}

inline std::string canonical_dump(const json& doc) { return doc.dump(2) + "\n"; }

// FNV-1a over the canonical serialization: a stable fingerprint for reports.
inline std::string fixture_digest(const json& doc) {
  const std::string text = canonical_dump(doc);
  std::uint64_t h = 1469598103934665603ull;
  for (const unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  static const char* hex = "0123456789abcdef";
  for (int i = 15; i >= 0; --i) {
    buf[i] = hex[h & 0xf];
    h >>= 4;
  }
  buf[16] = '\0';
  return std::string("fnv1a:") + buf;
}

// ---------------------------------------------------------------------------
// Report documents.

inline constexpr const char* tool_version = "coring-lab 1.0.0";

inline json verdict_json(const Verdict& v) {
  json out;
  out["label"] = v.label;
  out["ok"] = v.value;
  out["detail"] = v.detail;
  return out;
}

inline json verdict_list_json(const std::vector<Verdict>& list) {
  json out = json::array();
  for (const auto& v : list) out.push_back(verdict_json(v));
  return out;
}

inline json report_json(const DiagnosticsReport& rep, const std::string& digest) {
  json out;
  out["tool"] = tool_version;
  out["fixture_digest"] = digest;
  out["galois"] = verdict_json(rep.galois);
  out["counit_iso"] = verdict_list_json(rep.counit_iso);
  out["unit_iso"] = verdict_list_json(rep.unit_iso);
  out["preserves_equalizers"] = verdict_list_json(rep.preserves_equalizers);
  out["reflects_iso_samples"] = verdict_list_json(rep.reflects_iso_samples);
  out["theorem_consistency"] = verdict_list_json(rep.theorem_consistency);
  if (rep.equivalence) out["equivalence"] = verdict_json(*rep.equivalence);
  out["vacuous"] = rep.vacuous;
  out["consistent"] = rep.consistent();
  out["all_ok"] = rep.all_ok();
  return out;
}

inline json axiom_report_json(const AxiomReport& report) {
  json items = json::array();
  for (const auto& item : report.items) {
    json entry;
    entry["law"] = item.law;
    entry["ok"] = item.ok;
    entry["witness"] = item.ok ? "" : item.witness;
    items.push_back(std::move(entry));
  }
  json out;
  out["items"] = std::move(items);
  out["ok"] = report.ok();
  return out;
}

}  // namespace coring::io
