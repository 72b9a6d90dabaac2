// The fixture catalog and its JSON round trip: shipped files are the
// canonical serializations, every file loads (strictly, except the sabotage
// variant), re-emission reproduces the bytes, and structural defects are
// errors in both modes.

#include <catch2/catch_amalgamated.hpp>

#include "coring/catalog.hpp"

#include <fstream>
#include <sstream>
#include <string>

using namespace coring;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string fixture_path(const std::string& name) {
  return std::string(CORING_FIXTURE_DIR) + "/" + name + ".json";
}

std::string error_text(const std::vector<io::LoadError>& errors) {
  std::string out;
  for (const auto& e : errors) out += e.where + ": " + e.message + "\n";
  return out;
}

}  // namespace

TEST_CASE("the shipped fixture files are the canonical catalog serializations", "[fixtures]") {
  for (const auto& name : catalog::fixture_names()) {
    INFO("fixture " << name);
    const std::string emitted = io::canonical_dump(io::fixture_to_json(catalog::build(name)));
    CHECK(slurp(fixture_path(name)) == emitted);
  }
  for (const auto& name : catalog::config_names()) {
    INFO("config " << name);
    CHECK(slurp(fixture_path(name)) == io::canonical_dump(catalog::config(name)));
  }
}

TEST_CASE("every catalog fixture loads in strict mode except the sabotaged variant",
          "[fixtures]") {
  for (const auto& name : catalog::fixture_names()) {
    INFO("fixture " << name);
    const auto doc = io::json::parse(slurp(fixture_path(name)));
    const auto result = io::load_fixtures(doc, /*strict=*/true);
    if (name == "group_coalgebra_broken") {
      CHECK_FALSE(result.ok());
    } else {
      INFO(error_text(result.errors));
      CHECK(result.ok());
      CHECK(result.set.warnings.empty());
    }
  }
}

TEST_CASE("lenient mode downgrades the sabotaged coaction to exactly one warning", "[fixtures]") {
  const auto doc = io::json::parse(slurp(fixture_path("group_coalgebra_broken")));
  const auto result = io::load_fixtures(doc, /*strict=*/false);
  INFO(error_text(result.errors));
  CHECK(result.ok());
  REQUIRE(result.set.warnings.size() == 1);
  CHECK(result.set.warnings.front().find("counit") != std::string::npos);
  CHECK(result.set.comodules.count("x_e") == 1);  // the object still loads
}

TEST_CASE("loading a canonical file and re-emitting it reproduces the bytes", "[fixtures]") {
  for (const auto& name : catalog::fixture_names()) {
    INFO("fixture " << name);
    const std::string original = slurp(fixture_path(name));
    const auto result = io::load_fixtures(io::json::parse(original), /*strict=*/false);
    REQUIRE(result.ok());
    CHECK(io::canonical_dump(io::fixture_to_json(result.set)) == original);
  }
}

TEST_CASE("non-canonical rationals normalize in one pass", "[fixtures]") {
  const auto doc = io::json::parse(R"({
    "algebras": {"B": {"dim": 1, "mult": [[["2/2"]]], "unit": ["-3/-3"]}}
  })");
  const auto first = io::load_fixtures(doc, true);
  REQUIRE(first.ok());
  const std::string once = io::canonical_dump(io::fixture_to_json(first.set));
  CHECK(once.find("\"1\"") != std::string::npos);
  const auto second = io::load_fixtures(io::json::parse(once), true);
  REQUIRE(second.ok());
  CHECK(io::canonical_dump(io::fixture_to_json(second.set)) == once);
}

TEST_CASE("structural defects are errors in both modes", "[fixtures]") {
  SECTION("a dangling coring reference names the reference") {
    const auto doc = io::json::parse(R"({
      "algebras": {"B": {"dim": 1, "mult": [[["1"]]], "unit": ["1"]}},
      "bimodules": {"line": {"dim": 1, "left_algebra": "B", "right_algebra": "B",
                             "left_action": [[["1"]]], "right_action": [[["1"]]]}},
      "comodules": {"x": {"coring": "nope", "module": "line", "rho": [["1"]]}}
    })");
    for (const bool strict : {true, false}) {
      const auto result = io::load_fixtures(doc, strict);
      REQUIRE_FALSE(result.ok());
      CHECK(result.errors.front().message.find("nope") != std::string::npos);
    }
  }

  SECTION("a zero denominator is rejected") {
    const auto doc = io::json::parse(R"({
      "algebras": {"B": {"dim": 1, "mult": [[["1/0"]]]}}
    })");
    CHECK_FALSE(io::load_fixtures(doc, false).ok());
  }

  SECTION("a wrongly shaped delta matrix is rejected") {
    const auto doc = io::json::parse(R"({
      "algebras": {"B": {"dim": 1, "mult": [[["1"]]], "unit": ["1"]}},
      "bimodules": {"c": {"dim": 1, "left_algebra": "B", "right_algebra": "B",
                          "left_action": [[["1"]]], "right_action": [[["1"]]]}},
      "corings": {"bad": {"algebra": "B", "bimodule": "c",
                          "delta": [["1"], ["0"]], "epsilon": [["1"]]}}
    })");
    const auto result = io::load_fixtures(doc, false);
    REQUIRE_FALSE(result.ok());
    CHECK(result.errors.front().where == "corings.bad.delta");
  }

  SECTION("a non-rational entry is rejected") {
    const auto doc = io::json::parse(R"({
      "algebras": {"B": {"dim": 1, "mult": [[["x"]]]}}
    })");
    CHECK_FALSE(io::load_fixtures(doc, false).ok());
  }
}
