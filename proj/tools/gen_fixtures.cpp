// Writes the canonical catalog fixture and report-config files.  The shipped
// fixtures/ directory is exactly this tool's output; a test regenerates the
// catalog in-process and fails on any drift.

#include "coring/catalog.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: coring-gen-fixtures <output-dir>\n";
    return 2;
  }
  const std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);
  for (const auto& name : coring::catalog::fixture_names()) {
    const auto set = coring::catalog::build(name);
    std::ofstream out(dir / (name + ".json"), std::ios::binary);
    out << coring::io::canonical_dump(coring::io::fixture_to_json(set));
    std::cout << "wrote " << (dir / (name + ".json")).string() << "\n";
  }
  for (const auto& name : coring::catalog::config_names()) {
    std::ofstream out(dir / (name + ".json"), std::ios::binary);
    out << coring::io::canonical_dump(coring::catalog::config(name));
    std::cout << "wrote " << (dir / (name + ".json")).string() << "\n";
  }
  return 0;
}
