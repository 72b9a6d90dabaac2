#pragma once

// Axiom-check reports: each law is a named exact pass/fail with a witness
// string (first counterexample) when it fails.  Reports never throw; callers
// decide whether a failure is fatal, a negative verdict, or sabotage-expected.

#include <string>
#include <vector>

namespace coring {

struct CheckItem {
  std::string law;
  bool ok = false;
  std::string witness;  // empty when ok; first counterexample otherwise
};

struct AxiomReport {
  std::vector<CheckItem> items;

  bool ok() const {
    for (const auto& item : items)
      if (!item.ok) return false;
    return true;
  }

  const CheckItem* first_failure() const {
    for (const auto& item : items)
      if (!item.ok) return &item;
    return nullptr;
  }

  void add(std::string law, bool ok, std::string witness = {}) {
    items.push_back({std::move(law), ok, ok ? std::string{} : std::move(witness)});
  }
};

}  // namespace coring
