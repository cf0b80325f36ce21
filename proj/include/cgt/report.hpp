#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cgt {

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string witness;  // empty when pass
};

// Per-axiom pass/fail table.  Axioms are listed in source order; the first
// witness per axiom is recorded but later axioms are still evaluated.
struct ValidationReport {
  std::string subject;
  std::vector<CheckItem> items;

  void add(std::string name, bool pass, std::string witness = "") {
    items.push_back({std::move(name), pass, std::move(witness)});
  }
  void merge(const ValidationReport& other, const std::string& prefix = "") {
    for (const auto& it : other.items)
      items.push_back({prefix.empty() ? it.name : prefix + "." + it.name,
                       it.pass, it.witness});
  }
  bool all_pass() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }
  const CheckItem* first_failure() const {
    for (const auto& it : items)
      if (!it.pass) return &it;
    return nullptr;
  }

  // text: aligned table; machine: check.<module>.<name>=pass|fail lines
  void print(std::ostream& os, bool machine, const std::string& module_tag) const;
};

}  // namespace cgt
